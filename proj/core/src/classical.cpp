#include "hooktab/classical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hooktab/errors.hpp"

namespace hooktab::classical {

std::vector<int> row_lengths(const std::vector<int>& mult) {
  std::vector<int> rows(mult.size(), 0);
  int acc = 0;
  for (int k = static_cast<int>(mult.size()) - 1; k >= 0; --k) {
    acc += mult[k];
    rows[k] = acc;
  }
  return rows;
}

long long box_count(const std::vector<int>& mult) {
  long long total = 0;
  for (std::size_t k = 0; k < mult.size(); ++k)
    total += static_cast<long long>(k + 1) * mult[k];
  return total;
}

std::vector<std::vector<int>> enumerate_mult(int m, int max_boxes) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(std::max(0, m - 1), 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == static_cast<int>(c.size())) {
      out.push_back(c);
      return;
    }
    for (int v = 0; v * (k + 1) <= left; ++v) {
      c[k] = v;
      rec(k + 1, left - v * (k + 1));
    }
    c[k] = 0;
  };
  rec(0, max_boxes);
  return out;
}

namespace {
// 1-based entry access; 0 marks a missing member
int cell(const Tableau& t, int i, int j) {
  if (i < 1 || j < 1 || i > static_cast<int>(t.rows.size())) return 0;
  if (j > static_cast<int>(t.rows[i - 1].size())) return 0;
  return t.rows[i - 1][j - 1];
}
}  // namespace

bool is_semistandard(const Tableau& t, int m) {
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.rows[r].empty()) return false;
    if (r > 0 && t.rows[r].size() > t.rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      const int e = t.rows[r][c];
      if (e < 1 || e > m) return false;
      if (c > 0 && t.rows[r][c - 1] > e) return false;
      if (r > 0 && t.rows[r - 1][c] >= e) return false;
    }
  }
  return true;
}

std::vector<Tableau> enumerate_semistandard(const std::vector<int>& mult,
                                            int m) {
  std::vector<int> lens;
  for (int l : row_lengths(mult))
    if (l > 0) lens.push_back(l);
  Tableau t;
  t.rows.resize(lens.size());
  for (std::size_t r = 0; r < lens.size(); ++r) t.rows[r].assign(lens[r], 0);

  std::vector<Tableau> out;
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == static_cast<int>(lens.size())) {
      out.push_back(t);
      return;
    }
    const auto [nr, nc] = c + 1 < lens[r] ? std::pair{r, c + 1}
                                          : std::pair{r + 1, 0};
    int lo = 1;
    if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
    for (int e = lo; e <= m; ++e) {
      t.rows[r][c] = e;
      rec(nr, nc);
    }
    t.rows[r][c] = 0;
  };
  if (lens.empty())
    out.push_back(t);
  else
    rec(0, 0);
  return out;
}

Tableau trivial(const std::vector<int>& nu) {
  Tableau t;
  const auto lens = row_lengths(nu);
  for (std::size_t r = 0; r < lens.size(); ++r)
    if (lens[r] > 0) t.rows.push_back(std::vector<int>(lens[r], r + 1));
  return t;
}

bool extractable(const Tableau& t, const std::vector<int>& lambda_mult,
                 const std::vector<int>& nu) {
  if (nu.size() != lambda_mult.size())
    throw LengthMismatch("trivial shape length does not match lambda");
  const int h = static_cast<int>(nu.size());
  for (int k = 0; k < h; ++k)
    if (nu[k] < 0 || nu[k] > lambda_mult[k]) return false;
  const auto nrows = row_lengths(nu);
  const auto lrows = row_lengths(lambda_mult);

  // condition 1: the nu prefix of each row is trivially filled
  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= nrows[i - 1]; ++j)
      if (cell(t, i, j) != i) return false;

  // condition 2': shifted strict comparisons against the next row, missing
  // members passing
  for (int i = 1; i < h; ++i) {
    for (int j = std::max(1, nrows[i]); j <= lrows[i]; ++j) {
      const int x = cell(t, i, j + nu[i - 1]);
      const int y = cell(t, i + 1, j);
      if (x != 0 && y != 0 && x >= y) return false;
    }
  }
  return true;
}

std::vector<int> largest_trivial(const Tableau& t,
                                 const std::vector<int>& lambda_mult) {
  const int h = static_cast<int>(lambda_mult.size());
  std::vector<int> join(h, 0);  // row lengths of the join
  std::vector<int> nu(h, 0);
  for (;;) {
    if (extractable(t, lambda_mult, nu)) {
      const auto nrows = row_lengths(nu);
      for (int k = 0; k < h; ++k) join[k] = std::max(join[k], nrows[k]);
    }
    int k = 0;
    for (; k < h; ++k) {
      if (nu[k] < lambda_mult[k]) {
        ++nu[k];
        break;
      }
      nu[k] = 0;
    }
    if (k == h) break;
  }
  std::vector<int> best(h, 0);
  for (int k = 0; k < h; ++k)
    best[k] = join[k] - (k + 1 < h ? join[k + 1] : 0);
  if (!extractable(t, lambda_mult, best))
    throw InconsistentSystem("join of extractable trivial shapes failed");
  return best;
}

std::pair<std::vector<int>, Tableau> push(const Tableau& t,
                                          const std::vector<int>& lambda_mult) {
  const auto nu = largest_trivial(t, lambda_mult);
  const auto nrows = row_lengths(nu);
  std::vector<int> mu(lambda_mult.size());
  for (std::size_t k = 0; k < mu.size(); ++k) mu[k] = lambda_mult[k] - nu[k];
  Tableau out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const int cut = r < nrows.size() ? nrows[r] : 0;
    if (cut >= static_cast<int>(t.rows[r].size())) continue;
    out.rows.emplace_back(t.rows[r].begin() + cut, t.rows[r].end());
  }
  return {mu, out};
}

Skew make_skew(const Tableau& t, const std::vector<int>& lambda_mult,
               const std::vector<int>& inner_mult) {
  Skew s;
  s.outer_rows = row_lengths(lambda_mult);
  s.inner_rows = row_lengths(inner_mult);
  s.inner_rows.resize(s.outer_rows.size(), 0);
  for (std::size_t r = 0; r < s.outer_rows.size(); ++r) {
    std::vector<int> row;
    for (int j = s.inner_rows[r] + 1; j <= s.outer_rows[r]; ++j)
      row.push_back(cell(t, static_cast<int>(r) + 1, j));
    s.cells.push_back(std::move(row));
  }
  return s;
}

std::vector<std::pair<int, int>> skew_outer_corners(const Skew& s) {
  std::vector<std::pair<int, int>> corners;
  const int h = static_cast<int>(s.inner_rows.size());
  for (int i = 1; i <= h; ++i) {
    const int len = s.inner_rows[i - 1];
    const int below = i < h ? s.inner_rows[i] : 0;
    if (len > 0 && len > below) corners.emplace_back(i, len);
  }
  std::sort(corners.begin(), corners.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return corners;
}

Skew jdt_slide(const Skew& s, int ci, int cj) {
  const auto corners = skew_outer_corners(s);
  if (std::find(corners.begin(), corners.end(), std::pair{ci, cj}) ==
      corners.end())
    throw NotOuterCorner("slide must start at an inner-region corner");

  const int h = static_cast<int>(s.outer_rows.size());
  const int w = *std::max_element(s.outer_rows.begin(), s.outer_rows.end());
  std::vector<std::vector<int>> grid(h, std::vector<int>(w + 1, 0));
  for (int i = 1; i <= h; ++i)
    for (int j = s.inner_rows[i - 1] + 1; j <= s.outer_rows[i - 1]; ++j)
      grid[i - 1][j - 1] = s.cells[i - 1][j - s.inner_rows[i - 1] - 1];

  int hi = ci, hj = cj;
  for (;;) {
    const int below =
        hi + 1 <= h && hj <= s.outer_rows[hi] ? grid[hi][hj - 1] : 0;
    const int right =
        hj + 1 <= s.outer_rows[hi - 1] ? grid[hi - 1][hj] : 0;
    if (below == 0 && right == 0) break;
    if (right == 0 || (below != 0 && below <= right)) {
      grid[hi - 1][hj - 1] = below;
      grid[hi][hj - 1] = 0;
      ++hi;
    } else {
      grid[hi - 1][hj - 1] = right;
      grid[hi - 1][hj] = 0;
      ++hj;
    }
  }

  Skew out;
  out.outer_rows = s.outer_rows;
  out.outer_rows[hi - 1] -= 1;
  out.inner_rows = s.inner_rows;
  out.inner_rows[ci - 1] -= 1;
  for (int i = 1; i <= h; ++i) {
    std::vector<int> row;
    for (int j = out.inner_rows[i - 1] + 1; j <= out.outer_rows[i - 1]; ++j)
      row.push_back(grid[i - 1][j - 1]);
    out.cells.push_back(std::move(row));
  }
  return out;
}

Tableau jdt_rectify(const Skew& s) {
  Skew cur = s;
  for (;;) {
    const auto corners = skew_outer_corners(cur);
    if (corners.empty()) break;
    cur = jdt_slide(cur, corners.back().first, corners.back().second);
  }
  Tableau t;
  for (auto& row : cur.cells)
    if (!row.empty()) t.rows.push_back(std::move(row));
  return t;
}

namespace {
// cells read column by column, with row and column position groups
struct CellOrder {
  std::vector<std::pair<int, int>> cells;          // (row, column), 1-based
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols;
};

CellOrder cell_order(const std::vector<int>& lambda_mult) {
  const auto lens = row_lengths(lambda_mult);
  const int width = lens.empty() ? 0 : lens[0];
  CellOrder o;
  o.rows.resize(lens.size());
  for (int k = 1; k <= width; ++k) {
    std::vector<int> col;
    for (int i = 1; i <= static_cast<int>(lens.size()) && lens[i - 1] >= k;
         ++i) {
      col.push_back(static_cast<int>(o.cells.size()));
      o.rows[i - 1].push_back(static_cast<int>(o.cells.size()));
      o.cells.emplace_back(i, k);
    }
    o.cols.push_back(std::move(col));
  }
  return o;
}

void ctensor_add(CTensor& t, const CWord& w, const Rational& c) {
  auto [it, inserted] = t.try_emplace(w, Rational(0));
  it->second += c;
  if (it->second == 0) t.erase(it);
}

int perm_sign(const std::vector<int>& sigma) {
  int count = 0;
  for (std::size_t k = 0; k < sigma.size(); ++k)
    for (std::size_t l = k + 1; l < sigma.size(); ++l)
      if (sigma[k] > sigma[l]) ++count;
  return (count & 1) ? -1 : 1;
}

std::vector<std::pair<std::vector<int>, int>> group_perms(
    const std::vector<std::vector<int>>& blocks, int length) {
  std::vector<int> id(length);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out{{id, 1}};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> idx(block.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::pair<std::vector<int>, int>> next;
    do {
      const int sg = perm_sign(idx);
      for (const auto& [base, s0] : out) {
        auto p = base;
        for (std::size_t k = 0; k < block.size(); ++k)
          p[block[k]] = block[idx[k]];
        next.emplace_back(std::move(p), s0 * sg);
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
    out = std::move(next);
  }
  return out;
}

CTensor apply_group(const CTensor& t,
                    const std::vector<std::vector<int>>& blocks, int length,
                    bool signed_sum) {
  CTensor out;
  for (const auto& [sigma, sg] : group_perms(blocks, length)) {
    for (const auto& [w, c] : t) {
      CWord nw(w.size());
      for (std::size_t k = 0; k < w.size(); ++k) nw[k] = w[sigma[k]];
      ctensor_add(out, nw, signed_sum ? c * sg : c);
    }
  }
  return out;
}

CWord word_of(const Tableau& t, const CellOrder& o) {
  CWord w;
  for (const auto& [i, j] : o.cells) w.push_back(cell(t, i, j));
  return w;
}
}  // namespace

CTensor young_vector(const Tableau& t, const std::vector<int>& lambda_mult) {
  // Columns first, rows second, mirroring the graded young_vector: the
  // exchange identity only holds exactly when repeated column entries die
  // before the row symmetrization spreads them across columns.
  const CellOrder o = cell_order(lambda_mult);
  const int length = static_cast<int>(o.cells.size());
  CTensor base;
  ctensor_add(base, word_of(t, o), Rational(1));
  return apply_group(apply_group(base, o.cols, length, true), o.rows, length,
                     false);
}

bool plucker_check(const Tableau& t, const std::vector<int>& lambda_mult,
                   int j, int q) {
  const CellOrder o = cell_order(lambda_mult);
  if (j < 1 || j + 1 > static_cast<int>(o.cols.size()))
    throw IndexOutOfRange("column pair outside the diagram");
  const auto& colj = o.cols[j - 1];
  const auto& colnext = o.cols[j];
  if (q < 1 || q > static_cast<int>(colnext.size()) ||
      q > static_cast<int>(colj.size()))
    throw IndexOutOfRange("exchange depth outside the columns");

  // exchanged filling for one subset, cells swapped pairwise in order
  const auto exchanged = [&](const std::vector<int>& subset) {
    Tableau u = t;
    for (int k = 0; k < q; ++k) {
      const auto [xi, xj] = o.cells[subset[k]];
      const auto [yi, yj] = o.cells[colnext[k]];
      std::swap(u.rows[xi - 1][xj - 1], u.rows[yi - 1][yj - 1]);
    }
    return u;
  };

  CTensor rhs;
  std::vector<int> pick(q);
  std::iota(pick.begin(), pick.end(), 0);
  const int n = static_cast<int>(colj.size());
  for (;;) {
    std::vector<int> subset(q);
    for (int k = 0; k < q; ++k) subset[k] = colj[pick[k]];
    for (const auto& [w, c] : young_vector(exchanged(subset), lambda_mult))
      ctensor_add(rhs, w, c);
    int k = q - 1;
    while (k >= 0 && pick[k] == n - q + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int l = k + 1; l < q; ++l) pick[l] = pick[l - 1] + 1;
  }
  return young_vector(t, lambda_mult) == rhs;
}

}  // namespace hooktab::classical
