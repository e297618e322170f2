#include "hooktab/taquin.hpp"

#include <algorithm>

namespace hooktab {

namespace {
std::vector<int> to_multiplicities(const std::vector<int>& cumulative) {
  std::vector<int> b(cumulative.size(), 0);
  for (std::size_t k = 0; k < cumulative.size(); ++k)
    b[k] = cumulative[k] - (k + 1 < cumulative.size() ? cumulative[k + 1] : 0);
  return b;
}

// columns of depth >= d below the line; contiguous because A' decreases
int below_row_length(const std::vector<int>& Ap, int d) {
  int count = 0;
  for (std::size_t j = 0; j < Ap.size(); ++j)
    if (Ap[j] >= d) ++count;
  return count;
}
}  // namespace

SkewTableau::SkewTableau(HookShape lambda, TrivialPair inner,
                         std::vector<std::vector<int>> plus,
                         std::vector<std::vector<int>> minus)
    : lambda_(std::move(lambda)),
      inner_(std::move(inner)),
      plus_(std::move(plus)),
      minus_(std::move(minus)) {
  int m = lambda_.m(), n = lambda_.n();
  if (static_cast<int>(inner_.b.size()) != m ||
      static_cast<int>(inner_.b_prime.size()) != std::max(0, n - 1))
    throw LengthMismatch("inner pair does not fit " + lambda_.to_string());
  for (int x : inner_.b)
    if (x < 0) throw PreconditionViolation("negative inner multiplicity");
  for (int x : inner_.b_prime)
    if (x < 0) throw PreconditionViolation("negative inner multiplicity");
  auto A = lambda_.row_lengths();
  auto Ap = lambda_.column_heights_below();
  auto B = inner_.row_lengths();
  auto Bp = inner_.column_heights_below();
  for (int i = 0; i < m; ++i)
    if (B[i] > A[i])
      throw PreconditionViolation("inner row " + std::to_string(i + 1) +
                                  " leaves the diagram");
  for (std::size_t j = 0; j < Ap.size(); ++j)
    if (Bp[j] > Ap[j])
      throw PreconditionViolation("inner column " + std::to_string(j + 1) +
                                  " leaves the diagram");
  if (static_cast<int>(plus_.size()) != m || minus_.size() != Ap.size())
    throw ShapeMismatch("cell grids do not match the skew diagram");
  for (int i = 0; i < m; ++i)
    if (static_cast<int>(plus_[i].size()) != A[i] - B[i])
      throw ShapeMismatch("row " + std::to_string(i + 1) + " needs " +
                          std::to_string(A[i] - B[i]) + " cells");
  for (std::size_t j = 0; j < Ap.size(); ++j)
    if (static_cast<int>(minus_[j].size()) != Ap[j] - Bp[j])
      throw ShapeMismatch("column " + std::to_string(j + 1) + " needs " +
                          std::to_string(Ap[j] - Bp[j]) + " cells");
  for (const auto& row : plus_)
    for (int e : row)
      if (e < 1 || e > m + n)
        throw IndexOutOfRange("entry " + std::to_string(e) + " outside 1.." +
                              std::to_string(m + n));
  for (const auto& col : minus_)
    for (int e : col)
      if (e < 1 || e > m + n)
        throw IndexOutOfRange("entry " + std::to_string(e) + " outside 1.." +
                              std::to_string(m + n));
}

SkewTableau SkewTableau::from_tableau(const HookTableau& t,
                                      const TrivialPair& p) {
  const HookShape& s = t.shape();
  auto A = s.row_lengths();
  auto Ap = s.column_heights_below();
  auto B = p.row_lengths();
  auto Bp = p.column_heights_below();
  std::vector<std::vector<int>> plus(s.m()), minus(Ap.size());
  for (int i = 1; i <= s.m(); ++i)
    for (int j = (i - 1 < static_cast<int>(B.size()) ? B[i - 1] : 0) + 1;
         j <= A[i - 1]; ++j)
      plus[i - 1].push_back(t.entry(i, j));
  for (std::size_t j = 0; j < Ap.size(); ++j)
    for (int d = (j < Bp.size() ? Bp[j] : 0) + 1; d <= Ap[j]; ++d)
      minus[j].push_back(t.entry(s.m() + d, static_cast<int>(j) + 1));
  return SkewTableau(s, p, std::move(plus), std::move(minus));
}

bool SkewTableau::box_in_diagram(int i, int j) const {
  return lambda_.contains(i, j);
}

bool SkewTableau::box_in_inner(int i, int j) const {
  if (i < 1 || j < 1) return false;
  if (i <= lambda_.m()) {
    auto B = inner_.row_lengths();
    return j <= B[i - 1];
  }
  auto Bp = inner_.column_heights_below();
  if (j > static_cast<int>(Bp.size())) return false;
  return i - lambda_.m() <= Bp[j - 1];
}

bool SkewTableau::has_entry(int i, int j) const {
  return box_in_diagram(i, j) && !box_in_inner(i, j);
}

int SkewTableau::entry(int i, int j) const {
  if (!has_entry(i, j))
    throw IndexOutOfRange("no cell at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
  if (i <= lambda_.m()) {
    auto B = inner_.row_lengths();
    return plus_[i - 1][j - B[i - 1] - 1];
  }
  auto Bp = inner_.column_heights_below();
  return minus_[j - 1][i - lambda_.m() - Bp[j - 1] - 1];
}

long long SkewTableau::cell_count() const {
  long long c = 0;
  for (const auto& row : plus_) c += static_cast<long long>(row.size());
  for (const auto& col : minus_) c += static_cast<long long>(col.size());
  return c;
}

bool SkewTableau::is_skew_semistandard() const {
  int m = lambda_.m();
  auto row_ok = [&](int x, int y) { return x > m ? x < y : x <= y; };
  auto col_ok = [&](int x, int y) { return x <= m ? x < y : x <= y; };
  auto Ap = lambda_.column_heights_below();
  int depth = Ap.empty() ? 0 : Ap[0];
  for (int i = 1; i <= m + depth; ++i)
    for (int j = 1; lambda_.contains(i, j); ++j) {
      if (!has_entry(i, j)) continue;
      if (has_entry(i, j + 1) && !row_ok(entry(i, j), entry(i, j + 1)))
        return false;
      if (has_entry(i + 1, j) && !col_ok(entry(i, j), entry(i + 1, j)))
        return false;
    }
  return true;
}

bool SkewTableau::is_straight() const { return inner_.is_empty(); }

HookTableau SkewTableau::to_tableau() const {
  if (!is_straight())
    throw PreconditionViolation("skew tableau still has an inner region");
  return HookTableau(lambda_, plus_, minus_);
}

bool SkewTableau::operator==(const SkewTableau& o) const {
  return lambda_ == o.lambda_ && inner_ == o.inner_ && plus_ == o.plus_ &&
         minus_ == o.minus_;
}

std::vector<Corner> outer_corners(const SkewTableau& s) {
  int m = s.lambda().m();
  auto B = s.inner().row_lengths();
  auto Bp = s.inner().column_heights_below();
  std::vector<Corner> above, below;
  for (int i = 1; i <= m; ++i) {
    int next = i < m ? B[i] : 0;
    if (B[i - 1] > next) above.push_back(Corner{i, B[i - 1]});
  }
  for (std::size_t j = 0; j < Bp.size(); ++j) {
    int next = j + 1 < Bp.size() ? Bp[j + 1] : 0;
    if (Bp[j] > next)
      below.push_back(Corner{m + Bp[j], static_cast<int>(j) + 1});
  }
  std::sort(above.begin(), above.end(),
            [](const Corner& x, const Corner& y) { return x.j < y.j; });
  std::sort(below.begin(), below.end(),
            [](const Corner& x, const Corner& y) { return x.i < y.i; });
  above.insert(above.end(), below.begin(), below.end());
  return above;
}

std::optional<Corner> greatest_outer_corner(const SkewTableau& s) {
  auto out = outer_corners(s);
  if (out.empty()) return std::nullopt;
  return out.back();
}

std::vector<std::vector<int>> dense_rows(const SkewTableau& s) {
  const HookShape& lambda = s.lambda();
  auto A = lambda.row_lengths();
  auto Ap = lambda.column_heights_below();
  int depth = Ap.empty() ? 0 : Ap[0];
  std::vector<std::vector<int>> g;
  for (int i = 1; i <= lambda.m(); ++i) {
    std::vector<int> row(A[i - 1], 0);
    for (int j = 1; j <= A[i - 1]; ++j)
      if (s.has_entry(i, j)) row[j - 1] = s.entry(i, j);
    g.push_back(std::move(row));
  }
  for (int d = 1; d <= depth; ++d) {
    std::vector<int> row(below_row_length(Ap, d), 0);
    for (int j = 1; j <= static_cast<int>(row.size()); ++j)
      if (s.has_entry(lambda.m() + d, j)) row[j - 1] = s.entry(lambda.m() + d, j);
    g.push_back(std::move(row));
  }
  return g;
}

SlideResult sjdt_slide(const SkewTableau& s, const Corner& c) {
  auto corners = outer_corners(s);
  if (std::find(corners.begin(), corners.end(), c) == corners.end())
    throw NotOuterCorner("(" + std::to_string(c.i) + "," + std::to_string(c.j) +
                         ")");
  const HookShape& lambda = s.lambda();
  int m = lambda.m(), n = lambda.n();
  auto g = dense_rows(s);
  auto in_diagram = [&](int i, int j) { return lambda.contains(i, j); };
  auto cell = [&](int i, int j) -> int& { return g[i - 1][j - 1]; };
  auto filled = [&](int i, int j) {
    return in_diagram(i, j) && cell(i, j) != 0;
  };

  std::vector<SlideFrame> frames;
  Corner star = c;
  for (;;) {
    frames.push_back(SlideFrame{star, g});
    int i = star.i, j = star.j;
    bool right = filled(i, j + 1);
    bool down = filled(i + 1, j);
    if (!right && !down) break;
    bool move_down;
    if (i > m) {
      move_down = down && (!right || cell(i + 1, j) < cell(i, j + 1));
    } else {
      bool move_right =
          right && (!down || cell(i, j + 1) < cell(i + 1, j) ||
                    (cell(i, j + 1) == cell(i + 1, j) && cell(i, j + 1) > m));
      move_down = !move_right;
    }
    if (move_down) {
      cell(i, j) = cell(i + 1, j);
      cell(i + 1, j) = 0;
      star = Corner{i + 1, j};
    } else {
      cell(i, j) = cell(i, j + 1);
      cell(i, j + 1) = 0;
      star = Corner{i, j + 1};
    }
  }

  // the star sits on an outer-rim corner: delete its box from the diagram
  // and the starting corner from the inner region
  auto A = lambda.row_lengths();
  auto Ap = lambda.column_heights_below();
  if (star.i <= m)
    A[star.i - 1] -= 1;
  else
    Ap[star.j - 1] -= 1;
  std::vector<int> a(m), ap(std::max(0, n - 1));
  for (int i = 0; i < m; ++i) a[i] = A[i] - (i + 1 < m ? A[i + 1] : 0);
  for (std::size_t j = 0; j < Ap.size(); ++j)
    ap[j] = Ap[j] - (j + 1 < Ap.size() ? Ap[j + 1] : 0);
  HookShape shrunk(m, n, a, ap);  // may throw CovarianceViolation

  auto B = s.inner().row_lengths();
  auto Bp = s.inner().column_heights_below();
  if (c.i <= m)
    B[c.i - 1] -= 1;
  else
    Bp[c.j - 1] -= 1;
  TrivialPair inner{to_multiplicities(B), to_multiplicities(Bp)};

  std::vector<std::vector<int>> plus(m), minus(Ap.size());
  for (int i = 1; i <= m; ++i)
    for (int j = B[i - 1] + 1; j <= A[i - 1]; ++j)
      plus[i - 1].push_back(cell(i, j));
  for (std::size_t j = 0; j < Ap.size(); ++j)
    for (int d = Bp[j] + 1; d <= Ap[j]; ++d)
      minus[j].push_back(cell(m + d, static_cast<int>(j) + 1));

  return SlideResult{
      SkewTableau(shrunk, inner, std::move(plus), std::move(minus)),
      std::move(frames)};
}

MaxjdtResult maxjdt(const SkewTableau& s) {
  SkewTableau state = s;
  std::vector<SlideFrame> frames;
  while (auto c = greatest_outer_corner(state)) {
    SlideResult r = sjdt_slide(state, *c);
    frames.insert(frames.end(), r.frames.begin(), r.frames.end());
    state = r.state;
  }
  return MaxjdtResult{state.to_tableau(), std::move(frames)};
}

std::optional<Corner> corner_successor_check(const SkewTableau& s,
                                             const Corner& c) {
  auto out = outer_corners(s);
  if (out.empty() || !(out.back() == c))
    throw PreconditionViolation("not the greatest outer corner");
  int m = s.lambda().m();
  std::vector<Corner> above, below;
  for (const auto& x : out) (x.i <= m ? above : below).push_back(x);
  if (c.i > m) {
    if (c.j > 1) return Corner{c.i, c.j - 1};
    int prev = below.size() >= 2 ? below[below.size() - 2].i : 0;
    if (std::max(prev, m) < c.i - 1) return Corner{c.i - 1, 1};
    if (prev == c.i - 1) return below[below.size() - 2];
    // the below-line inner region is exhausted
    if (!above.empty()) return above.back();
    return std::nullopt;
  }
  if (c.i == 1 && c.j == 1) return std::nullopt;
  if (c.i > 1) return Corner{c.i - 1, c.j};
  int prevj = above.size() >= 2 ? above[above.size() - 2].j : 0;
  if (prevj < c.j - 1) return Corner{1, c.j - 1};
  return above[above.size() - 2];
}

}  // namespace hooktab
