#include "hooktab/hook_tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hooktab {

HookTableau::HookTableau(HookShape shape, std::vector<std::vector<int>> plus,
                         std::vector<std::vector<int>> minus)
    : shape_(std::move(shape)), plus_(std::move(plus)), minus_(std::move(minus)) {
  auto rows = shape_.row_lengths();
  auto below = shape_.column_heights_below();
  if (static_cast<int>(plus_.size()) != shape_.m())
    throw ShapeMismatch("plus needs " + std::to_string(shape_.m()) + " rows");
  for (int i = 0; i < shape_.m(); ++i)
    if (static_cast<int>(plus_[i].size()) != rows[i])
      throw ShapeMismatch("row " + std::to_string(i + 1) + " needs " +
                          std::to_string(rows[i]) + " entries, got " +
                          std::to_string(plus_[i].size()));
  if (minus_.size() != below.size())
    throw ShapeMismatch("minus needs " + std::to_string(below.size()) + " columns");
  for (std::size_t j = 0; j < below.size(); ++j)
    if (static_cast<int>(minus_[j].size()) != below[j])
      throw ShapeMismatch("column " + std::to_string(j + 1) + " needs " +
                          std::to_string(below[j]) + " entries, got " +
                          std::to_string(minus_[j].size()));
  int top = shape_.m() + shape_.n();
  auto check = [&](int e) {
    if (e < 1 || e > top)
      throw IndexOutOfRange("entry " + std::to_string(e) + " outside 1.." +
                            std::to_string(top));
  };
  for (const auto& row : plus_)
    for (int e : row) check(e);
  for (const auto& col : minus_)
    for (int e : col) check(e);
}

HookTableau HookTableau::empty(int m, int n) {
  return HookTableau(HookShape::zero(m, n), std::vector<std::vector<int>>(m),
                     std::vector<std::vector<int>>(std::max(0, n - 1)));
}

int HookTableau::entry(int i, int j) const {
  if (!shape_.contains(i, j))
    throw IndexOutOfRange("no box at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
  if (i <= shape_.m()) return plus_[i - 1][j - 1];
  return minus_[j - 1][i - shape_.m() - 1];
}

SuperWeight HookTableau::content() const {
  SuperWeight w;
  w.eps.assign(shape_.m(), 0);
  w.delta.assign(shape_.n(), 0);
  auto count = [&](int e) {
    if (e <= shape_.m())
      ++w.eps[e - 1];
    else
      ++w.delta[e - shape_.m() - 1];
  };
  for (const auto& row : plus_)
    for (int e : row) count(e);
  for (const auto& col : minus_)
    for (int e : col) count(e);
  return w;
}

bool HookTableau::operator==(const HookTableau& o) const {
  return shape_ == o.shape_ && plus_ == o.plus_ && minus_ == o.minus_;
}

std::strong_ordering HookTableau::operator<=>(const HookTableau& o) const {
  if (auto c = shape_ <=> o.shape_; c != 0) return c;
  return reading_word(*this) <=> reading_word(o);
}

std::string HookTableau::to_string() const {
  return shape_.to_string() + " " + reading_word_text(*this);
}

bool is_semistandard(const HookTableau& t) {
  const HookShape& s = t.shape();
  int m = s.m();
  auto rows = s.row_lengths();
  auto below = s.column_heights_below();
  // row pairs: strict after an odd left entry
  auto row_ok = [&](int x, int y) { return x > m ? x < y : x <= y; };
  // column pairs: strict after an even upper entry
  auto col_ok = [&](int x, int y) { return x <= m ? x < y : x <= y; };
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j + 1 <= rows[i - 1]; ++j)
      if (!row_ok(t.entry(i, j), t.entry(i, j + 1))) return false;
  for (std::size_t j = 0; j < below.size(); ++j)
    for (int d = 1; d <= below[j]; ++d)
      if (j + 1 < below.size() && below[j + 1] >= d)
        if (!row_ok(t.entry(m + d, static_cast<int>(j) + 1),
                    t.entry(m + d, static_cast<int>(j) + 2)))
          return false;
  int cols = s.column_count();
  for (int k = 1; k <= cols; ++k) {
    int h = s.column_height(k);
    for (int i = 1; i + 1 <= h; ++i)
      if (!col_ok(t.entry(i, k), t.entry(i + 1, k))) return false;
  }
  return true;
}

namespace {
// reading-order positions: rows 1..m left to right, then below-line columns
// top to bottom
std::vector<std::pair<int, int>> reading_order(const HookShape& s) {
  std::vector<std::pair<int, int>> out;
  auto rows = s.row_lengths();
  auto below = s.column_heights_below();
  for (int i = 1; i <= s.m(); ++i)
    for (int j = 1; j <= rows[i - 1]; ++j) out.emplace_back(i, j);
  for (std::size_t j = 0; j < below.size(); ++j)
    for (int d = 1; d <= below[j]; ++d)
      out.emplace_back(s.m() + d, static_cast<int>(j) + 1);
  return out;
}

HookTableau from_grid(const HookShape& s,
                      const std::vector<std::vector<int>>& grid) {
  // grid mirrors reading order: m ragged rows then n-1 ragged columns
  std::vector<std::vector<int>> plus(grid.begin(), grid.begin() + s.m());
  std::vector<std::vector<int>> minus(grid.begin() + s.m(), grid.end());
  return HookTableau(s, std::move(plus), std::move(minus));
}

// shared backtracking enumerator; constrained = false lists every filling
std::vector<HookTableau> enumerate_impl(const HookShape& s, bool constrained) {
  int m = s.m();
  auto rows = s.row_lengths();
  auto below = s.column_heights_below();
  std::vector<std::vector<int>> grid(m + below.size());
  for (int i = 0; i < m; ++i) grid[i].assign(rows[i], 0);
  for (std::size_t j = 0; j < below.size(); ++j)
    grid[m + j].assign(below[j], 0);

  auto cell = [&](int i, int j) -> int& {
    return i <= m ? grid[i - 1][j - 1] : grid[m + j - 1][i - m - 1];
  };
  auto row_ok = [&](int x, int y) { return x > m ? x < y : x <= y; };
  auto col_ok = [&](int x, int y) { return x <= m ? x < y : x <= y; };

  auto order = reading_order(s);
  std::vector<HookTableau> out;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == order.size()) {
      out.push_back(from_grid(s, grid));
      return;
    }
    auto [i, j] = order[k];
    for (int e = 1; e <= s.m() + s.n(); ++e) {
      if (constrained) {
        if (j > 1 && s.contains(i, j - 1) && !row_ok(cell(i, j - 1), e)) continue;
        if (i > 1 && s.contains(i - 1, j) && !col_ok(cell(i - 1, j), e)) continue;
      }
      cell(i, j) = e;
      fill(k + 1);
    }
    cell(i, j) = 0;
  };
  fill(0);
  return out;
}
}  // namespace

std::vector<HookTableau> enumerate_semistandard(const HookShape& lambda) {
  return enumerate_impl(lambda, true);
}

std::vector<HookTableau> enumerate_fillings(const HookShape& lambda) {
  return enumerate_impl(lambda, false);
}

HookTableau trivial_tableau(const HookShape& lambda) {
  auto rows = lambda.row_lengths();
  auto below = lambda.column_heights_below();
  std::vector<std::vector<int>> plus(lambda.m());
  for (int i = 0; i < lambda.m(); ++i) plus[i].assign(rows[i], i + 1);
  std::vector<std::vector<int>> minus(below.size());
  for (std::size_t j = 0; j < below.size(); ++j)
    minus[j].assign(below[j], lambda.m() + static_cast<int>(j) + 1);
  return HookTableau(lambda, std::move(plus), std::move(minus));
}

std::vector<std::pair<int, int>> standard_filling_order(const HookShape& lambda) {
  std::vector<std::pair<int, int>> out;
  int cols = lambda.column_count();
  for (int k = 1; k <= cols; ++k) {
    int h = lambda.column_height(k);
    for (int i = 1; i <= h; ++i) out.emplace_back(i, k);
  }
  return out;
}

StandardFilling standard_filling(const HookShape& lambda) {
  auto rows = lambda.row_lengths();
  auto below = lambda.column_heights_below();
  StandardFilling f;
  f.plus.resize(lambda.m());
  for (int i = 0; i < lambda.m(); ++i) f.plus[i].assign(rows[i], 0);
  f.minus.resize(below.size());
  for (std::size_t j = 0; j < below.size(); ++j) f.minus[j].assign(below[j], 0);
  int next = 1;
  for (auto [i, j] : standard_filling_order(lambda)) {
    if (i <= lambda.m())
      f.plus[i - 1][j - 1] = next++;
    else
      f.minus[j - 1][i - lambda.m() - 1] = next++;
  }
  return f;
}

HookTableau concat(const HookTableau& s, const HookTableau& t) {
  if (s.shape().m() != t.shape().m() || s.shape().n() != t.shape().n())
    throw SignatureMismatch(s.shape().to_string() + " vs " +
                            t.shape().to_string());
  std::vector<std::vector<int>> plus(s.plus());
  for (int i = 0; i < s.shape().m(); ++i)
    plus[i].insert(plus[i].end(), t.plus()[i].begin(), t.plus()[i].end());
  std::vector<std::vector<int>> minus(s.minus());
  for (std::size_t j = 0; j < minus.size(); ++j)
    minus[j].insert(minus[j].end(), t.minus()[j].begin(), t.minus()[j].end());
  return HookTableau(shape_sum(s.shape(), t.shape()), std::move(plus),
                     std::move(minus));
}

std::vector<int> reading_word(const HookTableau& t) {
  std::vector<int> w;
  for (const auto& row : t.plus()) w.insert(w.end(), row.begin(), row.end());
  for (const auto& col : t.minus()) w.insert(w.end(), col.begin(), col.end());
  return w;
}

std::string reading_word_text(const HookTableau& t) {
  auto w = reading_word(t);
  bool digits = std::all_of(w.begin(), w.end(), [](int e) { return e < 10; });
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k && !digits) os << ",";
    os << w[k];
  }
  return os.str();
}

long long kac_dimension(const HookShape& lambda) {
  // classical semistandard count over k letters for weakly decreasing row
  // lengths, through this module's own enumerator at n = 0
  auto classical_count = [](std::vector<int> row_lens, int k) -> long long {
    if (k == 0) return 1;
    row_lens.resize(k, 0);
    std::vector<int> mult(k, 0);
    for (int i = 0; i < k; ++i)
      mult[i] = row_lens[i] - (i + 1 < k ? row_lens[i + 1] : 0);
    return static_cast<long long>(
        enumerate_semistandard(HookShape(k, 0, mult, {})).size());
  };
  long long even = classical_count(lambda.row_lengths(), lambda.m());
  long long odd = classical_count(lambda.column_heights_below(), lambda.n());
  return (1LL << (lambda.m() * lambda.n())) * even * odd;
}

void FormalCombination::add(const HookTableau& t, const Rational& c) {
  if (!terms_.empty() && !(terms_.begin()->first.shape() == t.shape()))
    throw ShapeMismatch("combination mixes shapes " +
                        terms_.begin()->first.shape().to_string() + " and " +
                        t.shape().to_string());
  if (!is_semistandard(t))
    throw PreconditionViolation("combination keys must be semistandard: " +
                                t.to_string());
  Rational& slot = terms_[t];
  slot += c;
  if (slot == 0) terms_.erase(t);
}

FormalCombination& FormalCombination::operator+=(const FormalCombination& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

FormalCombination FormalCombination::operator*(const Rational& c) const {
  FormalCombination out;
  if (c == 0) return out;
  for (const auto& [t, x] : terms_) out.terms_.emplace(t, x * c);
  return out;
}

std::string FormalCombination::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    os << rational_to_string(c) << "*" << reading_word_text(t);
    first = false;
  }
  return os.str();
}

}  // namespace hooktab
