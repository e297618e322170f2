#pragma once

// Hook tableaux: fillings T = T+ |+| T- of a hook shape with entries in
// 1..m+n.  Entries <= m are even, entries > m are odd.  T+ is stored
// row-major (row i has A_i entries) and T- column-major (column j lists
// t_{m+1,j}, t_{m+2,j}, ... top to bottom), which keeps the index
// arithmetic of extraction and jeu de taquin direct.
//
// Semistandard means: rows weakly increase and are strict after an odd
// entry; columns weakly increase and are strict after an even entry.  The
// comparisons run across the row-m line (columns are contiguous through it
// thanks to covariance).  Missing neighbours satisfy every inequality.
//
// Non-semistandard fillings are first-class values: concatenation and the
// straightening oracle need them.  Semistandardness is a predicate.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hooktab/hook_shape.hpp"
#include "hooktab/rational.hpp"

namespace hooktab {

class HookTableau {
 public:
  // plus: m rows, row i of length A_i; minus: n-1 columns, column j of
  // height A'_j.  Throws ShapeMismatch when the grids do not fill the
  // diagram, IndexOutOfRange when an entry leaves 1..m+n.
  HookTableau(HookShape shape, std::vector<std::vector<int>> plus,
              std::vector<std::vector<int>> minus);

  static HookTableau empty(int m, int n);

  const HookShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& plus() const { return plus_; }
  const std::vector<std::vector<int>>& minus() const { return minus_; }

  // Unified accessor, 1-based, total on the diagram: rows 1..m live in T+,
  // rows m+1, m+2, ... cross into T-.  Throws IndexOutOfRange off-diagram.
  int entry(int i, int j) const;
  bool has_box(int i, int j) const { return shape_.contains(i, j); }

  // Multiplicity of each letter, as a weight (eps_i counts letter i,
  // delta_j counts letter m+j, delta_n included).
  SuperWeight content() const;

  bool operator==(const HookTableau& o) const;
  bool operator!=(const HookTableau& o) const { return !(*this == o); }
  // Shape first, then lexicographic on the reading word.
  std::strong_ordering operator<=>(const HookTableau& o) const;

  std::string to_string() const;

 private:
  HookShape shape_;
  std::vector<std::vector<int>> plus_;
  std::vector<std::vector<int>> minus_;
};

bool is_semistandard(const HookTableau& t);

// All semistandard tableaux of the shape, sorted lexicographically by
// reading word.  Fills boxes in reading-word order with branch and bound.
std::vector<HookTableau> enumerate_semistandard(const HookShape& lambda);

// Every filling of the shape with entries in 1..m+n, semistandard or not,
// in reading-word order.  Exponential; meant for desk-scale oracles.
std::vector<HookTableau> enumerate_fillings(const HookShape& lambda);

// The highest weight tableau: row i of T+ holds i, column j of T- holds m+j.
HookTableau trivial_tableau(const HookShape& lambda);

// Box numbering used by the Young symmetrizer: boxes are numbered column by
// column, each column top to bottom straight through the line.  Returns the
// boxes of the diagram in that order as (i, j) pairs, so the box (i, j) gets
// number position+1.
std::vector<std::pair<int, int>> standard_filling_order(const HookShape& lambda);

// The same numbering as a lookup grid mirroring the tableau layout:
// first m ragged rows, then the n-1 below-line columns.
struct StandardFilling {
  std::vector<std::vector<int>> plus;
  std::vector<std::vector<int>> minus;
};
StandardFilling standard_filling(const HookShape& lambda);

// Row-by-row concatenation of T+ parts and column-by-column stacking of T-
// parts; the shape of the result is shape(s) + shape(t).  The result is in
// general not semistandard.  Throws SignatureMismatch on different (m, n).
HookTableau concat(const HookTableau& s, const HookTableau& t);

// Row 1..m left to right, then below-line columns top to bottom.
std::vector<int> reading_word(const HookTableau& t);

// Digits when every entry is < 10, otherwise comma separated.
std::string reading_word_text(const HookTableau& t);

// For typical lambda the semistandard count factors as
// 2^(mn) * (classical count for the row shape A over m letters)
//        * (classical count for the column shape (A', 0) over n letters),
// with the classical counts computed by this module at n = 0.
long long kac_dimension(const HookShape& lambda);

// A finite linear combination of semistandard tableaux over one shape with
// exact rational coefficients.  Zero coefficients are never stored.
class FormalCombination {
 public:
  FormalCombination() = default;

  // Adds c * t; drops the term if the sum cancels.  Throws ShapeMismatch
  // when t's shape differs from existing keys, PreconditionViolation when
  // t is not semistandard.
  void add(const HookTableau& t, const Rational& c);

  const std::map<HookTableau, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FormalCombination& operator+=(const FormalCombination& o);
  FormalCombination operator*(const Rational& c) const;
  bool operator==(const FormalCombination& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::map<HookTableau, Rational> terms_;
};

}  // namespace hooktab
