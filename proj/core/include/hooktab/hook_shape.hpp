#pragma once

// Hook shapes for sl(m,n).
//
// A hook shape is a Ferrer-like diagram made of an ordinary m-row diagram
// F+ together with a transposed diagram F- hung below the first columns.
// It is stored as column multiplicities: a has m entries (a_i = number of
// columns of height i in F+) and a' has n-1 entries (a'_j = multiplicity
// below the line).  Everything else is derived:
//
//   A_i  = a_i + ... + a_m      row lengths of F+ (weakly decreasing)
//   A'_j = a'_j + ... + a'_{n-1}  column heights of F- (weakly decreasing)
//   j0   = largest j with a'_j > 0 (0 when a' vanishes)
//
// The covariance condition (*) is  a_m >= j0 : the m-th row of F+ must be
// at least as long as the widest below-line column, so columns never have
// holes across the line.  The empty-set supremum is 0 throughout.
//
// n = 0 is the classical case (a' empty, no condition); m = 0 is rejected.

#include <compare>
#include <string>
#include <vector>

#include "hooktab/errors.hpp"

namespace hooktab {

struct SuperWeight {
  std::vector<long long> eps;    // m coefficients of the even part
  std::vector<long long> delta;  // n coefficients of the odd part

  // Weights are defined modulo the supertrace direction (sum of eps minus
  // sum of delta); equality shifts both sides to the delta_n = 0 gauge.
  bool equals_mod_supertrace(const SuperWeight& other) const;
  SuperWeight operator+(const SuperWeight& other) const;
};

class HookShape {
 public:
  // Throws LengthMismatch when the list sizes disagree with (m, n),
  // CovarianceViolation when (*) fails, PreconditionViolation for m <= 0
  // or negative multiplicities.
  HookShape(int m, int n, std::vector<int> a, std::vector<int> a_prime);

  static HookShape zero(int m, int n);
  // The padding direction: a = (0, ..., 0, 1), a' = 0.
  static HookShape eta(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<int>& a() const { return a_; }
  const std::vector<int>& a_prime() const { return ap_; }

  std::vector<int> row_lengths() const;          // A_1..A_m
  std::vector<int> column_heights_below() const; // A'_1..A'_{n-1}
  int j0() const;
  long long box_count() const;

  int column_count() const;           // columns of the full diagram
  int column_height(int k) const;     // height of full column k, 1-based
  bool contains(int i, int j) const;  // 1-based box membership, i can cross m

  SuperWeight weight() const;  // eps_i = A_i, delta_j = A'_j, delta_n = 0
  bool is_typical() const;

  bool is_zero() const;
  bool operator==(const HookShape& o) const;
  bool operator!=(const HookShape& o) const { return !(*this == o); }
  // Total order: (m, n) then lexicographic on a then a_prime.
  std::strong_ordering operator<=>(const HookShape& o) const;

  std::string to_string() const;

 private:
  int m_;
  int n_;
  std::vector<int> a_;
  std::vector<int> ap_;
};

// Componentwise comparison on (a, a'); throws SignatureMismatch when the
// two shapes live in different sl(m,n).
bool shape_leq(const HookShape& mu, const HookShape& lambda);

// lambda - mu is again a hook shape exactly when
// a_m - b_m >= sup{ j : a'_j > b'_j }.  Throws NotComparable unless mu <= lambda.
bool diff_is_shape(const HookShape& lambda, const HookShape& mu);

// Smallest k such that lambda - mu + k*eta is covariant.
int min_eta_padding(const HookShape& lambda, const HookShape& mu);

// Componentwise sum; always covariant when both arguments are.
HookShape shape_sum(const HookShape& lambda, const HookShape& mu);

// Componentwise difference as a shape; throws NotComparable when mu is not
// <= lambda and CovarianceViolation when the difference violates (*).
HookShape shape_diff(const HookShape& lambda, const HookShape& mu);

// The dual dominant-weight data for sl(n,m):
//   dual_a_j = a'_{n-j} (1 <= j <= n-1),  dual_a_n = a_m - j0,
//   dual_a'_i = a_{m-i} (1 <= i <= m-1).
// The result is integral dominant for sl(n,m) but need not satisfy (*),
// so it is returned as raw vectors rather than a HookShape.
struct DualShapeData {
  int m;  // = n of the source
  int n;  // = m of the source
  std::vector<int> a;
  std::vector<int> a_prime;
};
DualShapeData dual_shape(const HookShape& lambda);

// All covariant shapes with at most max_boxes boxes, sorted lexicographically
// on the concatenation a || a'.
std::vector<HookShape> enumerate_shapes(int m, int n, int max_boxes);

}  // namespace hooktab
