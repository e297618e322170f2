#pragma once

// Trivial pairs and the push/pull bijection.
//
// A trivial pair (S+, S-) is a pair of trivial tableaux sitting top-left in
// T: S+ has row lengths B_i and row i filled with i, S- has column heights
// B'_j and column j filled with m+j.  The pair is recorded by column
// multiplicities (b, b') exactly like a shape, but the pair need not be
// covariant.  A pair is extractable from T when removing it and shifting
// the remainder left/up leaves a semistandard tableau; the four conditions
// below are the workable characterization.
//
// The largest extractable pair exists and is unique (the componentwise max
// of extractable pairs is extractable); push removes it.  push is a
// bijection from SS^lambda onto the disjoint union of QS^mu over covariant
// mu <= lambda, with pull as the inverse.

#include <utility>
#include <vector>

#include "hooktab/hook_shape.hpp"
#include "hooktab/hook_tableau.hpp"

namespace hooktab {

struct TrivialPair {
  std::vector<int> b;        // m entries, shape of S+
  std::vector<int> b_prime;  // n-1 entries, shape of S-

  static TrivialPair empty(int m, int n);
  bool is_empty() const;

  std::vector<int> row_lengths() const;           // B_i
  std::vector<int> column_heights_below() const;  // B'_j

  bool operator==(const TrivialPair& o) const = default;
};

// Componentwise max and componentwise order on (b, b').
TrivialPair pair_join(const TrivialPair& p, const TrivialPair& q);
bool pair_leq(const TrivialPair& p, const TrivialPair& q);

// The four extraction conditions, with the missing-member convention:
//   E1  b_i <= a_i; row i starts with B_i copies of i; the shifted
//       comparisons t(i, j+B_i) <= t(i+1, j+B_{i+1}) hold, strictly when
//       the upper entry is even.
//   E2  b'_j <= a'_j; column j of T- starts with B'_j copies of m+j; the
//       shifted below-line row comparisons t(i+B'_j, j) < t(i+B'_{j+1}, j+1)
//       hold.
//   E3  (a_m - b_m) - sup{ j : a'_j > b'_j } >= 0.
//   E4  t(m, j+B_m) <= t(m + 1 + B'_j, j) for every below-line column j.
// Out-of-range pairs (b not <= a componentwise) report false.
bool is_extractable(const HookTableau& t, const TrivialPair& p);

// Unique componentwise-maximal extractable pair, by greedy growth: keep
// incrementing single coordinates while the pair stays extractable.
TrivialPair largest_extractable_pair(const HookTableau& t);

// Exhaustive join over all extractable pairs below (a, a'); the cross-check
// for the greedy result.
TrivialPair largest_extractable_pair_exhaustive(const HookTableau& t);

bool is_quasistandard(const HookTableau& t);

// Removes the largest extractable pair and shifts rows left, columns up:
//   u(i,j) = t(i, j+B_i) for i <= m,  u(i,j) = t(i+B'_j, j) for i > m.
// Returns the landing shape mu together with the shifted tableau.
std::pair<HookShape, HookTableau> push(const HookTableau& t);

// Inverse: prepend the trivial prefix of shape lambda - mu to U.  Accepts
// every covariant mu <= lambda, even when lambda - mu is not itself a shape.
// Throws NotComparable when mu is not <= lambda, NotQuasistandard when U
// has a nonempty extractable pair.
HookTableau pull(const HookTableau& u, const HookShape& lambda);

// Largest covariant nu such that t = concat(trivial_tableau(nu), U) for a
// tableau U of covariant shape lambda - nu; returns (nu, U).
std::pair<HookShape, HookTableau> strip_trivial(const HookTableau& t);

// Semistandard tableaux that are quasistandard, in enumeration order.
std::vector<HookTableau> enumerate_quasistandard(const HookShape& mu);

struct BijectionReport {
  HookShape shape;
  long long ss_count = 0;
  std::vector<std::pair<HookShape, long long>> qs_counts;  // mu, |QS^mu| hit
  bool pass = false;
};

// Checks that push maps SS^lambda bijectively onto the union of QS^mu over
// covariant mu <= lambda and that the counts add up.
BijectionReport verify_bijection(const HookShape& lambda);

}  // namespace hooktab
