#pragma once

// Independent re-derivations used as test oracles.  Each helper recomputes
// a library answer from the raw definitions through a deliberately
// different route (unified dense grids, quantifier-literal predicates,
// brute force over candidates) so that agreement is meaningful.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "hooktab/extraction.hpp"
#include "hooktab/hook_shape.hpp"
#include "hooktab/hook_tableau.hpp"

namespace oracles {

using hooktab::HookShape;
using hooktab::HookTableau;
using hooktab::TrivialPair;

// Dense unified grid of a tableau: grid[i][j] (0-based) = entry at box
// (i+1, j+1), or 0 when the box is off the diagram.
inline std::vector<std::vector<int>> dense_grid(const HookTableau& t) {
  const HookShape& s = t.shape();
  auto below = s.column_heights_below();
  int rows = s.m() + (below.empty() ? 0 : below[0]);
  int cols = s.column_count();
  std::vector<std::vector<int>> g(rows, std::vector<int>(cols, 0));
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      if (s.contains(i, j)) g[i - 1][j - 1] = t.entry(i, j);
  return g;
}

// Semistandard predicate written against the dense grid with explicit
// quantifiers over all adjacent pairs.
inline bool semistandard_reference(const HookTableau& t) {
  auto g = dense_grid(t);
  int m = t.shape().m();
  int rows = static_cast<int>(g.size());
  int cols = rows == 0 ? 0 : static_cast<int>(g[0].size());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (g[i][j] == 0) continue;
      if (j + 1 < cols && g[i][j + 1] != 0) {
        int x = g[i][j], y = g[i][j + 1];
        if (x > m ? !(x < y) : !(x <= y)) return false;
      }
      if (i + 1 < rows && g[i + 1][j] != 0) {
        int x = g[i][j], y = g[i + 1][j];
        if (x <= m ? !(x < y) : !(x <= y)) return false;
      }
    }
  }
  return true;
}

// Extractability by the two-part definition instead of the four working
// conditions: the pair regions hold trivial prefixes, the shifted
// remainder is a semistandard tableau of the difference shape, and that
// difference shape is covariant.
inline bool extractable_reference(const HookTableau& t, const TrivialPair& p) {
  const HookShape& s = t.shape();
  int m = s.m(), n = s.n();
  auto A = s.row_lengths();
  auto Ap = s.column_heights_below();
  auto B = p.row_lengths();
  auto Bp = p.column_heights_below();
  for (int i = 0; i < m; ++i)
    if (p.b[i] > s.a()[i]) return false;
  for (int j = 0; j + 1 < n; ++j)
    if (p.b_prime[j] > s.a_prime()[j]) return false;
  // trivial prefixes
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= B[i - 1]; ++j)
      if (t.entry(i, j) != i) return false;
  for (int j = 1; j <= n - 1; ++j)
    for (int d = 1; d <= Bp[j - 1]; ++d)
      if (t.entry(m + d, j) != m + j) return false;
  // difference shape must be covariant
  std::vector<int> da(m), dap(std::max(0, n - 1));
  for (int i = 0; i < m; ++i) da[i] = s.a()[i] - p.b[i];
  for (int j = 0; j + 1 < n; ++j) dap[j] = s.a_prime()[j] - p.b_prime[j];
  int j0 = 0;
  for (int j = 0; j + 1 < n; ++j)
    if (dap[j] > 0) j0 = j + 1;
  if (m >= 1 && da[m - 1] < j0) return false;
  // shifted remainder must be semistandard
  try {
    HookShape mu(m, n, da, dap);
    auto muA = mu.row_lengths();
    auto muAp = mu.column_heights_below();
    std::vector<std::vector<int>> plus(m), minus(std::max(0, n - 1));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= muA[i - 1]; ++j)
        plus[i - 1].push_back(t.entry(i, j + B[i - 1]));
    for (int j = 1; j <= n - 1; ++j)
      for (int d = 1; d <= muAp[j - 1]; ++d)
        minus[j - 1].push_back(t.entry(m + d + Bp[j - 1], j));
    HookTableau u(mu, plus, minus);
    return semistandard_reference(u);
  } catch (const hooktab::Error&) {
    return false;
  }
}

// All pairs fitting under (a, a') componentwise.
inline std::vector<TrivialPair> all_pairs_under(const HookShape& s) {
  std::vector<TrivialPair> out;
  TrivialPair p = TrivialPair::empty(s.m(), s.n());
  // odometer over the m + (n-1) slots
  auto bump = [&](TrivialPair& q) -> bool {
    for (int i = 0; i < s.m(); ++i) {
      if (q.b[i] < s.a()[i]) {
        ++q.b[i];
        return true;
      }
      q.b[i] = 0;
    }
    for (int j = 0; j + 1 < s.n(); ++j) {
      if (q.b_prime[j] < s.a_prime()[j]) {
        ++q.b_prime[j];
        return true;
      }
      q.b_prime[j] = 0;
    }
    return false;
  };
  out.push_back(p);
  while (bump(p)) out.push_back(p);
  return out;
}

}  // namespace oracles
