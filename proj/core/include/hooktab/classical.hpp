#pragma once

// Independent classical (n = 0) implementation used as a degeneration
// oracle.  Everything here is coded directly from the classical theory of
// Young tableaux for sl(m): plain partitions, the trivial-subtableau
// extraction with conditions 1 and 2', push by row shifts, the textbook
// jeu de taquin, and an unsigned tensor engine for the Pluecker exchange
// identity.  None of it calls the graded code paths; agreement between the
// two implementations is checked by the verification suite.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hooktab/rational.hpp"

namespace hooktab::classical {

// A shape is a vector of column multiplicities (c_1, ..., c_H): c_k columns
// of height k.  Row i (1 <= i <= H) has length sum of c_k for k >= i.
std::vector<int> row_lengths(const std::vector<int>& mult);
long long box_count(const std::vector<int>& mult);

// All multiplicity vectors of length m-1 with at most max_boxes boxes,
// sorted lexicographically.
std::vector<std::vector<int>> enumerate_mult(int m, int max_boxes);

struct Tableau {
  std::vector<std::vector<int>> rows;

  bool operator==(const Tableau& o) const = default;
};

// Rows weakly increase, columns strictly increase, entries in 1..m.
bool is_semistandard(const Tableau& t, int m);

// All semistandard fillings of the shape, lexicographic by row-major word.
std::vector<Tableau> enumerate_semistandard(const std::vector<int>& mult, int m);

// trivial(nu): row i filled with i.
Tableau trivial(const std::vector<int>& nu);

// Conditions 1 and 2': the top-left subtableau of shape nu is trivial, and
// t(i, j + nu_i) < t(i+1, j) for every i and every j >= sum of nu_k, k > i,
// with missing members satisfying the inequality.
bool extractable(const Tableau& t, const std::vector<int>& lambda_mult,
                 const std::vector<int>& nu);

// Componentwise join of all extractable nu <= lambda, checked extractable.
std::vector<int> largest_trivial(const Tableau& t, const std::vector<int>& lambda_mult);

// Shift row i left by the i-th row length of the largest trivial nu.
// Returns the remaining multiplicities and the shifted tableau.
std::pair<std::vector<int>, Tableau> push(const Tableau& t,
                                          const std::vector<int>& lambda_mult);

// Skew tableau on a partition pair given by row lengths; cells stored as
// row suffixes.
struct Skew {
  std::vector<int> outer_rows;
  std::vector<int> inner_rows;
  std::vector<std::vector<int>> cells;  // row i holds columns inner_rows[i]+1..outer_rows[i]

  bool operator==(const Skew& o) const = default;
};

// Cut the trivial top-left subtableau of shape inner_mult out of t.
Skew make_skew(const Tableau& t, const std::vector<int>& lambda_mult,
               const std::vector<int>& inner_mult);

// Corners of the inner region, sorted by increasing column.
std::vector<std::pair<int, int>> skew_outer_corners(const Skew& s);

// Textbook slide from an inner-region corner: move the smaller neighbour
// into the hole, ties move the lower entry up; delete on the outer rim.
Skew jdt_slide(const Skew& s, int ci, int cj);

// Slide from the corner with the greatest column until none remains.
Tableau jdt_rectify(const Skew& s);

// Tensor engine over words read column by column, with the plain
// permutation sign on the column antisymmetrizer and nothing graded
// anywhere; used only for the classical Pluecker identity below.
using CWord = std::vector<int>;
using CTensor = std::map<CWord, Rational>;

CTensor young_vector(const Tableau& t, const std::vector<int>& lambda_mult);

// e_T equals the sum over q-subsets X of column j, exchanged against the
// top q entries of column j+1, with no signs.
bool plucker_check(const Tableau& t, const std::vector<int>& lambda_mult, int j, int q);

}  // namespace hooktab::classical
