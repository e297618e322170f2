#pragma once

// The exact tensor-algebra oracle.
//
// Words are sequences over the graded letter set 1..m+n (letters > m are
// odd) packed 4 bits per letter into a 64-bit integer, so length <= 16 and
// letters <= 15; the configured budget keeps real workloads far below that.
// A SuperTensor is a sparse rational combination of words of one length.
//
// The symmetric group acts on the right by place permutation with the
// graded sign: (w.sigma)_k = w_{sigma(k)}, and the sign is (-1)^(number of
// inversions of sigma over position pairs both carrying odd letters).
//
// For a filling T the word w^T reads the boxes in standard-filling order
// (column major through the line).  The Young symmetrizer acts as
// (e^T . a) . b where a sums the row-preserving permutations and b the
// column-preserving ones signed classically; young_vector(T) is the result.
// Straightening solves exactly against the basis of young vectors of
// semistandard tableaux; the star product straightens a concatenation.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include "hooktab/hook_shape.hpp"
#include "hooktab/hook_tableau.hpp"
#include "hooktab/rational.hpp"

namespace hooktab {

struct TensorBudget {
  int max_boxes = 8;
};

class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<int>& letters);

  int size() const { return len_; }
  int letter(int k) const;  // 0-based
  Word with_letter(int k, int v) const;
  std::vector<int> letters() const;

  auto operator<=>(const Word& o) const = default;

 private:
  int len_ = 0;
  std::uint64_t bits_ = 0;
};

class SuperTensor {
 public:
  explicit SuperTensor(int word_length) : len_(word_length) {}

  int word_length() const { return len_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, const Rational& c);  // drops cancelled terms
  SuperTensor& operator+=(const SuperTensor& o);
  SuperTensor operator+(const SuperTensor& o) const;
  SuperTensor operator*(const Rational& c) const;
  bool operator==(const SuperTensor& o) const;

 private:
  int len_;
  std::map<Word, Rational> terms_;
};

// Permutations are 0-based image vectors: sigma[k] is the image of k.
using Perm = std::vector<int>;

int permutation_sign(const Perm& sigma);
// The graded sign of acting with sigma on w.
int super_sign(const Word& w, const Perm& sigma, int m);

// Signed right place-permutation action; throws LengthMismatch.
SuperTensor act_permutation(const SuperTensor& t, const Perm& sigma, int m);

// The single word e^T in standard-filling order, coefficient 1.
Word word_of(const HookTableau& t);
SuperTensor word_tensor(const HookTableau& t);

// Standard-filling positions (0-based) grouped by rows and by columns of
// the diagram; rows include the below-line rows, columns run through the
// line.  These index sets define the symmetrizer groups.
struct YoungGroups {
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols;
};
YoungGroups young_groups(const HookShape& lambda);

// Sum over row-preserving permutations (the a factor), then the signed sum
// over column-preserving permutations (the b factor).
SuperTensor apply_row_symmetrizer(const SuperTensor& t, const YoungGroups& g, int m);
SuperTensor apply_column_antisymmetrizer(const SuperTensor& t, const YoungGroups& g, int m);

// (word_tensor(T) . a) . b, in that order.
SuperTensor young_vector(const HookTableau& t);

// The superderivation action of the matrix unit E_ij: each position holding
// letter j gets replaced by i, with the Koszul sign (-1)^(|E_ij| * parity
// of the letters left of the position).
SuperTensor eij_action(int i, int j, const SuperTensor& t, int m, int n);

// Rebuilds a filling from its permuted word: the new entry at standard
// position k is T's entry at position sigma[k].
HookTableau filling_permute(const HookTableau& t, const Perm& sigma);

// The product of transpositions (xs[k] ys[k]); positions 0-based, disjoint.
Perm exchange_permutation(int word_length, const std::vector<int>& xs,
                          const std::vector<int>& ys);

// Young vectors of all semistandard tableaux of one shape, with the word
// list they live on.  Throws BudgetExceeded past the budget and
// InconsistentSystem if the rows fail to have full rank (the basis theorem
// guarantees full rank, so that would be an implementation bug).
class BasisSolver {
 public:
  BasisSolver(const HookShape& lambda, const TensorBudget& budget = {});

  const HookShape& shape() const { return lambda_; }
  const std::vector<HookTableau>& tableaux() const { return tableaux_; }
  const std::vector<Word>& words() const { return words_; }
  long long rank() const { return static_cast<long long>(tableaux_.size()); }
  const Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>& matrix() const {
    return matrix_;
  }

  // Exact coordinates of g in the basis; throws InconsistentSystem when g
  // is outside the span (never happens for young vectors of fillings).
  FormalCombination decompose(const SuperTensor& g) const;

 private:
  HookShape lambda_;
  std::vector<HookTableau> tableaux_;
  std::vector<Word> words_;
  std::map<Word, int> word_index_;
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> matrix_;  // rows x words
  std::vector<int> pivot_cols_;
  Eigen::FullPivLU<Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>> lu_;
};

// Shared per-shape solvers; safe for concurrent readers, each shape built
// once under the lock.
class SolverCache {
 public:
  const BasisSolver& get(const HookShape& lambda, const TensorBudget& budget = {});

 private:
  std::mutex mutex_;
  std::map<std::pair<HookShape, int>, std::unique_ptr<BasisSolver>> solvers_;
};

// young_vector(w) expanded in the semistandard basis.  Semistandard input
// short-circuits to 1*w (it is a basis element).
FormalCombination straighten(const HookTableau& w, SolverCache& cache,
                             const TensorBudget& budget = {});

// straighten(concat(s, t)); the shape algebra product on tableaux.
FormalCombination star_product(const HookTableau& s, const HookTableau& t,
                               SolverCache& cache, const TensorBudget& budget = {});

// The normalized projection product: young_vector(s) (x) young_vector(t) is
// hit with the Young symmetrizer of the shape sum and scaled so the product
// of two trivial tableaux is the trivial tableau of the shape sum.  The
// result does not depend on how the two words are laid out, because any two
// layouts give intertwiners that agree on the highest weight line.  This
// product obeys the exact commutation law
//   cartan_product(t, s) = (-1)^(|s||t| + |triv(sh s)||triv(sh t)|)
//                          cartan_product(s, t)
// with |.| the odd-entry count mod 2; star_product does not, because the
// straightening of a concatenation picks up coefficients that depend on
// both factors (e.g. the two products of [1] and the (1,1)-column [2/2] of
// sl(1,2) differ by a factor -2).
FormalCombination cartan_product(const HookTableau& s, const HookTableau& t,
                                 SolverCache& cache, const TensorBudget& budget = {});

// straighten(E_ij . young_vector(t)).
FormalCombination eij_on_tableau(int i, int j, const HookTableau& t,
                                 SolverCache& cache, const TensorBudget& budget = {});

// The sign-free entry-replacement route: sum of straighten(t with one entry
// j replaced by i) over all boxes holding j.  Exact for even E_ij; for odd
// E_ij it is a recorded cross-check only, so the result carries both routes.
struct EijCrossCheck {
  FormalCombination tensor_route;
  FormalCombination replacement_route;
  bool generator_is_even = false;
  bool agree = false;
};
EijCrossCheck eij_cross_check(int i, int j, const HookTableau& t,
                              SolverCache& cache, const TensorBudget& budget = {});

// Column exchange identity: young_vector(t) equals the signed sum over all
// q-subsequences X of column j exchanged against the top q boxes of column
// j+1.  Throws IndexOutOfRange when the columns or depth are out of range.
bool plucker_check(const HookTableau& t, int j, int q);

// Row exchange identity for two adjacent all-odd rows: young_vector(t)
// equals the sum over swaps of each row-i entry with the first entry of row
// i+1, sign-free.  Throws PreconditionViolation when a row has an even
// entry; an empty row i+1 is vacuously true.
bool hplucker_check(const HookTableau& t, int i);

// The Garnir combination for X = top p of column j, Y = top q of column
// j+1: sum over r and over r-subsequences X' of X, Y' of Y of
// (-1)^r sign * straighten(t exchanged at X', Y').  Requires p + q greater
// than the height of column j (PreconditionViolation otherwise).  The
// expected value is the zero combination.
FormalCombination garnir_apply(const HookTableau& t, int j, int p, int q,
                               SolverCache& cache, const TensorBudget& budget = {});

// Whether the same signed sum of young vectors vanishes already as a raw
// tensor, before straightening.  Reported, never asserted.
bool garnir_raw_tensor_zero(const HookTableau& t, int j, int p, int q);

// With mu = shape(push(t)) and k = min_eta_padding(lambda, mu):
// trivial(k*eta) star t equals trivial(k*eta + lambda - mu) star push(t).
bool reduced_identity_check(const HookTableau& t, SolverCache& cache,
                            const TensorBudget& budget = {});

}  // namespace hooktab
