#pragma once

// Skew hook tableaux and the super jeu de taquin.
//
// A skew tableau is a hook diagram of shape lambda with an inner region
// removed: the first B_i boxes of each row of F+ and the top B'_j boxes of
// each below-line column of F-.  The inner region is a trivial-pair shape
// (b, b'), not necessarily covariant; the worked traces need inner regions
// that are not shapes at all.
//
// A slide places a star on an outer corner of the inner region and walks it
// right/down by graded comparisons until it deletes a box on the outer rim;
// the star is never materialized, each step moves one entry.  maxjdt slides
// from the greatest outer corner (above-line corners ordered by column,
// then below-line corners ordered by row, above < below) until the inner
// region is gone; on T minus its largest extractable pair this reproduces
// push(T).

#include <optional>
#include <vector>

#include "hooktab/extraction.hpp"
#include "hooktab/hook_shape.hpp"
#include "hooktab/hook_tableau.hpp"

namespace hooktab {

struct Corner {
  int i = 0;
  int j = 0;
  bool operator==(const Corner& o) const = default;
};

class SkewTableau {
 public:
  // plus: m rows, row i holding the entries of columns B_i+1 .. A_i;
  // minus: n-1 columns, column j holding depths B'_j+1 .. A'_j.
  // Throws PreconditionViolation when the inner region leaves the diagram,
  // ShapeMismatch when the grids disagree, IndexOutOfRange on bad entries.
  SkewTableau(HookShape lambda, TrivialPair inner,
              std::vector<std::vector<int>> plus,
              std::vector<std::vector<int>> minus);

  // The cells of t outside the region of the pair p (p need not be
  // extractable; it must fit inside the diagram).
  static SkewTableau from_tableau(const HookTableau& t, const TrivialPair& p);

  const HookShape& lambda() const { return lambda_; }
  const HookShape& shape() const { return lambda_; }
  const TrivialPair& inner() const { return inner_; }
  const std::vector<std::vector<int>>& plus() const { return plus_; }
  const std::vector<std::vector<int>>& minus() const { return minus_; }

  bool box_in_diagram(int i, int j) const;  // in F^lambda
  bool box_in_inner(int i, int j) const;    // in the removed region
  bool has_entry(int i, int j) const;
  int entry(int i, int j) const;  // IndexOutOfRange unless has_entry

  long long cell_count() const;
  // Row/column comparisons on adjacent existing cells.
  bool is_skew_semistandard() const;
  // No inner region left: the cells fill the diagram.
  bool is_straight() const;
  HookTableau to_tableau() const;  // requires is_straight

  bool operator==(const SkewTableau& o) const;

 private:
  HookShape lambda_;
  TrivialPair inner_;
  std::vector<std::vector<int>> plus_;
  std::vector<std::vector<int>> minus_;
};

// Outer corners of the inner region, in the slide order: above-line corners
// by increasing column, then below-line corners by increasing row.
std::vector<Corner> outer_corners(const SkewTableau& s);
std::optional<Corner> greatest_outer_corner(const SkewTableau& s);

// One frame of a slide trace: the star (hole) position and a dense snapshot
// of the entries at that moment.  rows has m + A'_1 entries; row i <= m has
// length A_i, below-line row m+d lists the columns of depth >= d.  Boxes
// without an entry (inner region or the hole itself) hold 0.  Mid-slide
// states are not prefix-shaped, so they cannot be SkewTableau values.
struct SlideFrame {
  Corner star;
  std::vector<std::vector<int>> rows;
};

// The same dense form for a whole skew tableau, for printing and tests.
std::vector<std::vector<int>> dense_rows(const SkewTableau& s);

struct SlideResult {
  SkewTableau state;
  std::vector<SlideFrame> frames;  // one per star position, in slide order
};

// Slides from corner c.  Below the line the star moves down when the lower
// neighbour exists and (no right neighbour or t(i+1,j) < t(i,j+1)), right
// when the right neighbour exists and the down rule failed; above the line
// it moves right when the right neighbour exists and (no lower neighbour or
// t(i,j+1) < t(i+1,j) or equal odd entries), down when the lower neighbour
// exists and the right rule failed; when both neighbours are missing the
// star's box is removed from the diagram.  Throws NotOuterCorner when c is
// not an outer corner.
SlideResult sjdt_slide(const SkewTableau& s, const Corner& c);

struct MaxjdtResult {
  HookTableau result;
  std::vector<SlideFrame> frames;
};

// Iterates sjdt_slide from the greatest outer corner until none is left.
MaxjdtResult maxjdt(const SkewTableau& s);

// The predicted greatest outer corner after sliding from c, by the corner
// successor case table; pure inner-region geometry.  Precondition: c is the
// greatest outer corner.  Used as a self-check against recomputation.
std::optional<Corner> corner_successor_check(const SkewTableau& s, const Corner& c);

}  // namespace hooktab
