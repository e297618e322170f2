#include "doctest.h"

#include <vector>

#include "hooktab/extraction.hpp"
#include "hooktab/taquin.hpp"

using namespace hooktab;

using Grid = std::vector<std::vector<int>>;

namespace {
// sl(2,3) trace one: rows [.,1,2],[.,2], columns (3,3,4),(4,5)
SkewTableau trace1() {
  return SkewTableau(HookShape(2, 3, {1, 2}, {1, 2}), TrivialPair{{0, 1}, {0, 0}},
                     {{1, 2}, {2}}, {{3, 3, 4}, {4, 5}});
}
// sl(2,3) trace two: rows [.,1,2],[.,4], columns (3,4,5),(5,5)
SkewTableau trace2() {
  return SkewTableau(HookShape(2, 3, {1, 2}, {1, 2}), TrivialPair{{0, 1}, {0, 0}},
                     {{1, 2}, {4}}, {{3, 4, 5}, {5, 5}});
}
}  // namespace

TEST_CASE("skew tableau construction") {
  SkewTableau s = trace1();
  CHECK(s.cell_count() == 8);
  CHECK(s.box_in_diagram(1, 1));
  CHECK(s.box_in_inner(1, 1));
  CHECK_FALSE(s.has_entry(1, 1));
  CHECK(s.has_entry(1, 2));
  CHECK(s.entry(1, 2) == 1);
  CHECK(s.entry(2, 2) == 2);
  CHECK(s.entry(4, 2) == 5);
  CHECK(s.entry(5, 1) == 4);
  CHECK_THROWS_AS(s.entry(2, 1), IndexOutOfRange);
  CHECK(s.is_skew_semistandard());
  CHECK_FALSE(s.is_straight());
  CHECK(dense_rows(s) == Grid{{0, 1, 2}, {0, 2}, {3, 4}, {3, 5}, {4}});

  // the inner region must fit inside the diagram
  CHECK_THROWS_AS(SkewTableau(HookShape(1, 2, {1}, {1}), TrivialPair{{2}, {0}},
                              {{}}, {{2}}),
                  PreconditionViolation);
  // grids must match the skew cells exactly
  CHECK_THROWS_AS(SkewTableau(HookShape(2, 3, {1, 2}, {1, 2}),
                              TrivialPair{{0, 1}, {0, 0}}, {{1, 2}, {2}},
                              {{3, 3}, {4, 5}}),
                  ShapeMismatch);

  HookTableau t(HookShape(1, 2, {2}, {1}), {{1, 2}}, {{2}});
  SkewTableau whole = SkewTableau::from_tableau(t, TrivialPair::empty(1, 2));
  CHECK(whole.is_straight());
  CHECK(whole.to_tableau() == t);
  SkewTableau cut = SkewTableau::from_tableau(t, TrivialPair{{1}, {1}});
  CHECK(cut.plus() == Grid{{2}});
  CHECK(cut.minus() == Grid{{}});
  CHECK(cut.cell_count() == 1);
}

TEST_CASE("outer corner order, frozen") {
  // lambda = ((1,3),(2,3)), inner ((1,1),(1,1)): corners come out as
  // (2,1) < (1,2) < (3,2) < (4,1)
  SkewTableau s = SkewTableau::from_tableau(
      HookTableau(HookShape(2, 3, {1, 3}, {2, 3}), {{1, 1, 2, 2}, {2, 3, 4}},
                  {{3, 3, 4, 4, 5}, {4, 5, 5}}),
      TrivialPair{{1, 1}, {1, 1}});
  auto out = outer_corners(s);
  REQUIRE(out.size() == 4);
  CHECK(out[0] == Corner{2, 1});
  CHECK(out[1] == Corner{1, 2});
  CHECK(out[2] == Corner{3, 2});
  CHECK(out[3] == Corner{4, 1});
  CHECK(greatest_outer_corner(s) == Corner{4, 1});

  SkewTableau straight = SkewTableau::from_tableau(
      HookTableau(HookShape(1, 1, {1}, {}), {{1}}, {}), TrivialPair::empty(1, 1));
  CHECK(outer_corners(straight).empty());
  CHECK_FALSE(greatest_outer_corner(straight).has_value());
}

TEST_CASE("slide trace one, frozen frame by frame") {
  SlideResult r = sjdt_slide(trace1(), Corner{2, 1});
  REQUIRE(r.frames.size() == 4);
  CHECK(r.frames[0].star == Corner{2, 1});
  CHECK(r.frames[0].rows == Grid{{0, 1, 2}, {0, 2}, {3, 4}, {3, 5}, {4}});
  CHECK(r.frames[1].star == Corner{2, 2});
  CHECK(r.frames[1].rows == Grid{{0, 1, 2}, {2, 0}, {3, 4}, {3, 5}, {4}});
  CHECK(r.frames[2].star == Corner{3, 2});
  CHECK(r.frames[2].rows == Grid{{0, 1, 2}, {2, 4}, {3, 0}, {3, 5}, {4}});
  CHECK(r.frames[3].star == Corner{4, 2});
  CHECK(r.frames[3].rows == Grid{{0, 1, 2}, {2, 4}, {3, 5}, {3, 0}, {4}});

  CHECK(r.state.lambda() == HookShape(2, 3, {1, 2}, {2, 1}));
  CHECK(r.state.inner().b == std::vector<int>{1, 0});
  CHECK(r.state.inner().b_prime == std::vector<int>{0, 0});
  CHECK(r.state.plus() == Grid{{1, 2}, {2, 4}});
  CHECK(r.state.minus() == Grid{{3, 3, 4}, {5}});
  CHECK(r.state.is_skew_semistandard());
  // the diagram lost one box (the suppressed exit corner) while the inner
  // region lost one too (the filled starting corner), so the cell count
  // stays at eight even though the shape shrank
  CHECK(r.state.cell_count() == 8);
}

TEST_CASE("slide trace two, frozen frame by frame") {
  SlideResult r = sjdt_slide(trace2(), Corner{2, 1});
  REQUIRE(r.frames.size() == 4);
  CHECK(r.frames[0].star == Corner{2, 1});
  CHECK(r.frames[0].rows == Grid{{0, 1, 2}, {0, 4}, {3, 5}, {4, 5}, {5}});
  CHECK(r.frames[1].star == Corner{3, 1});
  CHECK(r.frames[1].rows == Grid{{0, 1, 2}, {3, 4}, {0, 5}, {4, 5}, {5}});
  CHECK(r.frames[2].star == Corner{4, 1});
  CHECK(r.frames[2].rows == Grid{{0, 1, 2}, {3, 4}, {4, 5}, {0, 5}, {5}});
  CHECK(r.frames[3].star == Corner{4, 2});
  CHECK(r.frames[3].rows == Grid{{0, 1, 2}, {3, 4}, {4, 5}, {5, 0}, {5}});

  CHECK(r.state.lambda() == HookShape(2, 3, {1, 2}, {2, 1}));
  CHECK(r.state.plus() == Grid{{1, 2}, {3, 4}});
  CHECK(r.state.minus() == Grid{{4, 5, 5}, {5}});
  CHECK(r.state.is_skew_semistandard());
}

TEST_CASE("maxjdt of trace one") {
  MaxjdtResult r = maxjdt(trace1());
  CHECK(r.frames.size() == 7);
  CHECK(r.result.shape() == HookShape(2, 3, {0, 2}, {2, 1}));
  CHECK(r.result.plus() == Grid{{1, 2}, {2, 4}});
  CHECK(r.result.minus() == Grid{{3, 3, 4}, {5}});
  CHECK(is_semistandard(r.result));
}

TEST_CASE("slides can be asked for corners that are not there") {
  CHECK_THROWS_AS(sjdt_slide(trace1(), Corner{1, 2}), NotOuterCorner);
  CHECK_THROWS_AS(sjdt_slide(trace1(), Corner{1, 1}), NotOuterCorner);
  SkewTableau straight = SkewTableau::from_tableau(
      HookTableau(HookShape(1, 1, {1}, {}), {{1}}, {}), TrivialPair::empty(1, 1));
  CHECK_THROWS_AS(sjdt_slide(straight, Corner{1, 1}), NotOuterCorner);
}

TEST_CASE("a user-chosen corner can break covariance") {
  // lambda = ((1),(1)) with both boxes inner: deleting the above-line box
  // first would leave a' = (1) with no above row, which is not a shape
  SkewTableau s(HookShape(1, 2, {1}, {1}), TrivialPair{{1}, {1}}, {{}}, {{}});
  auto out = outer_corners(s);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == Corner{1, 1});
  CHECK(out[1] == Corner{2, 1});
  CHECK_THROWS_AS(sjdt_slide(s, Corner{1, 1}), CovarianceViolation);

  // the maxjdt schedule takes the below-line corner first and stays valid
  MaxjdtResult r = maxjdt(s);
  CHECK(r.result.shape().is_zero());
  CHECK(r.frames.size() == 2);
}

TEST_CASE("maxjdt reproduces push") {
  for (auto [m, n] : {std::pair{1, 2}, {2, 1}, {2, 2}, {1, 3}}) {
    for (const auto& shape : enumerate_shapes(m, n, 5)) {
      for (const auto& t : enumerate_semistandard(shape)) {
        SkewTableau skew =
            SkewTableau::from_tableau(t, largest_extractable_pair(t));
        MaxjdtResult r = maxjdt(skew);
        auto [mu, u] = push(t);
        CHECK(r.result.shape() == mu);
        CHECK(r.result == u);
      }
    }
  }
}

TEST_CASE("greatest-corner slides run straight in the extractable regime") {
  // starting from T minus an extractable pair, a slide from the greatest
  // corner moves the star only down (below the line) or only right (above);
  // the predicted successor corner matches the recomputation each time
  for (auto [m, n] : {std::pair{1, 2}, {2, 2}}) {
    for (const auto& shape : enumerate_shapes(m, n, 5)) {
      for (const auto& t : enumerate_semistandard(shape)) {
        SkewTableau s = SkewTableau::from_tableau(t, largest_extractable_pair(t));
        while (auto c = greatest_outer_corner(s)) {
          SlideResult r = sjdt_slide(s, *c);
          for (const auto& f : r.frames) {
            if (c->i > m) {
              CHECK(f.star.j == c->j);
              CHECK(f.star.i >= c->i);
            } else {
              CHECK(f.star.i == c->i);
              CHECK(f.star.j >= c->j);
            }
          }
          CHECK(r.state.is_skew_semistandard());
          auto predicted = corner_successor_check(s, *c);
          auto actual = greatest_outer_corner(r.state);
          CHECK(predicted == actual);
          s = r.state;
        }
        CHECK(s.is_straight());
      }
    }
  }
}
