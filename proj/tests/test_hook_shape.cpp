#include "doctest.h"

#include <algorithm>
#include <vector>

#include "hooktab/hook_shape.hpp"

using namespace hooktab;

TEST_CASE("shape validation and derived data") {
  HookShape s(2, 3, {1, 2}, {2, 3});
  CHECK(s.row_lengths() == std::vector<int>{3, 2});
  CHECK(s.column_heights_below() == std::vector<int>{5, 3});
  CHECK(s.j0() == 2);
  CHECK(s.box_count() == 13);
  CHECK(s.column_count() == 3);
  // full column heights: two below-line columns on top of the two rows
  CHECK(s.column_height(1) == 7);
  CHECK(s.column_height(2) == 5);
  CHECK(s.column_height(3) == 1);
  CHECK(s.contains(1, 3));
  CHECK(s.contains(7, 1));
  CHECK_FALSE(s.contains(8, 1));
  CHECK_FALSE(s.contains(3, 3));
  CHECK(s.contains(5, 2));
  CHECK_FALSE(s.contains(6, 2));

  CHECK_THROWS_AS(HookShape(1, 2, {0}, {1}), CovarianceViolation);
  CHECK_THROWS_AS(HookShape(2, 3, {1}, {2, 3}), LengthMismatch);
  CHECK_THROWS_AS(HookShape(0, 2, {}, {1}), PreconditionViolation);
  CHECK_THROWS_AS(HookShape(1, 1, {-1}, {}), PreconditionViolation);

  HookShape classical(2, 0, {2, 1}, {});
  CHECK(classical.row_lengths() == std::vector<int>{3, 1});
  CHECK(classical.box_count() == 4);
  CHECK(classical.j0() == 0);
}

TEST_CASE("dominance order") {
  HookShape lam(2, 3, {1, 3}, {2, 3});
  HookShape mu(2, 3, {1, 2}, {1, 1});
  CHECK(shape_leq(mu, lam));
  CHECK(shape_leq(lam, lam));
  CHECK_FALSE(shape_leq(lam, mu));
  CHECK(shape_leq(HookShape(1, 2, {2}, {0}), HookShape(1, 2, {2}, {1})));
  CHECK_FALSE(shape_leq(HookShape(1, 2, {2}, {0}), HookShape(1, 2, {1}, {1})));
  CHECK_THROWS_AS(shape_leq(mu, HookShape(1, 2, {1}, {1})), SignatureMismatch);

  // antisymmetry over an enumerated family
  auto shapes = enumerate_shapes(2, 2, 4);
  for (const auto& x : shapes)
    for (const auto& y : shapes)
      if (shape_leq(x, y) && shape_leq(y, x)) CHECK(x == y);
}

TEST_CASE("difference shapes and eta padding") {
  CHECK_FALSE(diff_is_shape(HookShape(1, 2, {1}, {1}), HookShape(1, 2, {1}, {0})));
  HookShape lam(2, 3, {1, 3}, {2, 3});
  CHECK(diff_is_shape(lam, lam));
  CHECK(diff_is_shape(lam, HookShape(2, 3, {1, 1}, {1, 0})));
  CHECK_THROWS_AS(diff_is_shape(HookShape(1, 2, {1}, {0}), HookShape(1, 2, {1}, {1})),
                  NotComparable);

  CHECK(min_eta_padding(HookShape(1, 2, {1}, {1}), HookShape(1, 2, {1}, {0})) == 1);
  CHECK(min_eta_padding(HookShape(1, 2, {2}, {1}), HookShape(1, 2, {2}, {0})) == 1);
  CHECK(min_eta_padding(lam, HookShape(2, 3, {1, 1}, {1, 0})) == 0);

  // k = min_eta_padding really is minimal and sufficient
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 3; ++n)
      for (const auto& l : enumerate_shapes(m, n, 4))
        for (const auto& u : enumerate_shapes(m, n, 4)) {
          if (!shape_leq(u, l)) continue;
          int k = min_eta_padding(l, u);
          CHECK(k <= std::max(0, n - 1));
          if (diff_is_shape(l, u)) CHECK(k == 0);
          // lambda - mu + k*eta must be covariant, and k-1 must not be
          std::vector<int> da(m), dap(std::max(0, n - 1));
          for (int i = 0; i < m; ++i) da[i] = l.a()[i] - u.a()[i];
          for (int j = 0; j + 1 < n; ++j) dap[j] = l.a_prime()[j] - u.a_prime()[j];
          auto covariant_with = [&](int pad) {
            auto a = da;
            a[m - 1] += pad;
            int top = 0;
            for (int j = 0; j + 1 < n; ++j)
              if (dap[j] > 0) top = j + 1;
            return a[m - 1] >= top;
          };
          CHECK(covariant_with(k));
          if (k > 0) CHECK_FALSE(covariant_with(k - 1));
        }
}

TEST_CASE("shape sum stays covariant and weights add") {
  for (const auto& x : enumerate_shapes(2, 3, 4))
    for (const auto& y : enumerate_shapes(2, 3, 4)) {
      HookShape s = shape_sum(x, y);
      SuperWeight w = s.weight();
      SuperWeight xy = x.weight() + y.weight();
      CHECK(w.eps == xy.eps);
      CHECK(w.delta == xy.delta);
    }
}

TEST_CASE("dual shape formulas") {
  DualShapeData d = dual_shape(HookShape(2, 3, {1, 2}, {2, 3}));
  CHECK(d.m == 3);
  CHECK(d.n == 2);
  CHECK(d.a == std::vector<int>{3, 2, 0});
  CHECK(d.a_prime == std::vector<int>{1});

  DualShapeData d2 = dual_shape(HookShape(1, 2, {2}, {1}));
  CHECK(d2.a == std::vector<int>{1, 1});
  CHECK(d2.a_prime.empty());

  DualShapeData z = dual_shape(HookShape::zero(2, 3));
  CHECK(std::all_of(z.a.begin(), z.a.end(), [](int v) { return v == 0; }));
  CHECK(std::all_of(z.a_prime.begin(), z.a_prime.end(), [](int v) { return v == 0; }));

  // Double dual preserves a_1..a_{m-1} and all of a_prime whenever the dual
  // is itself covariant; the a_m slot comes back exactly on multiples of eta.
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 3; ++n)
      for (const auto& l : enumerate_shapes(m, n, 5)) {
        DualShapeData dd = dual_shape(l);
        REQUIRE(static_cast<int>(dd.a.size()) == dd.m);
        REQUIRE(static_cast<int>(dd.a_prime.size()) == std::max(0, dd.n - 1));
        int dj0 = 0;
        for (int j = 0; j < static_cast<int>(dd.a_prime.size()); ++j)
          if (dd.a_prime[j] > 0) dj0 = j + 1;
        if (dd.a.back() < dj0) continue;  // dual not covariant, nothing to test
        DualShapeData ddd = dual_shape(HookShape(dd.m, dd.n, dd.a, dd.a_prime));
        REQUIRE(ddd.m == m);
        for (int i = 0; i + 1 < m; ++i) CHECK(ddd.a[i] == l.a()[i]);
        CHECK(ddd.a_prime == l.a_prime());
        bool is_eta_multiple = true;
        for (int i = 0; i + 1 < m; ++i)
          if (l.a()[i] != 0) is_eta_multiple = false;
        for (int v : l.a_prime())
          if (v != 0) is_eta_multiple = false;
        bool round_trip = (ddd.a == l.a() && ddd.a_prime == l.a_prime());
        CHECK(round_trip == is_eta_multiple);
      }
}

TEST_CASE("weights and typicality") {
  SuperWeight w = HookShape(2, 3, {1, 2}, {2, 3}).weight();
  CHECK(w.eps == std::vector<long long>{3, 2});
  CHECK(w.delta == std::vector<long long>{5, 3, 0});

  SuperWeight z = HookShape::zero(2, 3).weight();
  CHECK(std::all_of(z.eps.begin(), z.eps.end(), [](long long v) { return v == 0; }));

  CHECK(HookShape(1, 1, {3}, {}).weight().eps == std::vector<long long>{3});

  // equality modulo the supertrace direction
  SuperWeight a{{3, 2}, {5, 3, 0}};
  SuperWeight b{{4, 3}, {4, 2, -1}};  // a + supertrace
  CHECK(a.equals_mod_supertrace(b));
  SuperWeight c{{4, 2}, {5, 3, 0}};
  CHECK_FALSE(a.equals_mod_supertrace(c));

  CHECK(HookShape(1, 1, {1}, {}).is_typical());
  CHECK(HookShape(1, 1, {4}, {}).is_typical());
  CHECK_FALSE(HookShape(1, 1, {0}, {}).is_typical());
  CHECK_FALSE(HookShape(1, 2, {1}, {0}).is_typical());
  CHECK(HookShape(2, 0, {1, 1}, {}).is_typical());  // n = 0 vacuous
}

TEST_CASE("shape enumeration") {
  auto s11 = enumerate_shapes(1, 1, 2);
  REQUIRE(s11.size() == 3);
  CHECK(s11[0].a() == std::vector<int>{0});
  CHECK(s11[1].a() == std::vector<int>{1});
  CHECK(s11[2].a() == std::vector<int>{2});

  auto zero = enumerate_shapes(2, 2, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_zero());

  auto s12 = enumerate_shapes(1, 2, 2);
  bool has11 = false, has01 = false;
  for (const auto& s : s12) {
    if (s.a() == std::vector<int>{1} && s.a_prime() == std::vector<int>{1}) has11 = true;
    if (s.a() == std::vector<int>{0} && s.a_prime() == std::vector<int>{1}) has01 = true;
  }
  CHECK(has11);
  CHECK_FALSE(has01);

  // all enumerated shapes are covariant, within budget, sorted, unique
  auto all = enumerate_shapes(2, 3, 5);
  for (std::size_t k = 0; k < all.size(); ++k) {
    CHECK(all[k].box_count() <= 5);
    if (k + 1 < all.size()) CHECK(all[k] < all[k + 1]);
  }
}
