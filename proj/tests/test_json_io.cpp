#include "doctest.h"

#include <string>

#include "hooktab/json_io.hpp"

using namespace hooktab;

namespace {
HookTableau t523() {
  return HookTableau(HookShape(2, 3, {1, 2}, {1, 1}), {{1, 1, 2}, {2, 4}},
                     {{3, 4}, {4}});
}
}  // namespace

TEST_CASE("shape json") {
  HookShape s(2, 3, {1, 2}, {2, 3});
  json j = shape_to_json(s);
  CHECK(j.dump() == R"({"m":2,"n":3,"a":[1,2],"a_prime":[2,3]})");
  CHECK(shape_from_json(j) == s);

  // m and n supplied out of band
  json bare = json::parse(R"({"a":[1,2],"a_prime":[2,3]})");
  CHECK(shape_from_json(bare, 2, 3) == s);
  CHECK_THROWS_AS(shape_from_json(bare), PreconditionViolation);
  // contradictory signature
  CHECK_THROWS_AS(shape_from_json(j, 3, 3), PreconditionViolation);
  // malformed payloads
  CHECK_THROWS_AS(shape_from_json(json::parse(R"({"m":2,"n":3})")),
                  PreconditionViolation);
  CHECK_THROWS_AS(
      shape_from_json(json::parse(R"({"m":2,"n":3,"a":[1],"a_prime":[]})")),
      LengthMismatch);
  CHECK_THROWS_AS(
      shape_from_json(json::parse(R"({"m":1,"n":2,"a":[0],"a_prime":[1]})")),
      CovarianceViolation);
}

TEST_CASE("tableau json") {
  HookTableau t = t523();
  json j = tableau_to_json(t);
  CHECK(j.dump() ==
        R"({"shape":{"m":2,"n":3,"a":[1,2],"a_prime":[1,1]},)"
        R"("plus":[[1,1,2],[2,4]],"minus":[[3,4],[4]]})");
  CHECK(tableau_from_json(j) == t);
  CHECK(tableau_from_json(j, 2, 3) == t);

  json bad = j;
  bad["plus"][0] = {1, 1};
  CHECK_THROWS_AS(tableau_from_json(bad), ShapeMismatch);
}

TEST_CASE("pair json") {
  TrivialPair p{{1, 1}, {1, 0}};
  json j = pair_to_json(p);
  CHECK(j.dump() == R"({"b":[1,1],"b_prime":[1,0]})");
  CHECK(pair_from_json(j, 2, 3) == p);
  CHECK_THROWS_AS(pair_from_json(j, 1, 2), LengthMismatch);
}

TEST_CASE("skew json") {
  SkewTableau s(HookShape(2, 3, {1, 2}, {1, 2}), TrivialPair{{0, 1}, {0, 0}},
                {{1, 2}, {2}}, {{3, 3, 4}, {4, 5}});
  json j = skew_to_json(s);
  CHECK(j.dump() ==
        R"({"shape":{"m":2,"n":3,"a":[1,2],"a_prime":[1,2]},)"
        R"("inner":{"b":[0,1],"b_prime":[0,0]},)"
        R"("plus":[[1,2],[2]],"minus":[[3,3,4],[4,5]]})");
  CHECK(skew_from_json(j) == s);
}

TEST_CASE("combination json") {
  HookShape row(1, 1, {2}, {});
  HookTableau t11(row, {{1, 1}}, {});
  HookTableau t12(row, {{1, 2}}, {});
  FormalCombination c;
  c.add(t12, Rational(-3, 2));
  c.add(t11, Rational(7));
  json j = combination_to_json(c);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["coeff"] == "7");
  CHECK(j[1]["coeff"] == "-3/2");
  CHECK(combination_from_json(j) == c);

  FormalCombination zero;
  CHECK(combination_to_json(zero).dump() == "[]");
  CHECK(combination_from_json(json::parse("[]")).is_zero());

  json bad = j;
  bad[0]["coeff"] = "seven";
  CHECK_THROWS_AS(combination_from_json(bad), PreconditionViolation);
}

TEST_CASE("rational strings") {
  CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_to_string(Rational(7)) == "7");
  CHECK(rational_from_string("-3/2") == Rational(-3, 2));
  CHECK(rational_from_string("7") == Rational(7));
  CHECK_THROWS_AS(rational_from_string("seven"), PreconditionViolation);
  CHECK_THROWS_AS(rational_from_string(""), PreconditionViolation);
}

TEST_CASE("bijection report json") {
  BijectionReport r = verify_bijection(HookShape(1, 2, {2}, {1}));
  json j = bijection_report_to_json(r);
  CHECK(j["ss_count"] == 8);
  CHECK(j["pass"] == true);
  REQUIRE(j["qs_counts"].is_array());
  CHECK(j["qs_counts"].size() == 5);
  long long total = 0;
  for (const auto& e : j["qs_counts"]) total += e["count"].get<long long>();
  CHECK(total == 8);
}

TEST_CASE("pretty grids") {
  CHECK(pretty_tableau(t523()) == "1 1 2\n2 4\n-----\n3 4\n4\n");
  CHECK(pretty_tableau(HookTableau(HookShape(1, 2, {1}, {1}), {{1}}, {{2}})) ==
        "1\n-\n2\n");
  CHECK(pretty_tableau(HookTableau::empty(1, 2)) == "(empty)\n");
  CHECK(pretty_tableau(HookTableau(HookShape(1, 1, {2}, {}), {{1, 2}}, {})) ==
        "1 2\n");

  CHECK(pretty_shape(HookShape(2, 3, {1, 2}, {1, 1})) ==
        "# # #\n# #\n-----\n# #\n#\n");
  CHECK(pretty_shape(HookShape::zero(2, 3)) == "(empty)\n");

  SkewTableau s(HookShape(2, 3, {1, 2}, {1, 2}), TrivialPair{{0, 1}, {0, 0}},
                {{1, 2}, {2}}, {{3, 3, 4}, {4, 5}});
  CHECK(pretty_skew(s) == ". 1 2\n. 2\n-----\n3 4\n3 5\n4\n");

  HookShape row(1, 1, {2}, {});
  FormalCombination c;
  c.add(HookTableau(row, {{1, 2}}, {}), Rational(-3, 2));
  CHECK(pretty_combination(c) == "-3/2 * 12\n");
  CHECK(pretty_combination(FormalCombination()) == "0\n");
}
