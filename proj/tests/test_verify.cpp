#include "doctest.h"

#include <string>
#include <vector>

#include "hooktab/verify.hpp"

using namespace hooktab;

TEST_CASE("suite names") {
  const auto& names = verify_suite_names();
  CHECK(names == std::vector<std::string>{
                     "bijection", "push-equals-maxjdt", "union-lemma",
                     "worked-examples", "basis-rank", "relations",
                     "highest-weight-product", "kac-dimension",
                     "reduced-identity", "classical-degeneration"});
  CHECK_THROWS_AS(run_suite("no-such-suite"), PreconditionViolation);
}

TEST_CASE("vacuous scopes pass") {
  VerifyOptions opt;
  opt.max_boxes = 0;
  for (const auto& r : verify_all(opt)) {
    CHECK(r.pass);
    CHECK(r.within_time);
    CHECK(r.ok());
    CHECK(r.millis >= 0);
  }
}

TEST_CASE("suites pass at reduced scope") {
  VerifyOptions small;
  small.max_boxes = 3;
  for (const auto& name :
       {"bijection", "push-equals-maxjdt", "union-lemma", "basis-rank",
        "relations", "highest-weight-product", "kac-dimension",
        "reduced-identity", "classical-degeneration"}) {
    VerifyResult r = run_suite(name, small);
    CHECK(r.name == name);
    INFO(r.name, ": ", r.details.dump());
    CHECK(r.pass);
  }
}

TEST_CASE("worked examples replay") {
  // fixed fixtures, so the default scope is already fast
  VerifyResult r = run_suite("worked-examples");
  INFO(r.details.dump());
  CHECK(r.pass);
  CHECK(r.within_time);
}

TEST_CASE("result bookkeeping") {
  VerifyOptions opt;
  opt.max_boxes = 2;
  VerifyResult r = run_suite("bijection", opt);
  CHECK(r.name == "bijection");
  CHECK(r.time_limit_ms == 30000);
  CHECK(r.millis >= 0);
  CHECK(r.details.contains("checked"));
}
