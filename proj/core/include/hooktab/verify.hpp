#pragma once

// The verification suites.  Each suite is one acceptance gate: it checks an
// exact structural statement over an exhaustive desk-scale scope and
// reports pass/fail plus a detail payload.  The CLI `verify` verb and the
// acceptance binary both run exactly these.
//
// Scopes and wall-clock limits are pinned here as constants; a suite fails
// when its statement breaks or its time limit is exceeded.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hooktab/superspace.hpp"

namespace hooktab {

struct VerifyOptions {
  // Overrides every suite's box cap when >= 0 (0 makes all scopes vacuous).
  int max_boxes = -1;
  TensorBudget budget;
};

struct VerifyResult {
  std::string name;
  bool pass = false;         // the structural statement
  bool within_time = true;   // measured against time_limit_ms
  long long millis = 0;
  long long time_limit_ms = 0;
  nlohmann::ordered_json details;

  bool ok() const { return pass && within_time; }
};

// Ordered suite names:
//   bijection, push-equals-maxjdt, union-lemma, worked-examples,
//   basis-rank, relations, highest-weight-product, kac-dimension,
//   reduced-identity, classical-degeneration
const std::vector<std::string>& verify_suite_names();

VerifyResult run_suite(const std::string& name, const VerifyOptions& opt = {});
std::vector<VerifyResult> verify_all(const VerifyOptions& opt = {});

}  // namespace hooktab
