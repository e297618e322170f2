// Acceptance gate: runs every verification suite at its full pinned scope
// and prints one line per criterion.  Exits nonzero when any suite fails
// its statement or its wall-clock limit.

#include <cstdio>

#include "hooktab/verify.hpp"

int main() {
  const auto results = hooktab::verify_all();
  bool all_ok = true;
  int k = 0;
  for (const auto& r : results) {
    ++k;
    all_ok = all_ok && r.ok();
    std::printf("[%2d/10] %-24s %s  %6lld ms", k, r.name.c_str(),
                r.ok() ? "PASS" : "FAIL", r.millis);
    if (r.time_limit_ms > 0) std::printf(" (limit %lld ms)", r.time_limit_ms);
    if (!r.pass) std::printf("  %s", r.details.dump().c_str());
    std::printf("\n");
  }
  std::printf("%s\n", all_ok ? "acceptance: PASS" : "acceptance: FAIL");
  return all_ok ? 0 : 1;
}
