// Release gate: runs the seven falsifiable checks at full depth and prints
// one PASS/FAIL line per criterion.  Exit 0 only when everything holds.
#include "sphereblock/verify.hpp"

#include <cstdio>

int main() {
  using namespace sphereblock;
  std::vector<CheckResult> results = run_acceptance(8);
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    std::printf("[%s] criterion %d: %s [%.2fs] %s\n", r.pass ? "PASS" : "FAIL",
                r.number, r.name.c_str(), r.seconds, r.detail.c_str());
    if (r.pass) ++passed;
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", passed, results.size());
  return all_passed(results) ? 0 : 1;
}
