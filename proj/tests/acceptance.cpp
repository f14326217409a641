// Acceptance battery: one pass/fail line per criterion, exit 0 iff all pass.

#include <cstdio>

#include "sdop/suite.hpp"

int main() {
  sdop::SuiteConfig cfg;
  auto results = sdop::run_acceptance(cfg);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("%s  [%d] %s\n      %s  (%d ms)\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), static_cast<int>(r.seconds * 1000));
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
