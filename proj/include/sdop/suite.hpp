#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sdop {

struct SuiteConfig {
  std::uint64_t seed = 7;
  int window = 14;
  int twice_cutoff = 6;  // Fock energy cutoff, doubled
  int colors = 1;
  int order = 16;  // series order for the quasifiniteness checks
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance(const SuiteConfig& cfg);

}  // namespace sdop
