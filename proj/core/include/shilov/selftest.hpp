#pragma once

// The nine property suites shared by the acceptance binary and `shilov selftest`.

#include <cstdint>
#include <string>
#include <vector>

namespace shilov::selftest {

struct SuiteResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kSuiteCount = 9;

const std::vector<std::string>& suite_names();

// Each suite draws from its own engine seeded by (seed, id).
SuiteResult run_suite(int id, std::uint64_t seed);
std::vector<SuiteResult> run_all(std::uint64_t seed);

}  // namespace shilov::selftest
