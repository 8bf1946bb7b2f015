// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "shilov/selftest.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240607;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  // criterion -> runtime budget in seconds (0 = none)
  const double budget[] = {1.0, 0.0, 10.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};

  int failures = 0;
  for (int id = 1; id <= shilov::selftest::kSuiteCount; ++id) {
    const auto r = shilov::selftest::run_suite(id, seed);
    bool ok = r.passed;
    std::string detail = r.detail;
    if (ok && budget[id - 1] > 0.0 && r.seconds >= budget[id - 1]) {
      ok = false;
      detail = "over the " + std::to_string(budget[id - 1]) + " s budget; " + detail;
    }
    failures += !ok;
    std::printf("%s criterion %d (%s): %s [%.3f s]\n", ok ? "PASS" : "FAIL", id, r.name.c_str(), detail.c_str(),
                r.seconds);
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
