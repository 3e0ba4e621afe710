// Runs the fourteen exit criteria and prints one PASS/FAIL line each.

#include "severi/verify.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  severi::VerifyLevel level = severi::VerifyLevel::kFull;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--level") == 0 && std::strcmp(argv[i + 1], "quick") == 0) {
      level = severi::VerifyLevel::kQuick;
    }
  }
  const auto results = severi::run_acceptance(level, severi::VerifyHooks::defaults(), 1, &std::cout, true);
  int failed = 0;
  for (const auto& result : results) failed += result.passed ? 0 : 1;
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
