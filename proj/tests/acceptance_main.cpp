// Acceptance harness: runs every verification criterion and prints one
// pass/fail line per criterion.  Exits 0 only if all of them pass.

#include <cstdlib>
#include <iostream>

#include "ffcn/verify.hpp"

#ifndef FFCN_DATA_DIR
#define FFCN_DATA_DIR "tests/data"
#endif

int main() {
  const auto which = ffcn::verify::suite_criteria("all");
  bool all_passed = true;
  try {
    const auto results = ffcn::verify::run_criteria(
        which, ffcn::verify::kDefaultSeed, FFCN_DATA_DIR);
    for (const auto& r : results) {
      all_passed = all_passed && r.passed;
      std::cout << "criterion " << r.number << ": "
                << (r.passed ? "PASS" : "FAIL") << " " << r.name << " ["
                << r.detail << "]\n";
    }
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << "\n";
    return 1;
  }
  return all_passed ? 0 : 1;
}
