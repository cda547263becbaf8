// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "catwb/verify.hpp"

int main() {
  bool all = true;
  int n = 0;
  for (const auto& report : catwb::run_verification_suite()) {
    ++n;
    std::printf("criterion %d (%s): %s\n", n, report.name.c_str(),
                report.pass ? "PASS" : "FAIL");
    if (!report.pass) {
      for (const auto& w : report.witnesses)
        std::printf("  witness: %s\n", w.c_str());
      all = false;
    }
  }
  return all ? 0 : 1;
}
