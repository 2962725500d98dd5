// Acceptance gate: runs every verification suite at full range and prints
// one line per criterion. Exit status is the number of failing criteria.
//
// Usage: dorp-acceptance [oeis-fixture-dir]

#include <cstdio>
#include <string>
#include <thread>

#include "dorp/verify.hpp"

int main(int argc, char** argv) {
  dorp::VerifyConfig config;
  config.jobs = static_cast<int>(
      std::max(1u, std::thread::hardware_concurrency()));
  config.oeis_cache_dir = argc > 1 ? argv[1] : "tests/fixtures/oeis";
  config.oeis_offline = true;

  int failures = 0;
  for (const auto& info : dorp::all_suites()) {
    dorp::VerificationReport report =
        dorp::run_suites(info.name, config).front();
    bool pass = report.overall_pass();
    if (!pass) ++failures;
    std::printf("%s  %2d. %-15s %s (%.1fs)\n", pass ? "PASS" : "FAIL",
                info.number, info.name.c_str(), info.title.c_str(),
                report.elapsed_seconds);
    for (const auto& check : report.checks) {
      if (!check.pass) {
        std::printf("      failed: %s  expected %s, got %s\n",
                    check.name.c_str(), check.expected.c_str(),
                    check.actual.c_str());
      } else if (check.expected == "(informational)" && !pass) {
        std::printf("      note: %s  %s\n", check.name.c_str(),
                    check.actual.c_str());
      }
    }
  }
  if (failures == 0) {
    std::printf("all %d acceptance criteria pass\n",
                static_cast<int>(dorp::all_suites().size()));
  } else {
    std::printf("%d of %d acceptance criteria fail\n", failures,
                static_cast<int>(dorp::all_suites().size()));
  }
  return failures == 0 ? 0 : 1;
}
