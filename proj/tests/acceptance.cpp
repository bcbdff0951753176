// Acceptance suite: one line per criterion, checked at the stated budget.
// Exit code 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "coxart/verify.hpp"

namespace {

using coxart::verify::run_verification;
using coxart::verify::VerifyOptions;

struct Criterion {
  const char* id;
  const char* description;
  const char* suite;  // nullptr for the determinism criterion
  double limit_seconds;
};

const Criterion kCriteria[] = {
    {"criterion-1", "worked reflection example", "worked-example", 1.0},
    {"criterion-2", "oracle equivalence", "oracle", 60.0},
    {"criterion-3", "N-machinery", "nset", 60.0},
    {"criterion-4", "retraction suite", "retraction", 300.0},
    {"criterion-5", "one-move stability", "one-move", 60.0},
    {"criterion-6", "Coxeter intersection brute force", "coxint", 60.0},
    {"criterion-7", "intersection certificates", "certificates", 60.0},
    {"criterion-8", "conjecture reduction step", "conjreduce", 60.0},
    {"criterion-9", "verify determinism", nullptr, 600.0},
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& criterion : kCriteria) {
    auto start = std::chrono::steady_clock::now();
    std::size_t cases = 0;
    std::size_t failed_cases = 0;
    bool ok = true;

    if (criterion.suite) {
      VerifyOptions options;
      options.seed = 0;
      options.suite = criterion.suite;
      auto outcomes = run_verification(options);
      for (const auto& o : outcomes) {
        cases += o.cases;
        failed_cases += o.failures;
      }
      ok = failed_cases == 0;
      if (!ok) {
        for (const auto& o : outcomes) {
          for (const auto& m : o.messages) {
            std::printf("       %s\n", m.c_str());
          }
        }
      }
    } else {
      // Bit-identical output of the full verification for a fixed seed.
      VerifyOptions options;
      options.seed = 1;
      std::string first = coxart::verify::render(run_verification(options));
      std::string second = coxart::verify::render(run_verification(options));
      cases = 1;
      ok = !first.empty() && first == second &&
           first.find("verify: PASS") != std::string::npos;
      if (!ok) failed_cases = 1;
    }

    double elapsed = seconds_since(start);
    bool in_budget = elapsed < criterion.limit_seconds;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s  %s  %s  cases=%zu failures=%zu time=%.2fs limit=%.0fs\n",
                pass ? "PASS" : "FAIL", criterion.id, criterion.description,
                cases, failed_cases, elapsed, criterion.limit_seconds);
    std::fflush(stdout);
  }
  if (failures) {
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("acceptance: all criteria passed\n");
  return 0;
}
