#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coxart::verify {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t orbit_cap = 1'000'000;
  std::string suite = "all";  // one of suite_names() or "all"
};

struct SuiteOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failure descriptions
};

// Suite registry, in execution order.
std::vector<std::string> suite_names();

// Runs the selected suites. Fully deterministic for a fixed seed: fixed
// iteration order, no timing or addresses in any outcome.
std::vector<SuiteOutcome> run_verification(const VerifyOptions& options);

std::string render(const std::vector<SuiteOutcome>& outcomes);
bool all_passed(const std::vector<SuiteOutcome>& outcomes);

// Graphs the suites run on (also shipped under data/).
extern const char* const kTriangleGraphText;      // a-b:3, b-c:3, a-c:2
extern const char* const kDihedral5GraphText;  // a-b:5
extern const char* const kAffineGraphText;     // all-3 triangle

}  // namespace coxart::verify
