#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpadic {

enum class Metric {
  kExact,   // 0 when both sides are equal rational functions, 1 otherwise
  kDigits,  // p-adic digits of agreement (higher is better)
  kAbs      // complex |difference| (lower is better)
};

struct CaseResult {
  std::string label;
  bool passed = false;
  double measure = 0;
};

struct SuiteReport {
  std::string name;
  Metric metric = Metric::kExact;
  std::vector<CaseResult> cases;
  std::vector<std::string> notes;  // findings that are recorded, not asserted
  double seconds = 0;

  bool passed() const;
  int failures() const;
  /// Smallest digit count, largest |difference|, or 1 if any exact case failed.
  double worst() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite; random choices are drawn from a generator seeded with
/// `seed` and the suite name, so reports do not depend on suite order.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);
/// Runs suites concurrently and returns the reports in the given order.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, std::uint64_t seed, bool parallel = true);

/// Digits value used for agreements that are exact.
constexpr int kExactDigits = 1000;

}  // namespace qpadic
