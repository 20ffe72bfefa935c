#pragma once

// Named verification suites behind `qw22 check`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qw22 {

struct SuiteOptions {
  std::int64_t max_index = 4;
  std::int64_t max_len = 3;
  std::int64_t k_lo = -8;
  std::int64_t k_hi = 8;
  std::uint64_t seed = 1;
  std::int64_t cases = 200;
};

struct CheckReport {
  std::string suite;
  std::string profile;
  SuiteOptions bounds;
  std::uint64_t cases_run = 0;
  std::uint64_t cases_failed = 0;
  std::string first_counterexample;
  double wall_time_s = 0.0;

  bool passed() const noexcept { return cases_failed == 0; }
};

/// Every suite name except "all", in run order:
///   q-identities, rewrite-assoc, basis-stability, hopf-axioms, closed-forms,
///   relation-preservation, rep-oracle, osc-relations, classical-limit,
///   generalized-recovery.
const std::vector<std::string_view>& suite_names();

/// Runs one named suite. Throws UnknownIdentifierError for other names.
CheckReport run_suite(std::string_view name, const SuiteOptions& options);

/// Runs `name`, expanding "all" into every suite.
std::vector<CheckReport> run_check(std::string_view name,
                                   const SuiteOptions& options);

}  // namespace qw22
