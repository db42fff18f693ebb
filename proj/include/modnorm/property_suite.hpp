#pragma once

// Seeded property runner covering the invariants of every module, plus the
// 2×2 worked example with T = I, S = diag(−1, 1), R = diag(−1, 0).

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace modnorm::verify {

struct PropertyResult {
  std::string name;
  // "certificate" for closed-form decisions and identities, "evidence" for
  // grid or sampling oracles whose TRUE is only resolution-limited.
  std::string basis;
  // Informational rows are reported but never fail the suite.
  bool informational = false;
  int checked = 0;
  int passed = 0;
  // Smallest (allowed − observed) over all checks; negative on failure.
  double worst_slack = std::numeric_limits<double>::infinity();

  bool pass() const { return passed == checked; }
};

struct SuiteOptions {
  // Oracle cross-checks run on the first `oracle_instances` trials.
  int oracle_instances = 200;
  int min_dim = 1;
  int max_dim = 6;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<PropertyResult> properties;
  std::vector<std::pair<std::string, int>> instance_kinds;

  bool all_pass() const;
  const PropertyResult* find(const std::string& name) const;
};

/// Throws PreconditionFailed when trials < 1. Deterministic in (seed,
/// trials, options).
SuiteReport property_suite(std::uint64_t seed, int trials,
                           const SuiteOptions& options = {});

/// Only the worked 2×2 example.
SuiteReport remark_suite();

}  // namespace modnorm::verify
