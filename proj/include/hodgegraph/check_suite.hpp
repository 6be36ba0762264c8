#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hodgegraph/cycles.hpp"
#include "hodgegraph/graph.hpp"

namespace hodgegraph {

enum class CheckSuite { Theorems, Hodge, All };

/// Throws Errc::MalformedInput for anything other than theorems, hodge or all.
CheckSuite parse_check_suite(std::string_view name);
std::string_view to_string(CheckSuite suite);

/// One identity aggregated over all trials.
struct CheckEntry {
  std::string identity;
  std::size_t trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

struct CheckResult {
  CheckSuite suite = CheckSuite::All;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<CheckEntry> entries;
  bool pass = true;
};

struct CheckOptions {
  CheckSuite suite = CheckSuite::All;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  /// Replaces every per-identity tolerance when set.
  std::optional<double> tolerance;
  std::size_t cycle_limit = kDefaultCycleLimit;
};

/// Randomized identity checks on one graph. Deterministic for a fixed seed.
CheckResult run_checks(const Graph& g, const CheckOptions& options);

}  // namespace hodgegraph
