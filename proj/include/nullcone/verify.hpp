#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nullcone/report.hpp"

namespace nullcone {

struct VerifyOptions {
  std::uint64_t seed = 7;
  /// Overrides every per-check sample count when positive.
  int samples = 0;
  /// Multiplies every threshold after the checks have run.
  double tolerance_scale = 1.0;
  /// Restricts the metric-based suites to one metric (built-in name or JSON
  /// path); empty means all built-in metrics.
  std::string metric;
  /// When non-empty, only checks whose name starts with one of these
  /// prefixes run.
  std::vector<std::string> only;
};

/// "all", "hopf", "engel", "kernel", "contact", "lens", "examples".
const std::vector<std::string>& suite_names();

/// Runs a suite; reports come back sorted by check name. Independent checks
/// run concurrently, each with its own generator derived from (seed, name).
std::vector<CheckReport> run_suite(std::string_view suite, const VerifyOptions& opts = {});

/// Ratio of endpoint errors of the closed S^2 x S^1 (c = 1) geodesic from
/// (pi/2, 0, 0), theta = pi/4, over T = 2 pi, with n and 2n RK4 steps.
double rk4_error_ratio(int n = 64);

}  // namespace nullcone
