#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nullcone/expr.hpp"
#include "nullcone/geometry.hpp"

namespace nullcone {

/// Metric values at a point: g[i] = g_ii, dg[i][j] = d g_ii / d x_j.
struct MetricSample {
  std::array<double, 3> g{};
  std::array<std::array<double, 3>, 3> dg{};
};

/// Diagonal Lorentzian metric g11 dx1^2 + g22 dx2^2 + g33 dx3^2 on a chart
/// box, with x3 timelike. Construction certifies g11, g22 > 0 > g33 on a
/// 10x10x10 grid over the domain.
class DiagonalMetric {
 public:
  DiagonalMetric(std::string name, std::array<Expr, 3> components, Box domain);

  const std::string& name() const { return name_; }
  const Box& domain() const { return domain_; }
  const Expr& component(int i) const { return g_[i]; }
  const Expr& partial(int i, int j) const { return dg_[i][j]; }

  /// True when every partial derivative is identically zero.
  bool is_flat() const;

  std::array<double, 3> eval(const ChartPoint& p) const;
  MetricSample sample(const ChartPoint& p) const;

  /// Region used by randomized checks: the domain clipped to [-pi, pi]^3
  /// and shrunk by 10% of its width on each side.
  Box sampling_box() const;

 private:
  std::string name_;
  std::array<Expr, 3> g_;
  std::array<std::array<Expr, 3>, 3> dg_;
  Box domain_;
};

/// {"name": ..., "g11": ..., "g22": ..., "g33": ..., "domain": [[lo,hi],[lo,hi],[lo,hi]]}
DiagonalMetric load_metric(const nlohmann::json& config);

/// One of "minkowski3", "s2s1:c=<n>", "warped-sin4".
DiagonalMetric builtin_metric(std::string_view name);

/// The metrics exercised by the verification suites.
std::vector<std::string> builtin_metric_names();

/// A built-in name, or else a path to a metric JSON file.
DiagonalMetric resolve_metric(std::string_view source);

}  // namespace nullcone
