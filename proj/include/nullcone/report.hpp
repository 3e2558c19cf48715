#pragma once

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

namespace nullcone {

/// Outcome of one named verification. pass holds exactly when
/// max_residual <= threshold; a NaN residual counts as infinite.
struct CheckReport {
  std::string check;
  int samples = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::array<double, 4> worst_point{};
};

/// Running maximum of residuals with the point that produced it.
class ResidualTracker {
 public:
  void add(double residual, const std::array<double, 4>& point);
  int count() const { return count_; }
  double max() const { return max_; }
  const std::array<double, 4>& worst() const { return worst_; }

  CheckReport report(std::string check, double threshold) const;

 private:
  int count_ = 0;
  double max_ = 0.0;
  std::array<double, 4> worst_{};
  bool has_worst_ = false;
};

CheckReport make_report(std::string check, int samples, double max_residual, double threshold,
                        const std::array<double, 4>& worst_point);

/// Multiplies the threshold and re-derives pass.
CheckReport scale_threshold(CheckReport r, double scale);

nlohmann::json to_json(const CheckReport& r);

/// JSON array of the reports sorted by check name, two-space indented.
std::string reports_to_json(std::vector<CheckReport> reports);

}  // namespace nullcone
