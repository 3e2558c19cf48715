#include "nullcone/report.hpp"

#include <algorithm>
#include <cmath>

namespace nullcone {

void ResidualTracker::add(double residual, const std::array<double, 4>& point) {
  ++count_;
  if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
  if (!has_worst_ || residual > max_) {
    max_ = residual;
    worst_ = point;
    has_worst_ = true;
  }
}

CheckReport ResidualTracker::report(std::string check, double threshold) const {
  return make_report(std::move(check), count_, max_, threshold, worst_);
}

CheckReport make_report(std::string check, int samples, double max_residual, double threshold,
                        const std::array<double, 4>& worst_point) {
  CheckReport r;
  r.check = std::move(check);
  r.samples = samples;
  r.max_residual = std::isnan(max_residual) ? std::numeric_limits<double>::infinity() : max_residual;
  r.threshold = threshold;
  r.pass = samples > 0 && r.max_residual <= threshold;
  r.worst_point = worst_point;
  return r;
}

CheckReport scale_threshold(CheckReport r, double scale) {
  r.threshold *= scale;
  r.pass = r.samples > 0 && r.max_residual <= r.threshold;
  return r;
}

nlohmann::json to_json(const CheckReport& r) {
  return nlohmann::json{{"check", r.check},
                        {"samples", r.samples},
                        {"max_residual", r.max_residual},
                        {"threshold", r.threshold},
                        {"pass", r.pass},
                        {"worst_point", r.worst_point}};
}

std::string reports_to_json(std::vector<CheckReport> reports) {
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["samples"] = r.samples;
    j["max_residual"] = r.max_residual;
    j["threshold"] = r.threshold;
    j["pass"] = r.pass;
    j["worst_point"] = r.worst_point;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace nullcone
