#include "nullcone/metric.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "nullcone/error.hpp"

namespace nullcone {

namespace {

std::string point_text(const ChartPoint& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << p.x1 << ", " << p.x2 << ", " << p.x3 << ")";
  return os.str();
}

void certify_signature(const std::string& name, const std::array<Expr, 3>& g, const Box& box) {
  constexpr int kGrid = 10;
  for (int a = 0; a < kGrid; ++a)
    for (int b = 0; b < kGrid; ++b)
      for (int c = 0; c < kGrid; ++c) {
        const std::array<int, 3> idx{a, b, c};
        ChartPoint p;
        for (int i = 0; i < 3; ++i)
          p[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * idx[i] / (kGrid - 1);
        for (int i = 0; i < 3; ++i) {
          double v = 0.0;
          try {
            v = eval_expr(g[i], p);
          } catch (const Error& e) {
            throw Error(ErrorCode::Signature, "metric '" + name + "': g" + std::to_string(i + 1) +
                                                  std::to_string(i + 1) + " not evaluable at " +
                                                  point_text(p) + ": " + e.what());
          }
          const bool ok = i < 2 ? v > 0.0 : v < 0.0;
          if (!ok)
            throw Error(ErrorCode::Signature,
                        "metric '" + name + "': g" + std::to_string(i + 1) + std::to_string(i + 1) +
                            " = " + std::to_string(v) + " has the wrong sign at " + point_text(p));
        }
      }
}

Expr parse_component(const nlohmann::json& config, const char* key) {
  if (!config.contains(key) || !config[key].is_string())
    throw Error(ErrorCode::InvalidArgument, std::string("metric config needs string field '") + key + "'");
  const std::string src = config[key].get<std::string>();
  try {
    return parse_expr(src);
  } catch (const Error& e) {
    throw Error(e.code(), std::string(key) + ": " + e.what(), e.offset());
  }
}

}  // namespace

DiagonalMetric::DiagonalMetric(std::string name, std::array<Expr, 3> components, Box domain)
    : name_(std::move(name)), g_(std::move(components)), domain_(domain) {
  for (int i = 0; i < 3; ++i) {
    if (!(domain_.lo[i] < domain_.hi[i]) || !std::isfinite(domain_.lo[i]) ||
        !std::isfinite(domain_.hi[i]))
      throw Error(ErrorCode::InvalidArgument, "metric '" + name_ + "': empty or unbounded domain");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) dg_[i][j] = diff_expr(g_[i], j);
  certify_signature(name_, g_, domain_);
}

bool DiagonalMetric::is_flat() const {
  for (const auto& row : dg_)
    for (const auto& d : row)
      if (!d.is_zero()) return false;
  return true;
}

std::array<double, 3> DiagonalMetric::eval(const ChartPoint& p) const {
  return {eval_expr(g_[0], p), eval_expr(g_[1], p), eval_expr(g_[2], p)};
}

MetricSample DiagonalMetric::sample(const ChartPoint& p) const {
  MetricSample s;
  s.g = eval(p);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.dg[i][j] = dg_[i][j].is_zero() ? 0.0 : eval_expr(dg_[i][j], p);
  return s;
}

Box DiagonalMetric::sampling_box() const {
  constexpr double pi = std::numbers::pi;
  Box b;
  for (int i = 0; i < 3; ++i) {
    const double lo = std::max(domain_.lo[i], -pi);
    const double hi = std::min(domain_.hi[i], pi);
    const double inset = 0.1 * (hi - lo);
    b.lo[i] = lo + inset;
    b.hi[i] = hi - inset;
  }
  return b;
}

DiagonalMetric load_metric(const nlohmann::json& config) {
  if (!config.is_object()) throw Error(ErrorCode::InvalidArgument, "metric config must be a JSON object");
  const std::string name = config.value("name", std::string("custom"));
  std::array<Expr, 3> g{parse_component(config, "g11"), parse_component(config, "g22"),
                        parse_component(config, "g33")};
  if (!config.contains("domain") || !config["domain"].is_array() || config["domain"].size() != 3)
    throw Error(ErrorCode::InvalidArgument, "metric config needs 'domain': [[lo,hi],[lo,hi],[lo,hi]]");
  Box box;
  for (int i = 0; i < 3; ++i) {
    const auto& iv = config["domain"][i];
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
      throw Error(ErrorCode::InvalidArgument, "metric domain entries must be [lo, hi] number pairs");
    box.lo[i] = iv[0].get<double>();
    box.hi[i] = iv[1].get<double>();
  }
  return DiagonalMetric(name, std::move(g), box);
}

DiagonalMetric builtin_metric(std::string_view name) {
  constexpr double pi = std::numbers::pi;
  if (name == "minkowski3") {
    return DiagonalMetric("minkowski3", {parse_expr("1"), parse_expr("1"), parse_expr("-1")},
                          Box{{-10.0, -10.0, -10.0}, {10.0, 10.0, 10.0}});
  }
  if (name == "warped-sin4") {
    return DiagonalMetric("warped-sin4",
                          {parse_expr("1"), parse_expr("1"), parse_expr("-1/sin(x3)^4")},
                          Box{{-10.0, -10.0, 0.1}, {10.0, 10.0, pi - 0.1}});
  }
  constexpr std::string_view prefix = "s2s1:c=";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = name.substr(prefix.size());
    int c = 0;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), c);
    if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size() || c < 1)
      throw Error(ErrorCode::InvalidArgument, "bad built-in metric name '" + std::string(name) + "'");
    return DiagonalMetric(std::string(name),
                          {parse_expr("1"), parse_expr("sin(x1)^2"),
                           parse_expr("-1/" + std::to_string(c * c))},
                          Box{{0.05, -30.0, -60.0}, {pi - 0.05, 30.0, 60.0}});
  }
  throw Error(ErrorCode::InvalidArgument, "unknown built-in metric '" + std::string(name) + "'");
}

std::vector<std::string> builtin_metric_names() {
  return {"minkowski3", "s2s1:c=1", "s2s1:c=2", "s2s1:c=3", "s2s1:c=4", "warped-sin4"};
}

DiagonalMetric resolve_metric(std::string_view source) {
  if (source == "minkowski3" || source == "warped-sin4" || source.substr(0, 7) == "s2s1:c=")
    return builtin_metric(source);
  std::ifstream in{std::string(source)};
  if (!in) throw Error(ErrorCode::Io, "cannot open metric file '" + std::string(source) + "'");
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, "metric file '" + std::string(source) + "': " + e.what());
  }
  return load_metric(config);
}

}  // namespace nullcone
