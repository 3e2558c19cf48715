// Command-line front end. Talks to the library only through the C API.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "nullcone/nullcone.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(nc_status s, const std::string& what) {
  if (s != NC_OK) throw InputError(what + ": " + nc_last_error());
}

struct StringDeleter {
  void operator()(char* s) const { nc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct MetricDeleter {
  void operator()(nc_metric* m) const { nc_metric_free(m); }
};
struct TrajectoryDeleter {
  void operator()(nc_trajectory* t) const { nc_trajectory_free(t); }
};

void configure_logging() {
  auto logger = spdlog::stderr_logger_mt("nullcone");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* env = std::getenv("NULLCONE_LOG");
  const std::string level = env ? env : "info";
  if (level == "debug") spdlog::set_level(spdlog::level::debug);
  else if (level == "quiet") spdlog::set_level(spdlog::level::off);
  else spdlog::set_level(spdlog::level::info);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + out + "'");
  f << text;
  spdlog::info("wrote {}", out);
}

std::vector<double> parse_triple(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InputError("--start: '" + item + "' is not a number");
    }
    if (used != item.size()) throw InputError("--start: '" + item + "' is not a number");
    v.push_back(x);
  }
  if (v.size() != 3) throw InputError("--start expects three comma-separated numbers x1,x2,x3");
  return v;
}

struct Settings {
  std::string metric;
  int c = 0;
  double theta = 0.0;
  std::string start;
  double T = 6.283185307179586;
  double step = 1e-3;
  int samples = 0;
  std::uint64_t seed = 7;
  std::string out;
  std::string format;
  double tolerance_scale = 1.0;
  std::string suite = "all";
  std::string figure;
};

std::string metric_source(const Settings& s) {
  if (!s.metric.empty()) return s.metric;
  if (s.c > 0) return "s2s1:c=" + std::to_string(s.c);
  return "s2s1:c=1";
}

int run_verify(const Settings& s) {
  if (!s.format.empty() && s.format != "json") throw InputError("verify writes json only");
  nc_verify_options o;
  nc_verify_options_default(&o);
  o.seed = s.seed;
  o.samples = s.samples;
  o.tolerance_scale = s.tolerance_scale;
  o.metric = s.metric.empty() ? nullptr : s.metric.c_str();
  spdlog::debug("verify suite={} seed={} samples={}", s.suite, s.seed, s.samples);
  char* raw = nullptr;
  int all_pass = 0;
  check(nc_verify(s.suite.c_str(), &o, &raw, &all_pass), "verify");
  OwnedString json(raw);
  emit(std::string(json.get()) + "\n", s.out);
  if (!all_pass) {
    for (const auto& r : nlohmann::json::parse(json.get()))
      if (!r["pass"].get<bool>()) spdlog::warn("check failed: {}", r["check"].get<std::string>());
    return kExitFailedCheck;
  }
  spdlog::info("all checks passed");
  return kExitOk;
}

int run_trajectory(const Settings& s, bool geodesic) {
  const std::string format = s.format.empty() ? "csv" : s.format;
  if (format != "csv" && format != "json") throw InputError("trajectories are written as csv or json");
  nc_metric* raw_metric = nullptr;
  check(nc_metric_load(metric_source(s).c_str(), &raw_metric), "metric");
  std::unique_ptr<nc_metric, MetricDeleter> metric(raw_metric);

  double x0[3];
  if (s.start.empty()) {
    double lo[3], hi[3];
    check(nc_metric_domain(metric.get(), lo, hi), "metric");
    for (int i = 0; i < 3; ++i) x0[i] = 0.5 * (lo[i] + hi[i]);
  } else {
    const auto v = parse_triple(s.start);
    for (int i = 0; i < 3; ++i) x0[i] = v[i];
  }
  spdlog::debug("{} on {} from ({}, {}, {}) theta={} T={} h={}", geodesic ? "geodesic" : "kernel flow",
                nc_metric_name(metric.get()), x0[0], x0[1], x0[2], s.theta, s.T, s.step);

  nc_trajectory* raw_traj = nullptr;
  if (geodesic)
    check(nc_geodesic_integrate(metric.get(), x0, s.theta, s.T, s.step, &raw_traj), "geodesic");
  else
    check(nc_kernel_flow(metric.get(), x0, s.theta, s.T, s.step, &raw_traj), "kernelflow");
  std::unique_ptr<nc_trajectory, TrajectoryDeleter> traj(raw_traj);
  if (nc_trajectory_truncated(traj.get())) spdlog::warn("trajectory left the metric domain and was truncated");

  if (format == "csv") {
    char* raw = nullptr;
    check(nc_trajectory_csv(traj.get(), &raw), "csv");
    OwnedString csv(raw);
    emit(csv.get(), s.out);
  } else {
    nlohmann::json rows = nlohmann::json::array();
    double row[6];
    for (std::size_t i = 0; i < nc_trajectory_size(traj.get()); ++i) {
      check(nc_trajectory_sample(traj.get(), i, row), "sample");
      rows.push_back({{"s", row[0]}, {"x1", row[1]}, {"x2", row[2]}, {"x3", row[3]}, {"theta", row[4]},
                      {"null_residual", row[5]}});
    }
    nlohmann::json doc{{"metric", nc_metric_name(metric.get())},
                       {"truncated", nc_trajectory_truncated(traj.get()) != 0},
                       {"samples", rows}};
    emit(doc.dump(2) + "\n", s.out);
  }
  return kExitOk;
}

int run_orbit(const Settings& s) {
  if (s.c < 1) throw InputError("orbit needs --c <n> with n >= 1");
  const std::string format = s.format.empty() ? "json" : s.format;
  if (format != "json" && format != "text") throw InputError("orbit tables are written as json or text");
  char* raw = nullptr;
  check(nc_orbit_table(s.c, s.seed, &raw), "orbit");
  OwnedString json(raw);
  if (format == "json") {
    emit(std::string(json.get()) + "\n", s.out);
    return kExitOk;
  }
  const auto doc = nlohmann::json::parse(json.get());
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(12);
  os << "Z_" << 2 * s.c << " orbit of q in S^3 (e^{i pi k/" << s.c << "} q)\n";
  os << "k\tw\tx\ty\tz\n";
  for (const auto& e : doc["z2c_orbit"]) {
    os << e["k"].get<int>();
    for (double v : e["q"]) os << '\t' << v;
    os << '\n';
  }
  os << "\nZ_" << s.c << " orbit of big_phi(q) in ST S^2\n";
  os << "m\tbase_x\tbase_y\tbase_z\tdir_x\tdir_y\tdir_z\n";
  for (const auto& e : doc["zc_orbit"]) {
    os << e["m"].get<int>();
    for (double v : e["base"]) os << '\t' << v;
    for (double v : e["dir"]) os << '\t' << v;
    os << '\n';
  }
  os << "\ncanonical representative";
  for (double v : doc["canonical"]) os << '\t' << v;
  os << '\n';
  emit(os.str(), s.out);
  return kExitOk;
}

int run_plot(const Settings& s) {
  if (s.figure != "figure1") throw InputError("unknown plot '" + s.figure + "' (available: figure1)");
  if (!s.format.empty() && s.format != "svg") throw InputError("plots are written as svg");
  const int c = s.c > 0 ? s.c : 4;
  char* raw = nullptr;
  check(nc_figure1_svg(c, &raw), "plot");
  OwnedString svg(raw);
  emit(svg.get(), s.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  Settings s;
  CLI::App app{"Null geodesics, Engel prolongations and their verification"};
  app.require_subcommand(1);

  auto common = [&s](CLI::App* sub) {
    sub->add_option("--metric", s.metric, "Built-in metric name or path to a metric JSON file");
    sub->add_option("--c", s.c, "S^1 factor c (selects s2s1:c=<n> when --metric is absent)")->check(CLI::PositiveNumber);
    sub->add_option("--seed", s.seed, "Random seed");
    sub->add_option("--out", s.out, "Output file (default: standard output)");
    sub->add_option("--format", s.format, "Output format: csv, json, svg or text");
  };
  auto traj_opts = [&s](CLI::App* sub) {
    sub->add_option("--theta", s.theta, "Initial fiber angle");
    sub->add_option("--start", s.start, "Start point x1,x2,x3 (default: domain midpoint)");
    sub->add_option("--T", s.T, "Parameter length");
    sub->add_option("--step", s.step, "RK4 step");
    sub->add_option("--samples", s.samples, "Unused for trajectories; accepted for uniformity");
  };

  auto* verify = app.add_subcommand("verify", "Run verification suites and print JSON reports");
  verify->add_option("suite", s.suite, "all | hopf | engel | kernel | contact | lens | examples")
      ->check(CLI::IsMember({"all", "hopf", "engel", "kernel", "contact", "lens", "examples"}));
  common(verify);
  verify->add_option("--samples", s.samples, "Override every sample count");
  verify->add_option("--tolerance-scale", s.tolerance_scale, "Multiply every threshold")->check(CLI::NonNegativeNumber);

  auto* geodesic = app.add_subcommand("geodesic", "Integrate a null geodesic and write a trajectory");
  common(geodesic);
  traj_opts(geodesic);
  auto* kernelflow = app.add_subcommand("kernelflow", "Integrate the kernel field and write a trajectory");
  common(kernelflow);
  traj_opts(kernelflow);

  auto* orbit = app.add_subcommand("orbit", "Print Z_2c and Z_c orbit tables");
  common(orbit);

  auto* plot = app.add_subcommand("plot", "Emit an SVG figure");
  plot->add_option("figure", s.figure, "Figure name (figure1)")->required();
  common(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (verify->parsed()) return run_verify(s);
    if (geodesic->parsed()) return run_trajectory(s, true);
    if (kernelflow->parsed()) return run_trajectory(s, false);
    if (orbit->parsed()) return run_orbit(s);
    if (plot->parsed()) return run_plot(s);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
