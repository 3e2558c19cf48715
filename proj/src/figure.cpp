#include "nullcone/figure.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "nullcone/error.hpp"
#include "nullcone/worked_examples.hpp"

namespace nullcone {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSize = 480.0;
constexpr double kScale = 160.0;

struct View {
  Vec3 right, up;
};

View make_view() {
  const Vec3 eye = normalized(Vec3{1.0, 0.7, 0.6});
  const Vec3 right = normalized(cross(Vec3{0.0, 0.0, 1.0}, eye));
  return {right, cross(eye, right)};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double radial(double t) { return 1.0 + 0.3 * (1.0 - std::cos(t)) / 2.0; }

}  // namespace

TangentPoint default_figure_start() {
  const Vec3 x = normalized(Vec3{0.8, -0.3, 0.5});
  const Vec3 u = normalized(cross(x, Vec3{0.2, 1.0, 0.4}));
  return TangentPoint(UnitImag::normalize(x), UnitImag::normalize(u));
}

std::string figure1_svg(int c, const TangentPoint& start) {
  if (c < 1) throw Error(ErrorCode::InvalidArgument, "c must be a positive integer");
  const View view = make_view();
  const double cx = kSize / 2.0, cy = kSize / 2.0;
  auto screen = [&](Vec3 p) {
    return std::pair<double, double>{cx + kScale * dot(p, view.right), cy - kScale * dot(p, view.up)};
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  os << "  <title>Null geodesic in S2xS1 with c = " << c << "</title>\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <circle class=\"sphere\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(kScale)
     << "\" fill=\"#e6e6e6\" stroke=\"#999999\"/>\n";
  for (double r : {1.1, 1.2, 1.3})
    os << "  <circle class=\"annulus\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\""
       << fmt(kScale * r) << "\" fill=\"none\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";

  const S2S1Geodesic g{start, c};
  constexpr int kSteps = 720;
  os << "  <polyline class=\"geodesic\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (int k = 0; k <= kSteps; ++k) {
    const double s = 2.0 * kPi * k / kSteps;
    const S2S1Point p = s2s1_eval(g, s);
    const auto [x, y] = screen(radial(p.t) * p.point.vec());
    os << (k ? " " : "") << fmt(x) << ',' << fmt(y);
  }
  os << "\"/>\n";

  for (const auto& pt : slice_points(g)) {
    const auto [x, y] = screen(pt.base().vec());
    os << "  <circle class=\"slice-point\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
       << "\" r=\"5\" fill=\"#c0392b\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace nullcone
