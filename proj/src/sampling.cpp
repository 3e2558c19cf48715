#include "nullcone/sampling.hpp"

#include <numbers>

namespace nullcone {

Rng check_rng(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

ChartPoint random_point(Rng& rng, const Box& box) {
  ChartPoint p;
  for (int i = 0; i < 3; ++i) p[i] = uniform(rng, box.lo[i], box.hi[i]);
  return p;
}

ConePoint random_cone_point(Rng& rng, const Box& box) {
  const ChartPoint p = random_point(rng, box);
  return ConePoint(p, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

UnitQuaternion random_unit_quaternion(Rng& rng) {
  std::normal_distribution<double> n;
  for (;;) {
    const Quaternion q{n(rng), n(rng), n(rng), n(rng)};
    if (q.norm() > 1e-6) return UnitQuaternion::normalize(q);
  }
}

UnitImag random_unit_imag(Rng& rng) {
  std::normal_distribution<double> n;
  for (;;) {
    const Vec3 v{n(rng), n(rng), n(rng)};
    if (norm(v) > 1e-6) return UnitImag::normalize(v);
  }
}

TangentPoint random_tangent_point(Rng& rng) {
  const UnitImag base = random_unit_imag(rng);
  for (;;) {
    const Vec3 w = random_unit_imag(rng).vec();
    const Vec3 t = w - dot(w, base.vec()) * base.vec();
    if (norm(t) > 1e-3) return TangentPoint(base, UnitImag::normalize(t));
  }
}

}  // namespace nullcone
