#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "nullcone/geometry.hpp"
#include "nullcone/quaternion.hpp"

namespace nullcone {

using Rng = std::mt19937_64;

/// Generator for a named check: seeded from (seed, FNV-1a hash of name), so
/// each check's stream is independent of which other checks run.
Rng check_rng(std::uint64_t seed, std::string_view name);

double uniform(Rng& rng, double lo, double hi);
ChartPoint random_point(Rng& rng, const Box& box);
ConePoint random_cone_point(Rng& rng, const Box& box);
UnitQuaternion random_unit_quaternion(Rng& rng);
UnitImag random_unit_imag(Rng& rng);
TangentPoint random_tangent_point(Rng& rng);

}  // namespace nullcone
