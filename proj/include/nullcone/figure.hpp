#pragma once

#include <string>

#include "nullcone/quaternion.hpp"

namespace nullcone {

/// Start used when no geodesic is given: a generic inclined great circle.
TangentPoint default_figure_start();

/// SVG of a null geodesic of (S^2 x S^1, g_c) over one base period. The S^2
/// point is drawn in orthographic projection and the S^1 coordinate t is the
/// radial factor 1 + 0.3 (1 - cos t) / 2, so the curve meets the unit sphere
/// exactly at the c slice points, which are marked with
/// <circle class="slice-point">.
std::string figure1_svg(int c, const TangentPoint& start = default_figure_start());

}  // namespace nullcone
