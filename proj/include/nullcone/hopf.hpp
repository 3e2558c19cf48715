#pragma once

#include <vector>

#include "nullcone/quaternion.hpp"

namespace nullcone {

/// Point of the lens space L(2c, 1) = S^3 / Z_2c, stored as the canonical
/// representative of its orbit {e^{i pi k / c} q : k = 0..2c-1}.
struct LensClass {
  int c = 1;
  UnitQuaternion rep;
};

/// Hopf-like fibration S^3 -> S^2, q -> q^-1 w q.
UnitImag hopf_tau(const UnitImag& w, const UnitQuaternion& q);

/// A point of the fiber of hopf_tau(w, .) over p.
UnitQuaternion hopf_section(const UnitImag& w, const UnitImag& p);

/// The double cover S^3 -> ST S^2, q -> (q^-1 k q, q^-1 j q).
TangentPoint big_phi(const UnitQuaternion& q);

/// One of the two antipodal preimages of a point under big_phi.
UnitQuaternion big_phi_preimage(const TangentPoint& pt);

/// e^{i pi k / c} q.
UnitQuaternion lens_act(int c, int k, const UnitQuaternion& q);

/// Generator of the Z_c action on ST S^2: rotation by 2 pi / c along the
/// great circle through (base, dir).
TangentPoint zc_act_sts2(int c, const TangentPoint& pt);

/// Rotation by an arbitrary angle along the great circle through (base, dir).
TangentPoint rotate_along_circle(const TangentPoint& pt, double angle);

/// Geodesic flow of ST S^2 in the quaternion model: e^{i theta / 2} q.
UnitQuaternion sts2_flow(const UnitQuaternion& q, double theta);

/// Full Z_2c orbit of q, in the order k = 0..2c-1.
std::vector<UnitQuaternion> lens_orbit(int c, const UnitQuaternion& q);

/// Canonical orbit representative: maximal w component, ties (within 1e-12)
/// broken lexicographically by (x, y, z). Throws DegenerateOrbit if two
/// distinct orbit elements tie in every component.
LensClass lens_canonicalize(int c, const UnitQuaternion& q);

}  // namespace nullcone
