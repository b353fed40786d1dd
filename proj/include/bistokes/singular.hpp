#pragma once

#include "bistokes/geometry.hpp"
#include "bistokes/types.hpp"

namespace bistokes {

/// Constants of the closed-form singular solutions.
///   A1 = 1/(2s - tanh 2s),  B1 = -A1/(2 cosh 2s),
///   A2 = -1/(2s + sinh 2s), C2 = (sinh^2 s / a) A2.
struct SingularConstants {
  double A1 = 0.0;
  double B1 = 0.0;
  double A2 = 0.0;
  double C2 = 0.0;
};

SingularConstants singular_constants(const Geometry& g);

/// (h1, p1): the exterior Stokes solution with boundary data -psi1/2 on the
/// left circle and +psi1/2 on the right one. Stream: h*Psi1 = (A1 z + B1 sinh 2z) sin t.
/// Pressure gauge: vanishes at infinity. At the point at infinity the limit
/// values (zero velocity, zero pressure, zero strain) are returned.
FieldSample h1_field(const Geometry& g, const BipolarPoint& p);

/// (h2~, p2~): the singular part of (h2, p2); boundary data -+psi2/2 - C2 psi3.
/// Stream: h*Psi2~ = A2 z sinh z.
FieldSample h2_tilde_field(const Geometry& g, const BipolarPoint& p);

/// Leading narrow-region stress of (h1, p1) at gap ordinate y:
///   3 mu R^3 / (y^2+Rd)^2 * I,
/// the isotropic matrix consistent with the vanish-at-infinity pressure gauge
/// (it exceeds -(3/4) mu R d^-2 (y^2+3Rd)(y^2-Rd)/(y^2+Rd)^2 by the gauge
/// constant (3/4) mu R d^-2). Remainder of the full stress is O(d^{-3/2}).
SymMat2 sigma_h1_narrow(const Geometry& g, double y);

/// Leading narrow-region stress of (h2, p2):
///   mu delta^-1 Rd/(y^2+Rd) * [[0,1],[1,0]].
SymMat2 sigma_h2_narrow(const Geometry& g, double y);

}  // namespace bistokes
