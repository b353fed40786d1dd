#pragma once

#include <memory>

#include "bistokes/geometry.hpp"
#include "bistokes/noslip.hpp"
#include "bistokes/singular.hpp"
#include "bistokes/types.hpp"

namespace bistokes {

/// Linear background U(x,y) = [[a, c],[d, -a]] (x,y)^T with P = 0.
struct Background {
  double a_coef = 0.0;
  double c_coef = 0.0;
  double d_coef = 0.0;

  Vec2 velocity(Vec2 xy) const {
    return {a_coef * xy.x + c_coef * xy.y, d_coef * xy.x - a_coef * xy.y};
  }
  double extensional_amplitude() const { return a_coef; }
  double shear_amplitude() const { return 0.5 * (c_coef + d_coef); }
  double rotation_amplitude() const { return 0.5 * (c_coef - d_coef); }
  bool degenerate() const {
    const double cd = c_coef + d_coef;
    return a_coef * a_coef + cd * cd == 0.0;
  }
};

inline Background background_ex() { return {1.0, 0.0, 0.0}; }
inline Background background_sh() { return {0.0, 1.0, 1.0}; }

/// Traction pairings over the right circle and the rigid-motion constants.
///   I1   = int psi1 . sigma[h1] nu,     J1   = int U_ex . sigma[h1] nu,
///   I22  = int psi2 . sigma[h2] nu,     I23  = int psi3 . sigma[h2] nu,
///   Irot = int psi3 . sigma[h_rot] nu,  J2   = int U_sh . sigma[h2] nu,
///   Jrot = int U_sh . sigma[h_rot] nu,
/// with h2 = h2~ + C2 h_rot. The second row of the constants' system couples
/// through int psi2 . sigma[h_rot] nu = 2 I23.
struct IntegralSet {
  double I1 = 0.0;
  double I22 = 0.0;
  double I23 = 0.0;
  double Irot = 0.0;
  double J1 = 0.0;
  double J2 = 0.0;
  double Jrot = 0.0;
  double c21 = 0.0;
  double c22 = 0.0;
  double c23 = 0.0;
  double system_det = 0.0;
};

/// Q_n(s) = int_{-pi}^{pi} cos(n t)/(cosh s - cos t) dt = 2 pi e^{-ns}/sinh s.
double Qn(double s, int n);

/// All pairings from closed forms (series constants K_v, K_rot, d0, d0' inside).
IntegralSet boundary_integrals(const Geometry& g);

/// c21 = J1/I1 and (c22, c23) from the 2x2 traction system, solved in closed
/// form with the determinant reported.
IntegralSet rigid_constants(const Geometry& g);

/// A composed exterior solution for a linear background: the no-slip parts,
/// the weighted singular parts and the rigid-rotation remainder.
class FlowSolution {
 public:
  FlowSolution(Geometry g, Background bg, int N = 0);

  const Geometry& geometry() const { return g_; }
  const Background& background() const { return bg_; }
  const IntegralSet& constants() const { return consts_; }
  const SingularConstants& singular() const { return sing_; }
  const NoSlipSolution& v1() const { return v1_; }
  const NoSlipSolution& v2() const { return v2_; }
  const NoSlipSolution& hrot() const { return hrot_; }

  /// Field at a Cartesian point of the closed exterior; boundary points give
  /// the rigid-motion values. Points strictly inside a disk are domain errors.
  FieldSample eval(double x, double y) const;
  FieldSample eval(const BipolarPoint& p) const;

  /// Velocity the composed solution takes on the two boundary circles.
  Vec2 boundary_velocity(int which_disk, Vec2 xy) const;

 private:
  Geometry g_;
  Background bg_;
  IntegralSet consts_;
  SingularConstants sing_;
  NoSlipSolution v1_, v2_, hrot_;
  double w_v1_ = 0.0, w_h1_ = 0.0;
  double w_v2_ = 0.0, w_h2t_ = 0.0, w_hrot_ = 0.0;
  double w_rigid_rot_ = 0.0;
};

/// Leading narrow-region stress of the composed flow at x ~ 0:
/// a * 12 mu sqrt(R/d) (Rd)^2/(y^2+Rd)^2 I  +  (c+d)/2 * 2 mu sqrt(R/d) Rd/(y^2+Rd) [[0,1],[1,0]],
/// the extensional matrix being 2 c21 sigma_h1_narrow at leading order.
SymMat2 sigma_narrow_asymptotic(const Geometry& g, const Background& bg, double y);

}  // namespace bistokes
