#pragma once

#include <vector>

#include "bistokes/geometry.hpp"
#include "bistokes/types.hpp"

namespace bistokes {

/// One term of the general biharmonic solution for P = h*Psi:
/// (zeta factor) * (theta factor), with admissible pairings k in {n-1, n+1}
/// for the hyperbolic mode factors.
enum class ZetaFactor {
  Cosh,      // cosh(k zeta), k = 0 gives the constant 1
  Sinh,      // sinh(k zeta)
  ZetaCosh,  // zeta cosh(zeta)
  ZetaSinh,  // zeta sinh(zeta)
  Zeta,      // zeta
};

enum class ThetaFactor {
  Cos,  // cos(n theta), n = 0 gives the constant 1
  Sin,  // sin(n theta)
};

struct StreamTerm {
  double coef = 0.0;
  ZetaFactor zf = ZetaFactor::Cosh;
  int k = 0;  // frequency of the zeta factor (ignored for ZetaCosh/ZetaSinh/Zeta)
  ThetaFactor tf = ThetaFactor::Cos;
  int n = 0;  // theta mode
};

/// P = h*Psi as a log term plus a list of separable terms, ordered by
/// ascending theta mode; summation is compensated because the mode
/// coefficients alternate in sign and decay like n e^{-2ns}.
struct StreamSeries {
  /// Coefficient of (cosh z - cos t) ln(2 cosh z - 2 cos t).
  double log_coef = 0.0;
  std::vector<StreamTerm> terms;
  int n_max = 0;
  /// When true, the (Cosh x Cos) constant channels of the terms sum to zero
  /// (decay gauge); evaluation subtracts each channel term-wise so the value
  /// stays accurate near the point at infinity.
  bool gauge_compensated = false;
};

/// Value of P = h*Psi and its partials through second order.
struct HpsiDerivs {
  double p = 0.0;
  double pz = 0.0;
  double pt = 0.0;
  double pzz = 0.0;
  double pzt = 0.0;
  double ptt = 0.0;
};

/// Exact term-wise analytic derivatives; derivative_order selects how many
/// orders are populated (0, 1 or 2).
HpsiDerivs eval_hpsi(const StreamSeries& series, const BipolarPoint& p,
                     int derivative_order = 2);

/// Velocity components (u_zeta, u_theta) in the orthonormal bipolar frame:
/// u_zeta = -h dPsi/dt, u_theta = +h dPsi/dz.
Vec2 velocity_bipolar(const StreamSeries& series, const Geometry& g,
                      const BipolarPoint& p);

/// Strain entries (E_zz, E_zt, E_tt) in the bipolar frame; E_tt = -E_zz.
std::array<double, 3> strain_bipolar(const StreamSeries& series, const Geometry& g,
                                     const BipolarPoint& p);

/// Laplacian of Psi (not of h*Psi), used by the pressure conjugacy oracle.
double laplacian_psi(const StreamSeries& series, const Geometry& g,
                     const BipolarPoint& p);

/// Relative residual of the bipolar biharmonic operator
/// (d_z^4 + 2 d_z^2 d_t^2 + d_t^4 - 2 d_z^2 + 2 d_t^2 + 1) applied to h*Psi,
/// normalized by the sum of the operator pieces; finite differences of the
/// analytic second derivatives. Test oracle.
double biharmonic_residual_fd(const StreamSeries& series, const BipolarPoint& p,
                              double step);

/// Pressure as a pure mode series: even modes cosh(m z) cos(m t) (with the
/// gauge constant folded in so the value vanishes at infinity) or odd modes
/// sinh(m z) sin(m t) (which vanish there on their own).
struct PressureSeries {
  bool even_modes = true;
  std::vector<double> coef;  // coef[m-1] multiplies mode m = 1, 2, ...
  double eval(const BipolarPoint& p) const;
};

}  // namespace bistokes
