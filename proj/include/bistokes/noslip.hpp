#pragma once

#include <utility>
#include <vector>

#include "bistokes/geometry.hpp"
#include "bistokes/stream.hpp"
#include "bistokes/types.hpp"

namespace bistokes {

enum class FlowCase { Extensional, Shear, Rotation };

const char* flow_case_name(FlowCase c);

/// Truncation order with N e^{-2Ns} < 1e-14 (target tail 1e-12 with two digits
/// of headroom), solved by fixed-point iteration; capped at ceil(200/s).
struct Truncation {
  int N = 0;
  bool capped = false;
};
Truncation auto_truncation(double s);

/// A no-slip series solution: coefficients, their stream-series form, and the
/// conjugate pressure series.
///   Extensional: stream of (v1 - U_ex); modes sinh((n+1)z), sinh((n-1)z) x sin(n t),
///                with low-order slots a1 (sinh 2z sin t) and b1 (z sin t).
///   Shear:       stream of (v2 - U_sh); K_v log term, c0 cosh z + d0 z sinh z,
///                modes cosh((n+1)z), cosh((n-1)z) x cos(n t).
///   Rotation:    stream of h_rot itself; K_rot log term and primed analogues.
struct NoSlipSolution {
  FlowCase flow_case = FlowCase::Extensional;
  Geometry g{};
  double K = 0.0;
  int N = 0;
  bool truncation_capped = false;
  double tail_bound = 0.0;
  double low1 = 0.0;  // a1 / c0 / a0'
  double low2 = 0.0;  // b1 / d0 / d0'
  std::vector<double> cn, dn;  // mode n = 1..N stored at index n-1
  StreamSeries stream;
  PressureSeries pressure_series;  // scaled by 2 mu / a already

  double pressure(const BipolarPoint& p) const;
  /// Full field of the named solution: (v1,q1), (v2,q2) or (h_rot,p_rot),
  /// background included. Cartesian frame.
  FieldSample field(const BipolarPoint& p) const;
  /// Series-only field (no background): the stream-series velocity/strain and
  /// the conjugate pressure. For the rotation case this already is (h_rot,p_rot).
  FieldSample series_field(const BipolarPoint& p) const;
};

NoSlipSolution phi1_coefficients(const Geometry& g, int N = 0);
NoSlipSolution phi2_coefficients(const Geometry& g, int N = 0);
NoSlipSolution phirot_coefficients(const Geometry& g, int N = 0);

NoSlipSolution noslip_solution(const Geometry& g, FlowCase c, int N = 0);

/// The series M (exponentially convergent form) and M' entering K_v and K_rot.
double series_M(double s);
double series_M_prime(double s);

/// M computed from the shifted identity
///   M + 1/2 = sum_{n>=2} 4(sinh^2 ns - n^2 sinh^2 s)/(n(n^2-1)(sinh 2ns + n sinh 2s)),
/// whose terms decay only like 2/n^3; the algebraic tail past the cutoff is
/// added in closed form. Oracle for series_M.
double series_M_shifted(double s);

double K_v_constant(const Geometry& g);
double K_rot_constant(const Geometry& g);

/// Integrands of the limit constants F0, G0.
double f0_integrand(double x);
double g0_integrand(double x);

/// (F0, G0) by adaptive quadrature on (0, 40] plus the analytic algebraic tail
/// of f0 (f0 = 2/x^3 + O(poly e^{-2x})); cached after the first call.
std::pair<double, double> F0_G0();

/// Analytic background of each flow case, evaluated in Cartesian coordinates.
Vec2 background_velocity(FlowCase c, Vec2 xy);
SymMat2 background_strain(FlowCase c);

}  // namespace bistokes
