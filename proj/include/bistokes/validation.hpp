#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bistokes/assembly.hpp"
#include "bistokes/geometry.hpp"
#include "bistokes/types.hpp"

namespace bistokes {

/// Field evaluated at a Cartesian point; the signature every oracle consumes.
using FieldFn = std::function<FieldSample(Vec2)>;

struct StokesResidual {
  double momentum = 0.0;     // |mu lap u - grad p| / (|grad p| + mu |D2 u|)
  double divergence = 0.0;   // |div u| relative to |grad u|
};

/// Central second-order differences of u and p in Cartesian coordinates.
/// The stencil must stay inside the closed exterior.
StokesResidual fd_stokes_residual(const FieldFn& field, const Geometry& g, double x,
                                  double y, double step = 0.0);

enum class FieldQuantity { Pressure, Strain, Stress };

struct SupNormEstimate {
  double value = 0.0;
  Vec2 argmax{};
  bool converged = true;  // refinement doubling changed the estimate by < 1%
};

/// Max of |quantity| over a gap-refined mesh (anisotropic in y at scale
/// sqrt(R delta)), both boundary circles, and a coarse far-field ring.
SupNormEstimate sup_norm_estimate(const FieldFn& field, const Geometry& g,
                                  FieldQuantity q);

struct RateFit {
  std::vector<double> deltas;
  std::vector<double> values;
  double slope = 0.0;
  double r_squared = 0.0;
  bool excluded_largest = false;  // pre-asymptotic point dropped (r^2 < 0.99 with it)
};

/// Least-squares slope of log(value) against log(delta); needs >= 3 gaps.
RateFit fit_rate(const std::vector<std::pair<double, double>>& pairs);

/// Traction pairing int_{boundary} psi_j . sigma nu dl by periodic trapezoid
/// quadrature with node doubling to 1e-9 stagnation. nu points out of the disk
/// into the fluid. rigid_j in {1,2,3}; which_boundary in {1,2}.
double contour_pairing(const FieldFn& field, const Geometry& g, int rigid_j,
                       int which_boundary, double stagnation_tol = 1e-9);

/// Same quadrature against an arbitrary pairing field (e.g. a background flow).
double contour_pairing_with(const FieldFn& field, const Geometry& g,
                            const std::function<Vec2(Vec2)>& pair_field,
                            int which_boundary, double stagnation_tol = 1e-9);

/// Independent quadrature of Q_n(s) = int cos(n t)/(cosh s - cos t) dt.
double Qn_quadrature(double s, int n, int nodes = 8192);

/// F0 and G0 by a second scheme (fixed Gauss-Legendre panels plus an inverted
/// tail substitution), independent of the adaptive-Simpson path.
std::pair<double, double> F0_G0_gauss();

struct EulerMaclaurinReport {
  double s = 0.0;
  double M = 0.0;
  double M_shifted = 0.0;      // identity form with analytic algebraic tail
  double identity_error = 0.0; // |M - M_shifted|
  double limit_deviation = 0.0;  // |(M + 1/2)/s^2 - F0|
};

EulerMaclaurinReport euler_maclaurin_check(double s);

/// One validation check: target vs computed at a tolerance.
struct CheckResult {
  std::string id;
  double target = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

}  // namespace bistokes
