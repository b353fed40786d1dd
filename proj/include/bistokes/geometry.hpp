#pragma once

#include <array>

#include "bistokes/types.hpp"

namespace bistokes {

/// Two equal disks of radius R separated by a gap delta, centered on the x-axis.
/// The bipolar coordinates (zeta, theta) with focal half-distance a map the two
/// boundary circles onto {zeta = -s} (left disk D1) and {zeta = +s} (right disk D2).
struct Geometry {
  double R = 1.0;
  double delta = 1e-2;
  double mu = 1.0;
  double a = 0.0;  // sqrt(delta (R + delta/4))
  double s = 0.0;  // asinh(a / R)
  std::array<Vec2, 2> centers{};
};

/// Point in bipolar coordinates. Exterior points have zeta in (-s, s);
/// (0, 0) is the point at infinity.
struct BipolarPoint {
  double zeta = 0.0;
  double theta = 0.0;
};

/// Entries of the symmetric orthogonal transition matrix
/// Xi = [[alpha, -beta], [-beta, -alpha]] with columns e_zeta, e_theta.
struct Frame {
  double alpha = 0.0;
  double beta = 0.0;
};

Geometry make_geometry(double R, double delta, double mu = 1.0);

/// Distance of (zeta, theta) from the point at infinity (0, 0), with theta
/// measured around the circle.
double infinity_distance(const BipolarPoint& p);

/// Points closer to (0,0) than this are reported as "at infinity"; downstream
/// evaluators use dedicated limit values there.
inline constexpr double kInfinityTol = 1e-8;

Vec2 bipolar_to_cart(const Geometry& g, const BipolarPoint& p);
BipolarPoint cart_to_bipolar(const Geometry& g, double x, double y);

Frame frame_xi(const BipolarPoint& p);

/// Scaling function h = (cosh zeta - cos theta) / a, the metric factor of the map.
double scale_h(const Geometry& g, const BipolarPoint& p);

/// Rotate a bipolar-frame vector (v_zeta, v_theta) to Cartesian components.
inline Vec2 vector_to_cartesian(const Frame& f, Vec2 v_bipolar) {
  return {f.alpha * v_bipolar.x - f.beta * v_bipolar.y,
          -f.beta * v_bipolar.x - f.alpha * v_bipolar.y};
}

/// Conjugate a symmetric bipolar-frame tensor by Xi: returns Xi T Xi.
SymMat2 tensor_to_cartesian(const Frame& f, double t_zz, double t_zt, double t_tt);

/// Rigid motions: translations (1,0), (0,1) and the rotation (y,-x).
inline Vec2 rigid_motion(int j, Vec2 xy) {
  switch (j) {
    case 1:
      return {1.0, 0.0};
    case 2:
      return {0.0, 1.0};
    case 3:
      return {xy.y, -xy.x};
    default:
      throw ConfigError("rigid_motion: j must be 1, 2 or 3");
  }
}

}  // namespace bistokes
