#include "bistokes/geometry.hpp"

#include <cmath>

namespace bistokes {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
}

Geometry make_geometry(double R, double delta, double mu) {
  if (!(R > 0.0)) throw ConfigError("make_geometry: R must be positive");
  if (!(delta > 0.0)) throw ConfigError("make_geometry: delta must be positive");
  if (!(mu > 0.0)) throw ConfigError("make_geometry: mu must be positive");
  Geometry g;
  g.R = R;
  g.delta = delta;
  g.mu = mu;
  g.a = std::sqrt(delta * (R + delta / 4.0));
  g.s = std::asinh(g.a / R);
  g.centers = {Vec2{-R - delta / 2.0, 0.0}, Vec2{R + delta / 2.0, 0.0}};
  return g;
}

double infinity_distance(const BipolarPoint& p) {
  double t = std::fmod(p.theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  const double t_wrapped = std::min(t, kTwoPi - t);
  return std::hypot(p.zeta, t_wrapped);
}

Vec2 bipolar_to_cart(const Geometry& g, const BipolarPoint& p) {
  if (infinity_distance(p) < kInfinityTol)
    throw DomainError("bipolar_to_cart: (zeta,theta)=(0,0) is the point at infinity");
  const double H = std::cosh(p.zeta) - std::cos(p.theta);
  return {g.a * std::sinh(p.zeta) / H, g.a * std::sin(p.theta) / H};
}

BipolarPoint cart_to_bipolar(const Geometry& g, double x, double y) {
  const double dp2 = (x + g.a) * (x + g.a) + y * y;
  const double dm2 = (x - g.a) * (x - g.a) + y * y;
  if (dp2 == 0.0 || dm2 == 0.0)
    throw DomainError("cart_to_bipolar: point coincides with a focus (+-a, 0)");
  BipolarPoint p;
  p.zeta = 0.5 * std::log(dp2 / dm2);
  double theta = std::atan2(y, x - g.a) - std::atan2(y, x + g.a);
  if (theta < 0.0) theta += kTwoPi;
  p.theta = theta;
  if (infinity_distance(p) < kInfinityTol)
    throw DomainError("cart_to_bipolar: point is at infinity for this geometry");
  return p;
}

Frame frame_xi(const BipolarPoint& p) {
  if (infinity_distance(p) < kInfinityTol)
    throw DomainError("frame_xi: frame is undefined at the point at infinity");
  const double H = std::cosh(p.zeta) - std::cos(p.theta);
  return {(1.0 - std::cosh(p.zeta) * std::cos(p.theta)) / H,
          std::sinh(p.zeta) * std::sin(p.theta) / H};
}

double scale_h(const Geometry& g, const BipolarPoint& p) {
  if (infinity_distance(p) < kInfinityTol)
    throw DomainError("scale_h: h vanishes only at the point at infinity");
  return (std::cosh(p.zeta) - std::cos(p.theta)) / g.a;
}

SymMat2 tensor_to_cartesian(const Frame& f, double t_zz, double t_zt, double t_tt) {
  const double al = f.alpha, be = f.beta;
  SymMat2 m;
  m.xx = al * al * t_zz - 2.0 * al * be * t_zt + be * be * t_tt;
  m.xy = -al * be * (t_zz - t_tt) - (al * al - be * be) * t_zt;
  m.yy = be * be * t_zz + 2.0 * al * be * t_zt + al * al * t_tt;
  return m;
}

}  // namespace bistokes
