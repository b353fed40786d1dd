#include "bistokes/singular.hpp"

#include <cmath>

namespace bistokes {

SingularConstants singular_constants(const Geometry& g) {
  SingularConstants c;
  c.A1 = 1.0 / (2.0 * g.s - std::tanh(2.0 * g.s));
  c.B1 = -c.A1 / (2.0 * std::cosh(2.0 * g.s));
  c.A2 = -1.0 / (2.0 * g.s + std::sinh(2.0 * g.s));
  c.C2 = std::sinh(g.s) * std::sinh(g.s) / g.a * c.A2;
  return c;
}

FieldSample h1_field(const Geometry& g, const BipolarPoint& p) {
  if (infinity_distance(p) < kInfinityTol) return {};  // all limits vanish
  const SingularConstants c = singular_constants(g);
  const double z = p.zeta, t = p.theta;
  const double H = std::cosh(z) - std::cos(t);
  const double h = H / g.a;
  const Frame f = frame_xi(p);

  const double w = c.A1 * z + c.B1 * std::sinh(2.0 * z);
  const Vec2 u_bip{w * f.alpha,
                   std::sin(t) * (c.A1 + 2.0 * c.B1 * std::cosh(2.0 * z) -
                                  std::sinh(z) * w / H)};

  const double e_zz = -h * (c.A1 + 2.0 * c.B1 * std::cosh(2.0 * z)) * std::cos(t);
  const double e_zt = h * 2.0 * c.B1 * std::sinh(2.0 * z) * std::sin(t);

  FieldSample out;
  out.u = vector_to_cartesian(f, u_bip);
  out.p = 2.0 * g.mu / g.a *
              ((c.A1 - 2.0 * c.B1) * std::cosh(z) * std::cos(t) +
               c.B1 * std::cosh(2.0 * z) * std::cos(2.0 * t)) -
          2.0 * g.mu / g.a * (c.A1 - c.B1);
  out.strain = tensor_to_cartesian(f, e_zz, e_zt, -e_zz);
  out.stress = identity2(-out.p) + 2.0 * g.mu * out.strain;
  return out;
}

FieldSample h2_tilde_field(const Geometry& g, const BipolarPoint& p) {
  if (infinity_distance(p) < kInfinityTol) return {};
  const SingularConstants c = singular_constants(g);
  const double z = p.zeta, t = p.theta;
  const double h = (std::cosh(z) - std::cos(t)) / g.a;
  const Frame f = frame_xi(p);

  const Vec2 u_bip{c.A2 * z * f.beta, c.A2 * z * f.alpha + c.A2 * std::sinh(z)};
  const double e_zt = h * c.A2 * std::cosh(z);

  FieldSample out;
  out.u = vector_to_cartesian(f, u_bip);
  out.p = -2.0 * g.mu / g.a * c.A2 * std::sinh(z) * std::sin(t);
  out.strain = tensor_to_cartesian(f, 0.0, e_zt, 0.0);
  out.stress = identity2(-out.p) + 2.0 * g.mu * out.strain;
  return out;
}

namespace {
void require_in_narrow_region(const Geometry& g, double y, const char* who) {
  if (std::abs(y) > 3.0 * std::sqrt(g.R * g.delta))
    throw DomainError(std::string(who) + ": |y| exceeds 3 sqrt(R delta), outside the narrow region");
}
}  // namespace

SymMat2 sigma_h1_narrow(const Geometry& g, double y) {
  require_in_narrow_region(g, y, "sigma_h1_narrow");
  const double rd = g.R * g.delta;
  const double y2 = y * y;
  return identity2(3.0 * g.mu * g.R * g.R * g.R / ((y2 + rd) * (y2 + rd)));
}

SymMat2 sigma_h2_narrow(const Geometry& g, double y) {
  require_in_narrow_region(g, y, "sigma_h2_narrow");
  const double rd = g.R * g.delta;
  return offdiag2(g.mu / g.delta * rd / (y * y + rd));
}

}  // namespace bistokes
