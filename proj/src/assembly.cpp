#include "bistokes/assembly.hpp"

#include <cmath>

namespace bistokes {

namespace {
constexpr double kPi = 3.141592653589793238462643;
// Points with |zeta| past s by more than this relative slack are inside a disk.
constexpr double kBoundarySlack = 1e-9;
}  // namespace

double Qn(double s, int n) {
  if (!(s > 0.0)) throw ConfigError("Qn: s must be positive");
  if (n < 0) throw ConfigError("Qn: n must be nonnegative");
  return 2.0 * kPi * std::exp(-n * s) / std::sinh(s);
}

IntegralSet boundary_integrals(const Geometry& g) {
  IntegralSet out;
  const double s = g.s, a = g.a, mu = g.mu;
  const SingularConstants sc = singular_constants(g);

  out.I1 = -4.0 * kPi * mu * sc.A1;
  out.J1 = -a * mu * sc.A1 / std::cosh(2.0 * s) * std::sinh(s) *
           ((-1.0 + 2.0 * std::cosh(2.0 * s)) * Qn(s, 0) - 2.0 * std::cosh(s) * Qn(s, 1) +
            Qn(s, 2));

  const double Kv = K_v_constant(g);
  const double Kr = K_rot_constant(g);
  const double shs = std::sinh(s), chs = std::cosh(s);
  const double d0_phi2 = a / (shs * chs + s) - Kv * shs * shs / (s + chs * shs);
  const double d0_rot = -Kr * shs * shs / (shs * chs + s);

  // int psi2 . sigma[h_rot] nu = 4 pi mu d0'; I23 = int psi3 . sigma[h2] nu is
  // half of it (C2 a K_rot = d0'/2).
  out.I23 = 2.0 * kPi * mu * d0_rot;
  out.I22 = 4.0 * kPi * mu * sc.A2 + sc.C2 * 4.0 * kPi * mu * d0_rot;
  out.Irot = 4.0 * kPi * mu * a * Kr;
  out.J2 = -2.0 * kPi * mu * d0_phi2;
  out.Jrot = -4.0 * kPi * mu * a * Kv;
  return out;
}

IntegralSet rigid_constants(const Geometry& g) {
  IntegralSet is = boundary_integrals(g);
  is.c21 = is.J1 / is.I1;
  // [[I22, I23], [2 I23, Irot]] (c22, c23) = (J2, Jrot)
  const double det = is.I22 * is.Irot - 2.0 * is.I23 * is.I23;
  is.system_det = det;
  if (det == 0.0 || !std::isfinite(det))
    throw NumericalError("rigid_constants: traction system is singular, det = " +
                         std::to_string(det));
  is.c22 = (is.Irot * is.J2 - is.I23 * is.Jrot) / det;
  is.c23 = (-2.0 * is.I23 * is.J2 + is.I22 * is.Jrot) / det;
  return is;
}

FlowSolution::FlowSolution(Geometry g, Background bg, int N)
    : g_(g),
      bg_(bg),
      consts_(rigid_constants(g)),
      sing_(singular_constants(g)),
      v1_(phi1_coefficients(g, N)),
      v2_(phi2_coefficients(g, N)),
      hrot_(phirot_coefficients(g, N)) {
  if (bg.a_coef == 0.0 && bg.c_coef == 0.0 && bg.d_coef == 0.0)
    throw ConfigError("FlowSolution: zero background");
  // A degenerate background (a^2 + (c+d)^2 = 0, pure rotation) is the trivial
  // case: U itself solves the problem and all singular weights vanish.
  const double amp_ex = bg.extensional_amplitude();
  const double amp_sh = bg.shear_amplitude();
  w_v1_ = amp_ex;
  w_h1_ = 2.0 * consts_.c21 * amp_ex;
  w_v2_ = amp_sh;
  w_h2t_ = 2.0 * consts_.c22 * amp_sh;
  w_hrot_ = (2.0 * consts_.c22 * sing_.C2 + consts_.c23) * amp_sh;
  w_rigid_rot_ = bg.rotation_amplitude();
}

FieldSample FlowSolution::eval(const BipolarPoint& p) const {
  if (std::abs(p.zeta) > g_.s * (1.0 + kBoundarySlack))
    throw DomainError("FlowSolution::eval: point lies inside a cylinder");
  FieldSample out;
  if (w_v1_ != 0.0) {
    out.axpy(w_v1_, v1_.field(p));
    out.axpy(w_h1_, h1_field(g_, p));
  }
  if (w_v2_ != 0.0) {
    out.axpy(w_v2_, v2_.field(p));
    out.axpy(w_h2t_, h2_tilde_field(g_, p));
  }
  if (w_hrot_ != 0.0) out.axpy(w_hrot_, hrot_.series_field(p));
  if (w_rigid_rot_ != 0.0) {
    const Vec2 xy = bipolar_to_cart(g_, p);
    out.u += w_rigid_rot_ * Vec2{xy.y, -xy.x};
    // pure rotation: zero strain, constant pressure fixed to 0
  }
  return out;
}

FieldSample FlowSolution::eval(double x, double y) const {
  return eval(cart_to_bipolar(g_, x, y));
}

Vec2 FlowSolution::boundary_velocity(int which_disk, Vec2 xy) const {
  if (which_disk != 1 && which_disk != 2)
    throw ConfigError("boundary_velocity: disk index must be 1 or 2");
  const double sign = which_disk == 2 ? 1.0 : -1.0;
  Vec2 u = sign * consts_.c21 * bg_.extensional_amplitude() * Vec2{1.0, 0.0};
  const double amp_sh = bg_.shear_amplitude();
  u += sign * consts_.c22 * amp_sh * Vec2{0.0, 1.0};
  u += (consts_.c23 * amp_sh + bg_.rotation_amplitude()) * Vec2{xy.y, -xy.x};
  return u;
}

SymMat2 sigma_narrow_asymptotic(const Geometry& g, const Background& bg, double y) {
  if (std::abs(y) > 3.0 * std::sqrt(g.R * g.delta))
    throw DomainError("sigma_narrow_asymptotic: |y| exceeds 3 sqrt(R delta)");
  const double rd = g.R * g.delta;
  const double y2 = y * y;
  // extensional part: 2 c21 sigma[h1] at leading order, c21 = 2 d^{3/2}/sqrt(R)
  const double lead_ex =
      12.0 * g.mu * std::sqrt(g.R / g.delta) * rd * rd / ((y2 + rd) * (y2 + rd));
  const double lead_sh = 2.0 * g.mu * std::sqrt(g.R / g.delta) * rd / (y2 + rd);
  return identity2(bg.extensional_amplitude() * lead_ex) +
         offdiag2(bg.shear_amplitude() * lead_sh);
}

}  // namespace bistokes
