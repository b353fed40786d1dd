#include "bistokes/noslip.hpp"

#include <cmath>
#include <mutex>

namespace bistokes {

const char* flow_case_name(FlowCase c) {
  switch (c) {
    case FlowCase::Extensional:
      return "extensional";
    case FlowCase::Shear:
      return "shear";
    case FlowCase::Rotation:
      return "rotation";
  }
  return "?";
}

Truncation auto_truncation(double s) {
  if (!(s > 0.0)) throw ConfigError("auto_truncation: s must be positive");
  // Boundary-residual modes scale like coefficient x cosh((n+1)s) ~ n e^{-ns},
  // so the truncation targets N^2 e^{-Ns} < 1e-12 (not the coefficient tail).
  const double log_target = std::log(1e12);
  double N = std::max(8.0, log_target / s);
  for (int it = 0; it < 64; ++it) {
    const double next = (log_target + 2.0 * std::log(N)) / s;
    if (std::abs(next - N) < 0.5) {
      N = next;
      break;
    }
    N = next;
  }
  Truncation tr;
  const double cap = std::ceil(200.0 / s);
  if (N > cap) {
    tr.N = static_cast<int>(cap);
    tr.capped = true;
  } else {
    tr.N = static_cast<int>(std::ceil(N));
  }
  tr.N = std::max(tr.N, 2);
  return tr;
}

double series_M(double s) {
  KahanSum acc;
  const double shs = std::sinh(s), chs = std::cosh(s), sh2s = std::sinh(2.0 * s);
  for (long n = 2;; ++n) {
    const double ns = n * s;
    const double den = n * (double(n) * n - 1.0) * (std::sinh(2.0 * ns) + n * sh2s);
    const double num =
        -4.0 * (std::exp(-ns) * std::sinh(ns) + n * shs * chs + double(n) * n * shs * shs);
    const double t = num / den;
    acc.add(t);
    if (std::abs(t) < 1e-17 * std::max(std::abs(acc.value()), 1e-30) && ns > 1.0) break;
    if (ns > 400.0) break;
  }
  return acc.value();
}

double series_M_shifted(double s) {
  // M + 1/2 = sum T(n), T(n) = 4(sinh^2 ns - n^2 sinh^2 s)/(n(n^2-1)(sinh 2ns + n sinh 2s)).
  // T(n) - 2/(n(n^2-1)) decays like poly e^{-2ns}; the algebraic tail past N is
  // sum_{n>N} 2/(n(n^2-1)) = 1/(N(N+1)).
  KahanSum acc;
  const double shs2 = std::sinh(s) * std::sinh(s), sh2s = std::sinh(2.0 * s);
  long N = 2;
  for (long n = 2;; ++n) {
    const double ns = n * s;
    const double nn = double(n) * n - 1.0;
    const double den = n * nn * (std::sinh(2.0 * ns) + n * sh2s);
    const double shns = std::sinh(ns);
    const double t = 4.0 * (shns * shns - double(n) * n * shs2) / den;
    acc.add(t);
    N = n;
    if (std::abs(t - 2.0 / (n * nn)) < 1e-18 && ns > 1.0) break;
    if (ns > 400.0) break;
  }
  return acc.value() + 1.0 / (double(N) * (N + 1.0)) - 0.5;
}

double series_M_prime(double s) {
  KahanSum acc;
  const double shs2 = std::sinh(s) * std::sinh(s), sh2s = std::sinh(2.0 * s);
  for (long n = 2;; ++n) {
    const double t = 4.0 * n * shs2 / (std::sinh(2.0 * n * s) + n * sh2s);
    acc.add(t);
    if (std::abs(t) < 1e-17 * std::max(std::abs(acc.value()), 1e-30) && n * s > 1.0) break;
    if (n * s > 400.0) break;
  }
  return acc.value();
}

double K_v_constant(const Geometry& g) {
  const double s = g.s, a = g.a;
  const double M = series_M(s), Mp = series_M_prime(s);
  const double num =
      a * (1.0 - std::tanh(s) - 2.0 * std::sinh(s) * std::sinh(s) / (2.0 * s + std::sinh(2.0 * s)) - Mp);
  const double den = 0.5 +
                     s * (std::sinh(2.0 * s) - 2.0 * std::tanh(s)) / (2.0 * s + std::sinh(2.0 * s)) +
                     M;
  return num / den;
}

double K_rot_constant(const Geometry& g) {
  const double s = g.s, a = g.a;
  const double shs = std::sinh(s);
  const double den =
      s * shs * shs * std::tanh(s) / (shs * std::cosh(s) + s) + 0.5 + series_M(s);
  return -a / den;
}

// ---------------------------------------------------------------------------
// f0, g0 and the limit constants F0, G0
// ---------------------------------------------------------------------------

double f0_integrand(double x) {
  if (!(x > 0.0)) throw DomainError("f0_integrand: x must be positive");
  if (x < 0.25) {
    // sinh x - x by series; kills the 4 sinh^2 x - 4 x^2 cancellation
    const double x2 = x * x;
    const double shm = x * x2 * (1.0 / 6.0 + x2 * (1.0 / 120.0 + x2 * (1.0 / 5040.0 + x2 / 362880.0)));
    return 4.0 * shm * (shm + 2.0 * x) / (x * x * x * (std::sinh(2.0 * x) + 2.0 * x));
  }
  if (x < 15.0) {
    const double sh = std::sinh(x);
    return (4.0 * sh * sh - 4.0 * x * x) / (x * x * x * (std::sinh(2.0 * x) + 2.0 * x));
  }
  // scaled by e^{2x}; exact and overflow-free for any x
  const double e2 = std::exp(-2.0 * x), e4 = e2 * e2;
  return (1.0 - (2.0 + 4.0 * x * x) * e2 + e4) /
         (x * x * x * (0.5 * (1.0 - e4) + 2.0 * x * e2));
}

double g0_integrand(double x) {
  if (!(x > 0.0)) throw DomainError("g0_integrand: x must be positive");
  if (x < 15.0) return 4.0 * x / (std::sinh(2.0 * x) + 2.0 * x);
  const double e2 = std::exp(-2.0 * x), e4 = e2 * e2;
  return 8.0 * x * e2 / (1.0 - e4 + 4.0 * x * e2);
}

namespace {

template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) < 15.0 * tol)
    return left + right + err / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(const F& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  return adaptive_simpson(f, a, b, f(a), f(m), f(b), tol, 48);
}

}  // namespace

std::pair<double, double> F0_G0() {
  static std::once_flag once;
  static double F0 = 0.0, G0 = 0.0;
  std::call_once(once, [] {
    constexpr double X = 40.0;
    // f0 has the algebraic tail 2/x^3: its integral past X is 1/X^2 exactly at
    // leading order; the remainder integrand (f0 - 2/x^3) is bounded by
    // poly(x) e^{-2x} and contributes < 1e-33 at X = 40.
    const double eps = 1e-13;
    F0 = integrate(f0_integrand, 1e-9, 1.0, eps) + integrate(f0_integrand, 1.0, X, eps) +
         1.0 / (X * X);
    G0 = integrate(g0_integrand, 1e-9, 1.0, eps) + integrate(g0_integrand, 1.0, X, eps);
  });
  return {F0, G0};
}

// ---------------------------------------------------------------------------
// Coefficient construction
// ---------------------------------------------------------------------------

namespace {

double geometric_tail_bound(const NoSlipSolution& sol) {
  // Tail of the boundary-residual series: the last mode's boundary amplitude
  // times sum_j ((N+j)/N)^2 e^{-js}, covering the extra mode factors that the
  // velocity and strain operators introduce.
  if (sol.cn.empty()) return 0.0;
  const int N = sol.N;
  const double last = (std::abs(sol.cn.back()) + std::abs(sol.dn.back())) *
                      std::cosh((N + 1.0) * sol.g.s);
  const double q = std::exp(-sol.g.s);
  const double g1 = q / (1.0 - q);
  const double g2 = q / ((1.0 - q) * (1.0 - q));
  const double g3 = q * (1.0 + q) / ((1.0 - q) * (1.0 - q) * (1.0 - q));
  return last * (g1 + 2.0 * g2 / N + g3 / (double(N) * N));
}

void finalize_even(NoSlipSolution& sol) {
  // stream: K log + c0 cosh z + d0 z sinh z + sum (cn cosh(n+1)z + dn cosh(n-1)z) cos nt
  StreamSeries& st = sol.stream;
  st.log_coef = sol.K;
  st.gauge_compensated = true;
  st.n_max = sol.N;
  st.terms.reserve(2 * sol.N + 2);
  st.terms.push_back({sol.low1, ZetaFactor::Cosh, 1, ThetaFactor::Cos, 0});
  st.terms.push_back({sol.low2, ZetaFactor::ZetaSinh, 0, ThetaFactor::Cos, 0});
  for (int n = 1; n <= sol.N; ++n) {
    st.terms.push_back({sol.cn[n - 1], ZetaFactor::Cosh, n + 1, ThetaFactor::Cos, n});
    st.terms.push_back({sol.dn[n - 1], ZetaFactor::Cosh, n - 1, ThetaFactor::Cos, n});
  }

  // pressure: conjugate of mu lap Phi; odd modes w_m = sinh(mz) sin(mt):
  //   rho_1 = -d0 + 2 c1 + 2 d2,
  //   rho_m = (m+1)c_m - (m-1)d_m - (m-1)c_{m-1} + (m+1)d_{m+1},  m >= 2.
  auto C = [&](int n) { return (n >= 1 && n <= sol.N) ? sol.cn[n - 1] : 0.0; };
  auto D = [&](int n) { return (n >= 1 && n <= sol.N) ? sol.dn[n - 1] : 0.0; };
  PressureSeries& pr = sol.pressure_series;
  pr.even_modes = false;
  pr.coef.assign(sol.N + 1, 0.0);
  const double scale = 2.0 * sol.g.mu / sol.g.a;
  pr.coef[0] = scale * (-sol.low2 + 2.0 * C(1) + 2.0 * D(2));
  for (int m = 2; m <= sol.N + 1; ++m)
    pr.coef[m - 1] = scale * ((m + 1.0) * C(m) - (m - 1.0) * D(m) - (m - 1.0) * C(m - 1) +
                              (m + 1.0) * D(m + 1));
  sol.tail_bound = geometric_tail_bound(sol);
}

}  // namespace

NoSlipSolution phi1_coefficients(const Geometry& g, int N) {
  Truncation tr{N, false};
  if (N <= 0) tr = auto_truncation(g.s);
  if (tr.N < 2) throw ConfigError("phi1_coefficients: N must be at least 2");
  NoSlipSolution sol;
  sol.flow_case = FlowCase::Extensional;
  sol.g = g;
  sol.N = tr.N;
  sol.truncation_capped = tr.capped;
  sol.K = 0.0;

  const double s = g.s, a = g.a;
  const double den1 = std::sinh(2.0 * s) - 2.0 * s * std::cosh(2.0 * s);
  sol.low1 = -2.0 * a * std::exp(-s) * (std::sinh(s) - s * std::exp(-s)) / den1;  // a1
  sol.low2 = 4.0 * a * std::sinh(s) * std::sinh(s) / den1;                        // b1

  sol.cn.assign(sol.N, 0.0);
  sol.dn.assign(sol.N, 0.0);
  sol.cn[0] = sol.low1;
  sol.dn[0] = sol.low2;  // multiplies zeta, not sinh(0 z); kept for JSON output
  for (int n = 2; n <= sol.N; ++n) {
    const double den = std::sinh(2.0 * n * s) - n * std::sinh(2.0 * s);
    const double e = std::exp(-n * s) * std::sinh(n * s);
    sol.cn[n - 1] = -2.0 * a * (e - std::exp(-s) * n * std::sinh(s)) / den;
    sol.dn[n - 1] = 2.0 * a * (e - std::exp(s) * n * std::sinh(s)) / den;
  }

  StreamSeries& st = sol.stream;
  st.log_coef = 0.0;
  st.n_max = sol.N;
  st.terms.reserve(2 * sol.N);
  st.terms.push_back({sol.low1, ZetaFactor::Sinh, 2, ThetaFactor::Sin, 1});
  st.terms.push_back({sol.low2, ZetaFactor::Zeta, 0, ThetaFactor::Sin, 1});
  for (int n = 2; n <= sol.N; ++n) {
    st.terms.push_back({sol.cn[n - 1], ZetaFactor::Sinh, n + 1, ThetaFactor::Sin, n});
    st.terms.push_back({sol.dn[n - 1], ZetaFactor::Sinh, n - 1, ThetaFactor::Sin, n});
  }

  // pressure: even modes wt_m = cosh(mz) cos(mt), gauge constant folded in:
  //   pi_1 = -2a1 + b1 - 2b2, pi_2 = a1 - 3a2 + b2 - 3b3,
  //   pi_m = -(m+1)a_m + (m-1)b_m + (m-1)a_{m-1} - (m+1)b_{m+1}, m >= 3.
  auto A = [&](int n) { return (n >= 2 && n <= sol.N) ? sol.cn[n - 1] : 0.0; };
  auto B = [&](int n) { return (n >= 2 && n <= sol.N) ? sol.dn[n - 1] : 0.0; };
  PressureSeries& pr = sol.pressure_series;
  pr.even_modes = true;
  pr.coef.assign(sol.N + 1, 0.0);
  const double scale = 2.0 * g.mu / g.a;
  pr.coef[0] = scale * (-2.0 * sol.low1 + sol.low2 - 2.0 * B(2));
  pr.coef[1] = scale * (sol.low1 - 3.0 * A(2) + B(2) - 3.0 * B(3));
  for (int m = 3; m <= sol.N + 1; ++m)
    pr.coef[m - 1] = scale * (-(m + 1.0) * A(m) + (m - 1.0) * B(m) + (m - 1.0) * A(m - 1) -
                              (m + 1.0) * B(m + 1));
  sol.tail_bound = geometric_tail_bound(sol);
  return sol;
}

NoSlipSolution phi2_coefficients(const Geometry& g, int N) {
  Truncation tr{N, false};
  if (N <= 0) tr = auto_truncation(g.s);
  if (tr.N < 2) throw ConfigError("phi2_coefficients: N must be at least 2");
  NoSlipSolution sol;
  sol.flow_case = FlowCase::Shear;
  sol.g = g;
  sol.N = tr.N;
  sol.truncation_capped = tr.capped;

  const double s = g.s, a = g.a;
  const double Kv = K_v_constant(g);
  sol.K = Kv;
  const double shs = std::sinh(s), chs = std::cosh(s), sh2s = std::sinh(2.0 * s);

  sol.low1 = -a / 2.0 + a * shs * shs / (shs * chs + s) +
             Kv * (-1.0 + std::exp(-2.0 * s) - 2.0 * s * (1.0 + s)) / (2.0 * s + sh2s);  // c0
  sol.low2 = a / (shs * chs + s) - Kv * shs * shs / (s + chs * shs);                     // d0

  sol.cn.assign(sol.N, 0.0);
  sol.dn.assign(sol.N, 0.0);
  sol.cn[0] = a * (-1.0 + std::cosh(2.0 * s) / sh2s) + Kv / (1.0 + std::exp(2.0 * s));
  sol.dn[0] = a / 2.0 - a / sh2s + Kv * (1.0 + s - std::tanh(s) / 2.0);
  for (int n = 2; n <= sol.N; ++n) {
    const double den = std::sinh(2.0 * n * s) + n * sh2s;
    const double ens = std::exp(-n * s);
    sol.cn[n - 1] = 2.0 * a * (ens * std::cosh(n * s) - std::exp(-s) * n * shs) / den +
                    2.0 * Kv * (ens * std::sinh(n * s) + std::exp(-s) * n * shs) /
                        (n * (n + 1.0) * den);
    sol.dn[n - 1] = -2.0 * a * (ens * std::cosh(n * s) - std::exp(s) * n * shs) / den -
                    2.0 * Kv * (ens * std::sinh(n * s) + std::exp(s) * n * shs) /
                        (n * (n - 1.0) * den);
  }
  finalize_even(sol);
  return sol;
}

NoSlipSolution phirot_coefficients(const Geometry& g, int N) {
  Truncation tr{N, false};
  if (N <= 0) tr = auto_truncation(g.s);
  if (tr.N < 2) throw ConfigError("phirot_coefficients: N must be at least 2");
  NoSlipSolution sol;
  sol.flow_case = FlowCase::Rotation;
  sol.g = g;
  sol.N = tr.N;
  sol.truncation_capped = tr.capped;

  const double s = g.s, a = g.a;
  const double Kr = K_rot_constant(g);
  sol.K = Kr;
  const double shs = std::sinh(s), chs = std::cosh(s), sh2s = std::sinh(2.0 * s);

  sol.low1 = a - Kr * (s * s + s + std::exp(-s) * shs) / (shs * chs + s);  // a0'
  sol.low2 = -Kr * shs * shs / (shs * chs + s);                            // d0'

  sol.cn.assign(sol.N, 0.0);
  sol.dn.assign(sol.N, 0.0);
  sol.cn[0] = 0.5 * Kr * std::exp(-s) / chs;
  sol.dn[0] = Kr * (s + 1.0 - std::tanh(s) / 2.0);
  for (int n = 2; n <= sol.N; ++n) {
    const double den = std::sinh(2.0 * n * s) + n * sh2s;
    const double ens = std::exp(-n * s) * std::sinh(n * s);
    sol.cn[n - 1] = 2.0 * Kr * (n * std::exp(-s) * shs + ens) / (n * (n + 1.0) * den);
    sol.dn[n - 1] = -2.0 * Kr * (n * std::exp(s) * shs + ens) / (n * (n - 1.0) * den);
  }
  finalize_even(sol);
  return sol;
}

NoSlipSolution noslip_solution(const Geometry& g, FlowCase c, int N) {
  switch (c) {
    case FlowCase::Extensional:
      return phi1_coefficients(g, N);
    case FlowCase::Shear:
      return phi2_coefficients(g, N);
    case FlowCase::Rotation:
      return phirot_coefficients(g, N);
  }
  throw ConfigError("noslip_solution: unknown flow case");
}

Vec2 background_velocity(FlowCase c, Vec2 xy) {
  switch (c) {
    case FlowCase::Extensional:
      return {xy.x, -xy.y};
    case FlowCase::Shear:
      return {xy.y, xy.x};
    case FlowCase::Rotation:
      return {0.0, 0.0};  // the rotation stream series is h_rot itself
  }
  return {};
}

SymMat2 background_strain(FlowCase c) {
  switch (c) {
    case FlowCase::Extensional:
      return {1.0, 0.0, -1.0};
    case FlowCase::Shear:
      return {0.0, 1.0, 0.0};
    case FlowCase::Rotation:
      return {};
  }
  return {};
}

double NoSlipSolution::pressure(const BipolarPoint& p) const {
  if (infinity_distance(p) < kInfinityTol) return 0.0;  // vanish-at-infinity gauge
  return pressure_series.eval(p);
}

FieldSample NoSlipSolution::series_field(const BipolarPoint& p) const {
  if (infinity_distance(p) < kInfinityTol)
    throw DomainError("series_field: point at infinity");
  FieldSample out;
  const Frame f = frame_xi(p);
  out.u = vector_to_cartesian(f, velocity_bipolar(stream, g, p));
  const auto e = strain_bipolar(stream, g, p);
  out.strain = tensor_to_cartesian(f, e[0], e[1], e[2]);
  out.p = pressure_series.eval(p);
  out.stress = identity2(-out.p) + 2.0 * g.mu * out.strain;
  return out;
}

FieldSample NoSlipSolution::field(const BipolarPoint& p) const {
  FieldSample out = series_field(p);
  const Vec2 xy = bipolar_to_cart(g, p);
  out.u += background_velocity(flow_case, xy);
  const SymMat2 eb = background_strain(flow_case);
  out.strain += eb;
  out.stress += 2.0 * g.mu * eb;
  return out;
}

}  // namespace bistokes
