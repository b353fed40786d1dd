#include "bistokes/stream.hpp"

#include <algorithm>
#include <cmath>

namespace bistokes {

namespace {

// Scratch tables of cosh/sinh(k z) and cos/sin(n t), filled by recurrence so a
// series of N modes costs O(N) with no transcendental calls in the mode loop.
struct Scratch {
  std::vector<double> ch, sh, cn, sn;
  double z_cached = 0.0, t_cached = 0.0;
  int kmax_cached = -1, nmax_cached = -1;

  void fill(double z, double t, int kmax, int nmax) {
    if (z == z_cached && t == t_cached && kmax <= kmax_cached && nmax <= nmax_cached)
      return;
    kmax = std::max(kmax, 1);
    nmax = std::max(nmax, 1);
    ch.resize(kmax + 1);
    sh.resize(kmax + 1);
    cn.resize(nmax + 1);
    sn.resize(nmax + 1);
    ch[0] = 1.0;
    sh[0] = 0.0;
    ch[1] = std::cosh(z);
    sh[1] = std::sinh(z);
    const double c2 = 2.0 * ch[1];
    for (int k = 2; k <= kmax; ++k) {
      ch[k] = c2 * ch[k - 1] - ch[k - 2];
      sh[k] = c2 * sh[k - 1] - sh[k - 2];
    }
    cn[0] = 1.0;
    sn[0] = 0.0;
    cn[1] = std::cos(t);
    sn[1] = std::sin(t);
    const double d2 = 2.0 * cn[1];
    for (int n = 2; n <= nmax; ++n) {
      cn[n] = d2 * cn[n - 1] - cn[n - 2];
      sn[n] = d2 * sn[n - 1] - sn[n - 2];
    }
    z_cached = z;
    t_cached = t;
    kmax_cached = kmax;
    nmax_cached = nmax;
  }
};

thread_local Scratch tls_scratch;

}  // namespace

HpsiDerivs eval_hpsi(const StreamSeries& series, const BipolarPoint& p,
                     int derivative_order) {
  if (derivative_order < 0 || derivative_order > 2)
    throw ConfigError("eval_hpsi: derivative_order must be 0, 1 or 2");
  const double z = p.zeta, t = p.theta;

  if (series.log_coef != 0.0 && infinity_distance(p) < kInfinityTol)
    throw DomainError("eval_hpsi: log term is singular at the point at infinity");

  int kmax = 1, nmax = 1;
  for (const auto& term : series.terms) {
    if (term.zf == ZetaFactor::Cosh || term.zf == ZetaFactor::Sinh)
      kmax = std::max(kmax, term.k);
    nmax = std::max(nmax, term.n);
  }
  Scratch& sc = tls_scratch;
  sc.fill(z, t, kmax, nmax);

  KahanSum P, Pz, Pt, Pzz, Pzt, Ptt;

  if (series.log_coef != 0.0) {
    const double K = series.log_coef;
    const double H = std::cosh(z) - std::cos(t);
    const double G = std::log(2.0 * H);
    const double shz = std::sinh(z), snt = std::sin(t);
    P.add(K * H * G);
    if (derivative_order >= 1) {
      Pz.add(K * shz * (G + 1.0));
      Pt.add(K * snt * (G + 1.0));
    }
    if (derivative_order >= 2) {
      Pzz.add(K * (std::cosh(z) * (G + 1.0) + shz * shz / H));
      Pzt.add(K * shz * snt / H);
      Ptt.add(K * (std::cos(t) * (G + 1.0) + snt * snt / H));
    }
  }

  for (const auto& term : series.terms) {
    if (term.coef == 0.0) continue;
    // zeta factor value and derivatives
    double f = 0.0, fz = 0.0, fzz = 0.0;
    switch (term.zf) {
      case ZetaFactor::Cosh:
        f = sc.ch[term.k];
        fz = term.k * sc.sh[term.k];
        fzz = static_cast<double>(term.k) * term.k * sc.ch[term.k];
        break;
      case ZetaFactor::Sinh:
        f = sc.sh[term.k];
        fz = term.k * sc.ch[term.k];
        fzz = static_cast<double>(term.k) * term.k * sc.sh[term.k];
        break;
      case ZetaFactor::ZetaCosh:
        f = z * sc.ch[1];
        fz = sc.ch[1] + z * sc.sh[1];
        fzz = 2.0 * sc.sh[1] + z * sc.ch[1];
        break;
      case ZetaFactor::ZetaSinh:
        f = z * sc.sh[1];
        fz = sc.sh[1] + z * sc.ch[1];
        fzz = 2.0 * sc.ch[1] + z * sc.sh[1];
        break;
      case ZetaFactor::Zeta:
        f = z;
        fz = 1.0;
        fzz = 0.0;
        break;
    }
    // theta factor value and derivatives
    double gt = 0.0, gtd = 0.0, gtdd = 0.0;
    if (term.tf == ThetaFactor::Cos) {
      gt = sc.cn[term.n];
      gtd = -term.n * sc.sn[term.n];
      gtdd = -static_cast<double>(term.n) * term.n * sc.cn[term.n];
    } else {
      gt = sc.sn[term.n];
      gtd = term.n * sc.cn[term.n];
      gtdd = -static_cast<double>(term.n) * term.n * sc.sn[term.n];
    }

    const double c = term.coef;
    if (series.gauge_compensated && term.zf == ZetaFactor::Cosh &&
        term.tf == ThetaFactor::Cos) {
      // cosh(kz)cos(nt) - 1 = 2 sinh^2(kz/2) cos(nt) - 2 sin^2(nt/2),
      // accurate where both factors are near 1.
      const double shk = std::sinh(0.5 * term.k * z);
      const double snn = std::sin(0.5 * term.n * t);
      P.add(c * (2.0 * shk * shk * gt - 2.0 * snn * snn));
    } else {
      P.add(c * f * gt);
    }
    if (derivative_order >= 1) {
      Pz.add(c * fz * gt);
      Pt.add(c * f * gtd);
    }
    if (derivative_order >= 2) {
      Pzz.add(c * fzz * gt);
      Pzt.add(c * fz * gtd);
      Ptt.add(c * f * gtdd);
    }
  }

  return {P.value(), Pz.value(), Pt.value(), Pzz.value(), Pzt.value(), Ptt.value()};
}

Vec2 velocity_bipolar(const StreamSeries& series, const Geometry& g,
                      const BipolarPoint& p) {
  (void)g;
  if (infinity_distance(p) < kInfinityTol)
    throw DomainError("velocity_bipolar: evaluate the flow's limit at infinity instead");
  const HpsiDerivs d = eval_hpsi(series, p, 1);
  const double H = std::cosh(p.zeta) - std::cos(p.theta);
  return {-d.pt + std::sin(p.theta) / H * d.p,
          d.pz - std::sinh(p.zeta) / H * d.p};
}

std::array<double, 3> strain_bipolar(const StreamSeries& series, const Geometry& g,
                                     const BipolarPoint& p) {
  if (infinity_distance(p) < kInfinityTol)
    throw DomainError("strain_bipolar: evaluate the flow's limit at infinity instead");
  const HpsiDerivs d = eval_hpsi(series, p, 2);
  const double h = scale_h(g, p);
  const double e_zz = -h * d.pzt;
  const double e_zt = 0.5 * h * (d.pzz - d.ptt - d.p);
  return {e_zz, e_zt, -e_zz};
}

double laplacian_psi(const StreamSeries& series, const Geometry& g,
                     const BipolarPoint& p) {
  const HpsiDerivs d = eval_hpsi(series, p, 2);
  const double chz = std::cosh(p.zeta), cst = std::cos(p.theta);
  return ((chz - cst) * (d.pzz + d.ptt) + (chz + cst) * d.p -
          2.0 * std::sinh(p.zeta) * d.pz - 2.0 * std::sin(p.theta) * d.pt) /
         g.a;
}

double biharmonic_residual_fd(const StreamSeries& series, const BipolarPoint& p,
                              double step) {
  // The fourth-order pieces come from second differences of the analytic
  // second derivatives, which keeps the rounding floor at eps/step^2.
  auto at = [&](int i, int j) {
    return eval_hpsi(series, {p.zeta + i * step, p.theta + j * step}, 2);
  };
  const HpsiDerivs c = at(0, 0);
  const HpsiDerivs zp = at(1, 0), zm = at(-1, 0), tp = at(0, 1), tm = at(0, -1);
  const double h2 = step * step;
  const double p4z = (zp.pzz - 2.0 * c.pzz + zm.pzz) / h2;
  const double p4t = (tp.ptt - 2.0 * c.ptt + tm.ptt) / h2;
  const double pzztt = (zp.ptt - 2.0 * c.ptt + zm.ptt) / h2;
  const double residual = p4z + 2.0 * pzztt + p4t - 2.0 * c.pzz + 2.0 * c.ptt + c.p;
  const double scale = std::abs(p4z) + 2.0 * std::abs(pzztt) + std::abs(p4t) +
                       2.0 * std::abs(c.pzz) + 2.0 * std::abs(c.ptt) + std::abs(c.p) +
                       1e-300;
  return residual / scale;
}

double PressureSeries::eval(const BipolarPoint& p) const {
  const int m_max = static_cast<int>(coef.size());
  Scratch& sc = tls_scratch;
  sc.fill(p.zeta, p.theta, m_max, m_max);
  KahanSum q;
  if (even_modes) {
    for (int m = 1; m <= m_max; ++m) {
      if (coef[m - 1] == 0.0) continue;
      // cosh(mz)cos(mt) - 1, gauge constant folded in
      const double shh = std::sinh(0.5 * m * p.zeta);
      const double snh = std::sin(0.5 * m * p.theta);
      q.add(coef[m - 1] * (2.0 * shh * shh * sc.cn[m] - 2.0 * snh * snh));
    }
  } else {
    for (int m = 1; m <= m_max; ++m) {
      if (coef[m - 1] == 0.0) continue;
      q.add(coef[m - 1] * sc.sh[m] * sc.sn[m]);
    }
  }
  return q.value();
}

}  // namespace bistokes
