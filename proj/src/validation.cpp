#include "bistokes/validation.hpp"

#include <algorithm>
#include <cmath>

namespace bistokes {

namespace {
constexpr double kPi = 3.141592653589793238462643;

double distance_to_boundary(const Geometry& g, double x, double y) {
  const double d1 = std::hypot(x - g.centers[0].x, y) - g.R;
  const double d2 = std::hypot(x - g.centers[1].x, y) - g.R;
  return std::min(d1, d2);
}
}  // namespace

StokesResidual fd_stokes_residual(const FieldFn& field, const Geometry& g, double x,
                                  double y, double step) {
  if (step <= 0.0) {
    // curvature in the gap blows up like delta^{-3/2}: shrink with distance to
    // the boundary, floor at the second-derivative rounding sweet spot
    const double dist = distance_to_boundary(g, x, y);
    step = std::max(1e-5 * g.R, 1e-3 * dist);
    step = std::min(step, 5e-3 * g.R);
  }
  if (distance_to_boundary(g, x, y) < 2.0 * step)
    throw DomainError("fd_stokes_residual: stencil clips a cylinder boundary");

  const FieldSample c = field({x, y});
  const FieldSample xp = field({x + step, y}), xm = field({x - step, y});
  const FieldSample yp = field({x, y + step}), ym = field({x, y - step});
  const FieldSample pp = field({x + step, y + step}), pm = field({x + step, y - step});
  const FieldSample mp = field({x - step, y + step}), mm = field({x - step, y - step});

  const double h2 = step * step;
  const Vec2 lap_u = {
      (xp.u.x + xm.u.x + yp.u.x + ym.u.x - 4.0 * c.u.x) / h2,
      (xp.u.y + xm.u.y + yp.u.y + ym.u.y - 4.0 * c.u.y) / h2,
  };
  const Vec2 grad_p = {(xp.p - xm.p) / (2.0 * step), (yp.p - ym.p) / (2.0 * step)};
  const double div_u =
      (xp.u.x - xm.u.x) / (2.0 * step) + (yp.u.y - ym.u.y) / (2.0 * step);

  // |D2 u|: all second derivatives of both components, so the scale does not
  // collapse where terms cancel inside the Laplacian
  auto hess_mag = [&](auto comp) {
    const double dxx = (comp(xp) - 2.0 * comp(c) + comp(xm)) / h2;
    const double dyy = (comp(yp) - 2.0 * comp(c) + comp(ym)) / h2;
    const double dxy = (comp(pp) - comp(pm) - comp(mp) + comp(mm)) / (4.0 * h2);
    return std::abs(dxx) + std::abs(dyy) + std::abs(dxy);
  };
  const double d2u = hess_mag([](const FieldSample& f) { return f.u.x; }) +
                     hess_mag([](const FieldSample& f) { return f.u.y; });

  StokesResidual r;
  const double mom_scale =
      std::abs(grad_p.x) + std::abs(grad_p.y) + g.mu * d2u + 1e-300;
  r.momentum = ((g.mu * lap_u - grad_p).norm()) / mom_scale;
  const double grad_scale = (std::abs(xp.u.x - xm.u.x) + std::abs(yp.u.y - ym.u.y) +
                             std::abs(xp.u.y - xm.u.y) + std::abs(yp.u.x - ym.u.x)) /
                                (2.0 * step) +
                            1e-300;
  r.divergence = std::abs(div_u) / grad_scale;
  return r;
}

namespace {

double quantity_of(const FieldSample& f, FieldQuantity q) {
  switch (q) {
    case FieldQuantity::Pressure:
      return std::abs(f.p);
    case FieldQuantity::Strain:
      return f.strain.max_abs();
    case FieldQuantity::Stress:
      return f.stress.max_abs();
  }
  return 0.0;
}

struct MeshMax {
  double value = -1.0;
  Vec2 at{};
};

// max over the gap region with nx x ny samples, skipping disk interiors
void scan_gap(const FieldFn& field, const Geometry& g, FieldQuantity q, int nx, int ny,
              MeshMax& mm) {
  const double xw = g.R + g.delta / 2.0;
  const double yw = std::sqrt(g.delta);
  for (int j = 0; j < ny; ++j) {
    const double y = -yw + 2.0 * yw * j / (ny - 1.0);
    for (int i = 0; i < nx; ++i) {
      const double x = -xw + 2.0 * xw * i / (nx - 1.0);
      if (distance_to_boundary(g, x, y) < 1e-12 * g.R) continue;
      const double v = quantity_of(field({x, y}), q);
      if (v > mm.value) mm = {v, {x, y}};
    }
  }
}

void scan_boundary(const FieldFn& field, const Geometry& g, FieldQuantity q, int nt,
                   MeshMax& mm) {
  for (int disk = 0; disk < 2; ++disk) {
    const double r = g.R * (1.0 + 1e-9);  // just outside, stays in the exterior
    for (int i = 0; i < nt; ++i) {
      const double t = 2.0 * kPi * i / nt;
      const double x = g.centers[disk].x + r * std::cos(t);
      const double y = r * std::sin(t);
      const double v = quantity_of(field({x, y}), q);
      if (v > mm.value) mm = {v, {x, y}};
    }
  }
}

void scan_far(const FieldFn& field, const Geometry& g, FieldQuantity q, MeshMax& mm) {
  for (double r : {2.0 * g.R, 3.0 * g.R, 5.0 * g.R, 10.0 * g.R}) {
    for (int i = 0; i < 64; ++i) {
      const double t = 2.0 * kPi * (i + 0.5) / 64;
      const double v = quantity_of(field({r * std::cos(t), r * std::sin(t)}), q);
      if (v > mm.value) mm = {v, {r * std::cos(t), r * std::sin(t)}};
    }
  }
}

}  // namespace

SupNormEstimate sup_norm_estimate(const FieldFn& field, const Geometry& g,
                                  FieldQuantity q) {
  MeshMax coarse;
  scan_gap(field, g, q, 101, 101, coarse);
  scan_boundary(field, g, q, 256, coarse);
  scan_far(field, g, q, coarse);

  MeshMax fine = coarse;
  scan_gap(field, g, q, 201, 201, fine);
  scan_boundary(field, g, q, 512, fine);

  SupNormEstimate est;
  est.value = fine.value;
  est.argmax = fine.at;
  est.converged =
      std::abs(fine.value - coarse.value) <= 0.01 * std::max(fine.value, 1e-300);
  return est;
}

RateFit fit_rate(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 3)
    throw ConfigError("fit_rate: need at least 3 (delta, value) pairs");

  auto fit = [](const std::vector<std::pair<double, double>>& pts, double& slope,
                double& r2) {
    const int n = static_cast<int>(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& [d, v] : pts) {
      const double lx = std::log(d), ly = std::log(v);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      syy += ly * ly;
    }
    const double vx = n * sxx - sx * sx;
    slope = (n * sxy - sx * sy) / vx;
    const double vy = n * syy - sy * sy;
    r2 = vy == 0.0 ? 1.0 : (n * sxy - sx * sy) * (n * sxy - sx * sy) / (vx * vy);
  };

  RateFit out;
  std::vector<std::pair<double, double>> pts = pairs;
  std::sort(pts.begin(), pts.end(),
            [](auto& a, auto& b) { return a.first > b.first; });
  fit(pts, out.slope, out.r_squared);
  if (out.r_squared < 0.99 && pts.size() > 3) {
    std::vector<std::pair<double, double>> trimmed(pts.begin() + 1, pts.end());
    double slope2, r22;
    fit(trimmed, slope2, r22);
    if (r22 > out.r_squared) {
      out.slope = slope2;
      out.r_squared = r22;
      out.excluded_largest = true;
      pts = trimmed;
    }
  }
  for (const auto& [d, v] : pts) {
    out.deltas.push_back(d);
    out.values.push_back(v);
  }
  return out;
}

double contour_pairing_with(const FieldFn& field, const Geometry& g,
                            const std::function<Vec2(Vec2)>& pair_field,
                            int which_boundary, double stagnation_tol) {
  if (which_boundary != 1 && which_boundary != 2)
    throw ConfigError("contour_pairing: boundary index must be 1 or 2");
  const double zs = which_boundary == 2 ? g.s : -g.s;
  const double sign = which_boundary == 2 ? -1.0 : 1.0;  // nu = sign * e_zeta

  struct Quad {
    double value = 0.0;
    double l1 = 0.0;  // integral of |integrand|, the natural stagnation scale
  };
  auto integral = [&](int nq) {
    KahanSum acc, mag;
    for (int i = 0; i < nq; ++i) {
      const double t = -kPi + 2.0 * kPi * (i + 0.5) / nq;
      const BipolarPoint bp{zs, t};
      const Vec2 xy = bipolar_to_cart(g, bp);
      const FieldSample f = field(xy);
      const Frame fr = frame_xi(bp);
      const Vec2 nu = vector_to_cartesian(fr, {sign, 0.0});
      const Vec2 traction = f.stress.apply(nu);
      const Vec2 w = pair_field(xy);
      const double h = scale_h(g, bp);
      acc.add(w.dot(traction) / h);
      mag.add(std::abs(w.dot(traction)) / h);
    }
    return Quad{acc.value() * 2.0 * kPi / nq, mag.value() * 2.0 * kPi / nq};
  };

  Quad prev = integral(256);
  for (int nq = 512; nq <= 65536; nq *= 2) {
    const Quad cur = integral(nq);
    const double scale =
        std::max({std::abs(cur.value), std::abs(prev.value), 1e-3 * cur.l1, 1e-300});
    if (std::abs(cur.value - prev.value) <= stagnation_tol * scale) return cur.value;
    prev = cur;
  }
  throw NumericalError("contour_pairing: quadrature did not stagnate");
}

double contour_pairing(const FieldFn& field, const Geometry& g, int rigid_j,
                       int which_boundary, double stagnation_tol) {
  return contour_pairing_with(
      field, g, [rigid_j](Vec2 xy) { return rigid_motion(rigid_j, xy); },
      which_boundary, stagnation_tol);
}

double Qn_quadrature(double s, int n, int nodes) {
  KahanSum acc;
  for (int i = 0; i < nodes; ++i) {
    const double t = -kPi + 2.0 * kPi * (i + 0.5) / nodes;
    acc.add(std::cos(n * t) / (std::cosh(s) - std::cos(t)));
  }
  return acc.value() * 2.0 * kPi / nodes;
}

namespace {

// nodes/weights of the 40-point Gauss-Legendre rule on [-1, 1], by Newton
// iteration on the Legendre recurrence
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / pp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = -t;
    x[n - 1 - i] = t;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * pp * pp);
  }
}

template <class F>
double gl_panel(const F& f, double a, double b, const std::vector<double>& x,
                const std::vector<double>& w) {
  KahanSum acc;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (size_t i = 0; i < x.size(); ++i) acc.add(w[i] * f(mid + half * x[i]));
  return acc.value() * half;
}

}  // namespace

std::pair<double, double> F0_G0_gauss() {
  std::vector<double> x, w;
  gauss_legendre(40, x, w);
  const double edges[] = {1e-12, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 28.0, 40.0};
  double F0 = 0.0, G0 = 0.0;
  for (size_t i = 0; i + 1 < sizeof(edges) / sizeof(edges[0]); ++i) {
    F0 += gl_panel(f0_integrand, edges[i], edges[i + 1], x, w);
    G0 += gl_panel(g0_integrand, edges[i], edges[i + 1], x, w);
  }
  // tail past 40 via x = 40/u: integral_0^1 f(40/u) 40/u^2 du; the f0 tail is
  // ~2/x^3 so the transformed integrand is smooth and O(u)
  auto tail = [&](const std::function<double(double)>& f) {
    return gl_panel([&](double u) { return f(40.0 / u) * 40.0 / (u * u); }, 1e-14, 1.0,
                    x, w);
  };
  F0 += tail(f0_integrand);
  G0 += tail(g0_integrand);
  return {F0, G0};
}

EulerMaclaurinReport euler_maclaurin_check(double s) {
  if (!(s > 0.0) || s > 0.1)
    throw ConfigError("euler_maclaurin_check: s must lie in (0, 0.1]");
  EulerMaclaurinReport rep;
  rep.s = s;
  rep.M = series_M(s);
  rep.M_shifted = series_M_shifted(s);
  rep.identity_error = std::abs(rep.M - rep.M_shifted);
  rep.limit_deviation = std::abs((rep.M + 0.5) / (s * s) - F0_G0().first);
  return rep;
}

}  // namespace bistokes
