#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "bistokes/geometry.hpp"
#include "bistokes/noslip.hpp"
#include "bistokes/serialize.hpp"
#include "bistokes/validation.hpp"

using namespace bistokes;

namespace {
constexpr double kPi = 3.141592653589793238462643;

double boundary_velocity_residual(const NoSlipSolution& sol, int samples = 720) {
  const Geometry& g = sol.g;
  double worst = 0.0;
  for (int i = 0; i < samples / 2; ++i) {
    const double t = 2.0 * kPi * (i + 0.5) / (samples / 2);
    for (double sgn : {1.0, -1.0}) {
      const BipolarPoint p{sgn * g.s, t};
      const FieldSample f = sol.field(p);
      Vec2 want{0.0, 0.0};
      if (sol.flow_case == FlowCase::Rotation) {
        const Vec2 xy = bipolar_to_cart(g, p);
        want = {xy.y, -xy.x};
      }
      worst = std::max({worst, std::abs(f.u.x - want.x), std::abs(f.u.y - want.y)});
    }
  }
  return worst;
}
}  // namespace

TEST_CASE("automatic truncation meets the tail target") {
  for (double s : {0.1, 0.03, 0.003}) {
    const Truncation tr = auto_truncation(s);
    CHECK(!tr.capped);
    CHECK(double(tr.N) * tr.N * std::exp(-tr.N * s) < 1e-12);
  }
  const Truncation tiny = auto_truncation(1e-4);
  CHECK(tiny.capped);
  CHECK(tiny.N == 2000000);  // ceil(200/s)
}

TEST_CASE("N below 2 is rejected") {
  const Geometry g = make_geometry(1.0, 0.01);
  CHECK_THROWS_AS(phi1_coefficients(g, 1), ConfigError);
  CHECK_THROWS_AS(phi2_coefficients(g, 1), ConfigError);
  CHECK_THROWS_AS(phirot_coefficients(g, 1), ConfigError);
}

TEST_CASE("low-order coefficients have the right small-s behavior") {
  Geometry g = make_geometry(1.0, 1e-4);  // s close to 1e-2
  REQUIRE(g.s < 1.1e-2);
  const NoSlipSolution ext = phi1_coefficients(g);
  CHECK(std::abs(ext.low1 / (3.0 * g.a / (4.0 * g.s)) - 1.0) <= 0.05);
  CHECK(std::abs(ext.low2 / (-3.0 * g.a / (2.0 * g.s)) - 1.0) <= 0.05);
}

TEST_CASE("mode coefficients decay like n e^{-2ns}") {
  const Geometry g = make_geometry(1.0, 0.01);
  for (FlowCase c : {FlowCase::Extensional, FlowCase::Shear, FlowCase::Rotation}) {
    const NoSlipSolution sol = noslip_solution(g, c);
    double fitted_C = 0.0;
    for (int n = 2; n <= sol.N; ++n) {
      const double mag = std::abs(sol.cn[n - 1]) + std::abs(sol.dn[n - 1]);
      fitted_C = std::max(fitted_C, mag / (n * std::exp(-2.0 * n * g.s)));
    }
    CHECK(fitted_C > 0.0);
    CHECK(fitted_C < 1e3 * (g.a + std::abs(sol.K)));
  }
}

TEST_CASE("gauge condition for the even cases") {
  for (double delta : {1e-2, 1e-3}) {
    const Geometry g = make_geometry(1.0, delta);
    for (FlowCase c : {FlowCase::Shear, FlowCase::Rotation}) {
      const NoSlipSolution sol = noslip_solution(g, c);
      KahanSum sum, scale;
      sum.add(sol.low1);
      scale.add(std::abs(sol.low1));
      for (int n = 1; n <= sol.N; ++n) {
        sum.add(sol.cn[n - 1]);
        sum.add(sol.dn[n - 1]);
        scale.add(std::abs(sol.cn[n - 1]) + std::abs(sol.dn[n - 1]));
      }
      CHECK(std::abs(sum.value()) <= 1e-12 * scale.value());
    }
  }
}

TEST_CASE("K_v and K_rot match their small-gap limits") {
  const Geometry g = make_geometry(1.0, 1e-4);
  const auto [F0, G0] = F0_G0();
  const double Kv = K_v_constant(g);
  const double Kr = K_rot_constant(g);
  CHECK(std::abs(Kv / (g.R * (1.0 - G0) / F0 * std::sqrt(g.R / g.delta)) - 1.0) <= 0.1);
  CHECK(std::abs(Kr / (-g.R / F0 * std::sqrt(g.R / g.delta)) - 1.0) <= 0.1);
}

TEST_CASE("M series approaches s^2 F0 - 1/2") {
  const auto [F0, G0] = F0_G0();
  for (double s : {0.03, 0.01}) {
    const double M = series_M(s);
    CHECK(std::abs((M + 0.5) / (s * s) - F0) <= 10.0 * s);
  }
}

TEST_CASE("no-slip boundary residuals at automatic truncation") {
  for (double delta : {1e-2, 1e-3}) {
    const Geometry g = make_geometry(1.0, delta);
    for (FlowCase c : {FlowCase::Extensional, FlowCase::Shear, FlowCase::Rotation}) {
      const NoSlipSolution sol = noslip_solution(g, c);
      const double tol = std::max(1e-8, 10.0 * sol.tail_bound);
      CHECK(boundary_velocity_residual(sol) <= tol);
    }
  }
}

TEST_CASE("stream boundary values vanish for the extensional case") {
  // h Phi1_tot = h Phi1_0 + h Phi1 with h Phi1_0 = a sinh z sin t / (cosh z - cos t)
  const Geometry g = make_geometry(1.0, 0.01);
  const NoSlipSolution sol = phi1_coefficients(g);
  double worst = 0.0;
  for (int i = 0; i < 360; ++i) {
    const double t = 2.0 * kPi * (i + 0.5) / 360;
    for (double sgn : {1.0, -1.0}) {
      const BipolarPoint p{sgn * g.s, t};
      const double background = g.a * std::sinh(p.zeta) * std::sin(t) /
                                (std::cosh(p.zeta) - std::cos(t));
      worst = std::max(worst, std::abs(eval_hpsi(sol.stream, p, 0).p + background));
    }
  }
  CHECK(worst <= 1e-10 * g.a);
}

TEST_CASE("pressures vanish at infinity and q2 is odd in zeta") {
  const Geometry g = make_geometry(1.0, 0.01);
  const NoSlipSolution sh = phi2_coefficients(g);
  CHECK(sh.pressure({0.0, 0.0}) == 0.0);
  CHECK(std::abs(sh.pressure({1e-6, 1e-6})) <= 1e-8);
  for (double t : {0.7, 2.9, 4.1}) {
    const double qp = sh.pressure({0.4 * g.s, t});
    const double qm = sh.pressure({-0.4 * g.s, t});
    CHECK(qp == doctest::Approx(-qm).epsilon(1e-12));
  }
  const NoSlipSolution ext = phi1_coefficients(g);
  CHECK(ext.pressure({0.0, 0.0}) == 0.0);
  CHECK(std::abs(ext.pressure({1e-6, 1e-6})) <= 1e-8);
}

TEST_CASE("pressure is the harmonic conjugate of mu lap Phi (FD oracle)") {
  const Geometry g = make_geometry(1.0, 0.01);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> uz(-0.9, 0.9), ut(0.4, 2.0 * kPi - 0.4);
  for (FlowCase c : {FlowCase::Extensional, FlowCase::Shear, FlowCase::Rotation}) {
    const NoSlipSolution sol = noslip_solution(g, c);
    std::vector<std::array<double, 4>> rows;
    double scale = 0.0;
    for (int i = 0; i < 20; ++i) {
      const BipolarPoint p{uz(rng) * g.s, ut(rng)};
      const double h = 1e-5;
      const double dq_dz =
          (sol.pressure({p.zeta + h, p.theta}) - sol.pressure({p.zeta - h, p.theta})) /
          (2.0 * h);
      const double dq_dt =
          (sol.pressure({p.zeta, p.theta + h}) - sol.pressure({p.zeta, p.theta - h})) /
          (2.0 * h);
      const double dlap_dz = (laplacian_psi(sol.stream, g, {p.zeta + h, p.theta}) -
                              laplacian_psi(sol.stream, g, {p.zeta - h, p.theta})) /
                             (2.0 * h);
      const double dlap_dt = (laplacian_psi(sol.stream, g, {p.zeta, p.theta + h}) -
                              laplacian_psi(sol.stream, g, {p.zeta, p.theta - h})) /
                             (2.0 * h);
      rows.push_back({dq_dz, dq_dt, dlap_dz, dlap_dt});
      scale = std::max(scale, std::abs(dq_dz) + std::abs(dq_dt) +
                                  g.mu * (std::abs(dlap_dz) + std::abs(dlap_dt)));
    }
    for (const auto& r : rows) {
      CHECK(std::abs(r[0] + g.mu * r[3]) <= 1e-6 * scale);
      CHECK(std::abs(r[1] - g.mu * r[2]) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("pressures stay bounded across a gap decade") {
  auto max_pressure = [](const NoSlipSolution& sol) {
    double best = 0.0;
    for (int i = 0; i <= 40; ++i)
      for (int j = 1; j < 80; ++j) {
        const BipolarPoint p{(-1.0 + i / 20.0) * sol.g.s, 2.0 * kPi * j / 80.0};
        if (infinity_distance(p) < 1e-3) continue;
        best = std::max(best, std::abs(sol.pressure(p)));
      }
    return best;
  };
  for (FlowCase c : {FlowCase::Extensional, FlowCase::Shear}) {
    const double m2 = max_pressure(noslip_solution(make_geometry(1.0, 1e-3), c));
    const double m3 = max_pressure(noslip_solution(make_geometry(1.0, 1e-4), c));
    CHECK(std::max(m2, m3) / std::min(m2, m3) < 1.5);
  }
}

TEST_CASE("strain of the shear no-slip flow stays bounded across a decade") {
  auto max_strain = [](const NoSlipSolution& sol) {
    double best = 0.0;
    for (int i = 0; i <= 40; ++i)
      for (int j = 1; j < 80; ++j) {
        const BipolarPoint p{(-1.0 + i / 20.0) * sol.g.s, 2.0 * kPi * j / 80.0};
        if (infinity_distance(p) < 1e-3) continue;
        best = std::max(best, sol.field(p).strain.max_abs());
      }
    return best;
  };
  const double m2 = max_strain(noslip_solution(make_geometry(1.0, 1e-3), FlowCase::Shear));
  const double m3 = max_strain(noslip_solution(make_geometry(1.0, 1e-4), FlowCase::Shear));
  CHECK(std::max(m2, m3) / std::min(m2, m3) < 1.5);
}

TEST_CASE("f0 and g0 limits at zero (series oracle values)") {
  CHECK(std::abs(f0_integrand(1e-6) - 1.0 / 3.0) <= 1e-5);
  CHECK(std::abs(g0_integrand(1e-6) - 1.0) <= 1e-5);
  // interior smoothness across the evaluation-branch seams
  for (double x : {0.2499, 0.2501, 14.999, 15.001}) {
    CHECK(f0_integrand(x) > 0.0);
    CHECK(g0_integrand(x) > 0.0);
  }
  CHECK(std::abs(f0_integrand(0.2499) - f0_integrand(0.2501)) <= 1e-6);
  CHECK(std::abs(f0_integrand(14.999) - f0_integrand(15.001)) <= 1e-12);
}

TEST_CASE("F0 and G0 agree with the frozen references and the second scheme") {
  const auto [F0, G0] = F0_G0();
  CHECK(std::abs(F0 - 0.7280987824952262) <= 1e-9);
  CHECK(std::abs(G0 - 1.5371490762231074) <= 1e-9);
  const auto [F0b, G0b] = F0_G0_gauss();
  CHECK(std::abs(F0 - F0b) <= 1e-9);
  CHECK(std::abs(G0 - G0b) <= 1e-9);
}

TEST_CASE("doubling the truncation moves samples by less than the tail bound") {
  const Geometry g = make_geometry(1.0, 0.01);
  for (FlowCase c : {FlowCase::Extensional, FlowCase::Shear, FlowCase::Rotation}) {
    const NoSlipSolution base = noslip_solution(g, c);
    const NoSlipSolution fine = noslip_solution(g, c, 2 * base.N);
    for (double t : {1.0, 2.5, 4.0}) {
      const BipolarPoint p{0.6 * g.s, t};
      const FieldSample a = base.field(p), b = fine.field(p);
      const double floor = 1e-13 * (1.0 + std::abs(base.K));
      CHECK(std::abs(a.u.x - b.u.x) <= base.tail_bound + floor);
      CHECK(std::abs(a.p - b.p) <= (base.tail_bound + floor) / g.a);
    }
  }
}

TEST_CASE("velocity decays to the background along a ray") {
  const Geometry g = make_geometry(1.0, 0.01);
  const NoSlipSolution sol = phi1_coefficients(g);
  std::vector<std::pair<double, double>> pts;
  for (double r : {8.0, 16.0, 32.0, 64.0, 128.0}) {
    const BipolarPoint p = cart_to_bipolar(g, r * 0.8, r * 0.6);
    const FieldSample f = sol.series_field(p);  // v1 - U_ex
    pts.emplace_back(r, f.u.norm());
  }
  // |v - U| ~ C / r: slope of log(value) vs log(r) at most -0.9
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [r, v] : pts) {
    sx += std::log(r);
    sy += std::log(v);
    sxx += std::log(r) * std::log(r);
    sxy += std::log(r) * std::log(v);
  }
  const int n = static_cast<int>(pts.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope <= -0.9);
}

TEST_CASE("coefficient documents carry the required keys") {
  const Geometry g = make_geometry(1.0, 0.01);
  const auto j1 = coefficients_json(phi1_coefficients(g));
  CHECK(j1["case"] == "extensional");
  CHECK(j1.contains("K"));
  CHECK(j1.contains("N"));
  CHECK(j1.contains("tail_bound"));
  CHECK(j1["an"].is_array());
  const auto j2 = coefficients_json(phi2_coefficients(g));
  CHECK(j2["case"] == "shear");
  CHECK(j2["cn"].size() == j2["N"].get<size_t>());
  const auto j3 = coefficients_json(phirot_coefficients(g));
  CHECK(j3["case"] == "rotation");
  CHECK(std::abs(j3["K"].get<double>() - K_rot_constant(g)) == 0.0);
}
