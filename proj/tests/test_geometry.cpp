#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bistokes/geometry.hpp"

using namespace bistokes;

namespace {
constexpr double kPi = 3.141592653589793238462643;

BipolarPoint random_exterior_point(std::mt19937& rng, const Geometry& g) {
  std::uniform_real_distribution<double> uz(-0.999, 0.999);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
  for (;;) {
    BipolarPoint p{uz(rng) * g.s, ut(rng)};
    if (infinity_distance(p) > 1e-3) return p;
  }
}
}  // namespace

TEST_CASE("derived geometry fields") {
  const Geometry g = make_geometry(1.0, 0.01, 1.0);
  CHECK(g.a == doctest::Approx(std::sqrt(0.01 * 1.0025)).epsilon(1e-15));
  CHECK(g.s == doctest::Approx(std::asinh(g.a)).epsilon(1e-15));
  CHECK(g.centers[0].x == doctest::Approx(-1.005).epsilon(1e-15));
  CHECK(g.centers[1].x == doctest::Approx(1.005).epsilon(1e-15));

  // a^2 = delta (R + delta/4) and the hyperbolic identities
  CHECK(std::abs(g.a * g.a - g.delta * (g.R + g.delta / 4.0)) <= 1e-15 * g.a * g.a);
  CHECK(g.R * std::sinh(g.s) == doctest::Approx(g.a).epsilon(1e-14));
  CHECK(g.R * std::cosh(g.s) == doctest::Approx(g.R + g.delta / 2.0).epsilon(1e-14));
}

TEST_CASE("R cosh s - R equals half the gap for any input") {
  for (double R : {0.5, 1.0, 2.0, 7.3}) {
    for (double delta : {1e-1, 1e-2, 1e-4}) {
      const Geometry g = make_geometry(R, delta);
      CHECK(R * std::cosh(g.s) - R == doctest::Approx(delta / 2.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("s approaches sqrt(delta/R) as the gap closes") {
  const Geometry g = make_geometry(1.0, 1e-4);
  CHECK(std::abs(g.s / 1e-2 - 1.0) < 10.0 * g.delta);
}

TEST_CASE("invalid configuration names the offending field") {
  CHECK_THROWS_WITH_AS(make_geometry(-1.0, 0.01), doctest::Contains("R"), ConfigError);
  CHECK_THROWS_WITH_AS(make_geometry(1.0, 0.0), doctest::Contains("delta"), ConfigError);
  CHECK_THROWS_WITH_AS(make_geometry(1.0, 0.01, -2.0), doctest::Contains("mu"),
                       ConfigError);
}

TEST_CASE("forward map special points") {
  const Geometry g = make_geometry(1.0, 0.01);
  const Vec2 origin = bipolar_to_cart(g, {0.0, kPi});
  CHECK(origin.x == doctest::Approx(0.0));
  CHECK(origin.y == doctest::Approx(0.0));

  const Vec2 inner = bipolar_to_cart(g, {g.s, kPi});
  CHECK(inner.x == doctest::Approx(g.delta / 2.0).epsilon(1e-12));
  CHECK(inner.y == doctest::Approx(0.0));

  const Vec2 top = bipolar_to_cart(g, {0.0, kPi / 2.0});
  CHECK(top.x == doctest::Approx(0.0));
  CHECK(top.y == doctest::Approx(g.a).epsilon(1e-14));

  CHECK_THROWS_AS(bipolar_to_cart(g, {0.0, 0.0}), DomainError);
}

TEST_CASE("boundary circles land on the stored centers") {
  const Geometry g = make_geometry(1.0, 0.01);
  for (int disk = 0; disk < 2; ++disk) {
    const double zs = disk == 0 ? -g.s : g.s;
    for (int i = 0; i < 64; ++i) {
      const double t = 2.0 * kPi * (i + 0.5) / 64;
      const Vec2 xy = bipolar_to_cart(g, {zs, t});
      const double r = std::hypot(xy.x - g.centers[disk].x, xy.y - g.centers[disk].y);
      CHECK(std::abs(r - g.R) <= 1e-12 * g.R);
    }
  }
}

TEST_CASE("inverse map special points and errors") {
  const Geometry g = make_geometry(1.0, 0.01);
  const BipolarPoint p = cart_to_bipolar(g, 0.0, 0.0);
  CHECK(p.zeta == doctest::Approx(0.0));
  CHECK(p.theta == doctest::Approx(kPi));
  CHECK_THROWS_AS(cart_to_bipolar(g, g.a, 0.0), DomainError);
  CHECK_THROWS_AS(cart_to_bipolar(g, -g.a, 0.0), DomainError);
  CHECK_THROWS_AS(cart_to_bipolar(g, 1e9, 1e9), DomainError);  // numerically at infinity
}

TEST_CASE("roundtrip recovers a specific point") {
  const Geometry g = make_geometry(1.0, 0.01);
  const Vec2 xy = bipolar_to_cart(g, {0.3 * g.s, 1.2});
  const BipolarPoint q = cart_to_bipolar(g, xy.x, xy.y);
  CHECK(q.zeta == doctest::Approx(0.3 * g.s).epsilon(1e-10));
  CHECK(q.theta == doctest::Approx(1.2).epsilon(1e-10));
}

TEST_CASE("roundtrip property on 1000 random exterior points") {
  const Geometry g = make_geometry(1.0, 0.01);
  std::mt19937 rng(20240811);
  for (int i = 0; i < 1000; ++i) {
    const BipolarPoint p = random_exterior_point(rng, g);
    const Vec2 xy = bipolar_to_cart(g, p);
    const BipolarPoint q = cart_to_bipolar(g, xy.x, xy.y);
    const Vec2 back = bipolar_to_cart(g, q);
    const double scale = std::abs(xy.x) + std::abs(xy.y) + g.a;
    CHECK(std::abs(back.x - xy.x) <= 1e-10 * scale);
    CHECK(std::abs(back.y - xy.y) <= 1e-10 * scale);
  }
}

TEST_CASE("far-field coordinates obey the two-sided bound") {
  // |x|^2 = a^2 (cosh z + cos t)/(cosh z - cos t), so the bound applies to |x|/a
  const Geometry g = make_geometry(1.0, 0.01);
  for (double r : {50.0, 300.0, 2000.0}) {
    const BipolarPoint p = cart_to_bipolar(g, r * 0.6, r * 0.8);
    const double zt2 = infinity_distance(p) * infinity_distance(p);
    const double inv2 = g.a * g.a / (r * r);
    CHECK(zt2 / 8.0 <= inv2);
    CHECK(inv2 <= zt2 / 2.0);
  }
}

TEST_CASE("gap segment maps into the open gap") {
  const Geometry g = make_geometry(1.0, 0.01);
  for (double f : {-0.95, -0.5, 0.5, 0.95}) {
    const Vec2 xy = bipolar_to_cart(g, {f * g.s, kPi});
    CHECK(std::abs(xy.x) < g.delta / 2.0);
    CHECK(xy.y == doctest::Approx(0.0));
  }
}

TEST_CASE("frame entries and involution") {
  const Geometry g = make_geometry(1.0, 0.01);
  const Frame f0 = frame_xi({0.0, kPi});
  CHECK(f0.alpha == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f0.beta == doctest::Approx(0.0));

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const BipolarPoint p = random_exterior_point(rng, g);
    const Frame f = frame_xi(p);
    CHECK(std::abs(f.alpha * f.alpha + f.beta * f.beta - 1.0) <= 1e-14);
    // Xi^2 = I via the tensor conjugation of the identity
    const SymMat2 id = tensor_to_cartesian(f, 1.0, 0.0, 1.0);
    CHECK(std::abs(id.xx - 1.0) <= 1e-14);
    CHECK(std::abs(id.xy) <= 1e-14);
    CHECK(std::abs(id.yy - 1.0) <= 1e-14);
  }
}

TEST_CASE("frame is near diag(1,-1) in the narrow region") {
  const Geometry g = make_geometry(1.0, 1e-4);
  const double sd = std::sqrt(g.delta);
  for (double y : {-0.8 * sd, 0.3 * sd, 0.9 * sd}) {
    const BipolarPoint p = cart_to_bipolar(g, 0.0, y);
    const Frame f = frame_xi(p);
    CHECK(std::abs(f.alpha - 1.0) <= 5.0 * sd);
    CHECK(std::abs(f.beta) <= 5.0 * sd);
  }
}

TEST_CASE("scale factor value, limit and circumference") {
  const Geometry g = make_geometry(1.0, 0.01);
  CHECK(scale_h(g, {0.0, kPi}) == doctest::Approx(2.0 / g.a).epsilon(1e-15));

  // near infinity h ~ (zeta^2 + theta^2) / (2a)
  const BipolarPoint tiny{3e-4, 4e-4};
  CHECK(scale_h(g, tiny) ==
        doctest::Approx((tiny.zeta * tiny.zeta + tiny.theta * tiny.theta) / (2.0 * g.a))
            .epsilon(1e-6));

  // line element integrates to the circumference: int dtheta / h = 2 pi R
  const int n = 4096;
  double len = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * kPi * (i + 0.5) / n;
    len += 1.0 / scale_h(g, {g.s, t});
  }
  len *= 2.0 * kPi / n;
  CHECK(std::abs(len - 2.0 * kPi * g.R) <= 1e-10 * g.R);
}

TEST_CASE("theta reduction is branch-insensitive near the positive x-axis") {
  const Geometry g = make_geometry(1.0, 0.01);
  for (double y : {1e-12, -1e-12, 1e-6, -1e-6}) {
    for (double x : {2.5, 3.7}) {  // outside D2, both sides of the axis
      const BipolarPoint p = cart_to_bipolar(g, x, y);
      const Vec2 back = bipolar_to_cart(g, p);
      CHECK(std::abs(back.x - x) <= 1e-10 * (x + g.a));
      CHECK(std::abs(back.y - y) <= 1e-10 * (x + g.a));
    }
  }
}

TEST_CASE("rigid motions") {
  CHECK(rigid_motion(1, {2.0, 3.0}).x == 1.0);
  CHECK(rigid_motion(2, {2.0, 3.0}).y == 1.0);
  CHECK(rigid_motion(3, {2.0, 3.0}).x == 3.0);
  CHECK(rigid_motion(3, {2.0, 3.0}).y == -2.0);
  CHECK_THROWS_AS(rigid_motion(0, {0, 0}), ConfigError);
}
