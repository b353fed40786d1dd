#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bistokes {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double c) const { return {c * x, c * y}; }
  Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double c, Vec2 v) { return {c * v.x, c * v.y}; }

/// Symmetric 2x2 tensor (strain, stress).
struct SymMat2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  SymMat2 operator+(SymMat2 o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
  SymMat2 operator-(SymMat2 o) const { return {xx - o.xx, xy - o.xy, yy - o.yy}; }
  SymMat2 operator*(double c) const { return {c * xx, c * xy, c * yy}; }
  SymMat2& operator+=(SymMat2 o) {
    xx += o.xx;
    xy += o.xy;
    yy += o.yy;
    return *this;
  }
  double trace() const { return xx + yy; }
  Vec2 apply(Vec2 v) const { return {xx * v.x + xy * v.y, xy * v.x + yy * v.y}; }
  /// Largest absolute entry; the norm used for blow-up rate estimates.
  double max_abs() const {
    return std::max({std::abs(xx), std::abs(xy), std::abs(yy)});
  }
};

inline SymMat2 operator*(double c, SymMat2 m) { return m * c; }

inline SymMat2 identity2(double c = 1.0) { return {c, 0.0, c}; }
inline SymMat2 offdiag2(double c = 1.0) { return {0.0, c, 0.0}; }

/// Velocity, pressure, strain and stress at one point, all in the Cartesian frame.
struct FieldSample {
  Vec2 u{};
  double p = 0.0;
  SymMat2 strain{};
  SymMat2 stress{};

  FieldSample& axpy(double c, const FieldSample& o) {
    u += c * o.u;
    p += c * o.p;
    strain += c * o.strain;
    stress += c * o.stress;
    return *this;
  }
};

/// Compensated accumulator for alternating, slowly decaying mode sums.
class KahanSum {
 public:
  void add(double term) {
    const double y = term - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bistokes
