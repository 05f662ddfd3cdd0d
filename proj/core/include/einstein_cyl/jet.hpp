#pragma once

#include <cmath>

namespace ecyl {

// Second-order forward-mode jet: value with first and second derivative
// with respect to one scalar variable.
struct Jet {
  double v = 0.0;
  double d = 0.0;
  double dd = 0.0;

  static constexpr Jet variable(double x) { return {x, 1.0, 0.0}; }
  static constexpr Jet constant(double c) { return {c, 0.0, 0.0}; }
};

constexpr Jet operator+(Jet a, Jet b) { return {a.v + b.v, a.d + b.d, a.dd + b.dd}; }
constexpr Jet operator-(Jet a, Jet b) { return {a.v - b.v, a.d - b.d, a.dd - b.dd}; }
constexpr Jet operator-(Jet a) { return {-a.v, -a.d, -a.dd}; }
constexpr Jet operator*(Jet a, Jet b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d, a.dd * b.v + 2.0 * a.d * b.d + a.v * b.dd};
}
constexpr Jet operator*(double c, Jet a) { return {c * a.v, c * a.d, c * a.dd}; }
constexpr Jet operator*(Jet a, double c) { return c * a; }
constexpr Jet operator+(Jet a, double c) { return {a.v + c, a.d, a.dd}; }
constexpr Jet operator+(double c, Jet a) { return a + c; }
constexpr Jet operator-(Jet a, double c) { return {a.v - c, a.d, a.dd}; }

constexpr Jet reciprocal(Jet a) {
  const double r = 1.0 / a.v;
  const double r2 = r * r;
  return {r, -a.d * r2, (2.0 * a.d * a.d * r - a.dd) * r2};
}
constexpr Jet operator/(Jet a, Jet b) { return a * reciprocal(b); }
constexpr Jet operator/(Jet a, double c) { return {a.v / c, a.d / c, a.dd / c}; }

inline Jet sqrt(Jet a) {
  const double r = std::sqrt(a.v);
  const double d = a.d / (2.0 * r);
  return {r, d, (a.dd - 2.0 * d * d) / (2.0 * r)};
}

}  // namespace ecyl
