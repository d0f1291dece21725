#ifndef CURVELAB_DUAL_HPP
#define CURVELAB_DUAL_HPP

#include <cmath>

#include "curvelab/errors.hpp"

namespace curvelab {

// Second-order forward-mode dual number: carries f, f' and f'' through
// arithmetic. Seed with Dual2::variable(x) to differentiate with respect
// to x.
struct Dual2 {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  Dual2() = default;
  Dual2(double v) : v(v) {}
  Dual2(double v, double d1, double d2) : v(v), d1(d1), d2(d2) {}

  static Dual2 variable(double x) { return {x, 1.0, 0.0}; }
};

inline Dual2 operator-(Dual2 a) { return {-a.v, -a.d1, -a.d2}; }

inline Dual2 operator+(Dual2 a, Dual2 b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
inline Dual2 operator-(Dual2 a, Dual2 b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }

inline Dual2 operator*(Dual2 a, Dual2 b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

inline Dual2 operator/(Dual2 a, Dual2 b) {
  if (b.v == 0.0) throw DomainError("/");
  const double inv = 1.0 / b.v;
  const double q = a.v * inv;
  const double q1 = (a.d1 - q * b.d1) * inv;
  const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) * inv;
  return {q, q1, q2};
}

// Chain rule for a scalar function with derivatives fp, fpp at a.v.
inline Dual2 lift(Dual2 a, double f, double fp, double fpp) {
  return {f, fp * a.d1, fpp * a.d1 * a.d1 + fp * a.d2};
}

inline Dual2 sin(Dual2 a) { return lift(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline Dual2 cos(Dual2 a) { return lift(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
inline Dual2 exp(Dual2 a) {
  const double e = std::exp(a.v);
  return lift(a, e, e, e);
}
inline Dual2 sinh(Dual2 a) { return lift(a, std::sinh(a.v), std::cosh(a.v), std::sinh(a.v)); }
inline Dual2 cosh(Dual2 a) { return lift(a, std::cosh(a.v), std::sinh(a.v), std::cosh(a.v)); }

inline Dual2 log(Dual2 a) {
  if (a.v <= 0.0) throw DomainError("log");
  return lift(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v));
}

inline Dual2 sqrt(Dual2 a) {
  if (a.v < 0.0) throw DomainError("sqrt");
  if (a.v == 0.0 && (a.d1 != 0.0 || a.d2 != 0.0)) throw DomainError("sqrt");
  const double s = std::sqrt(a.v);
  return lift(a, s, 0.5 / s, -0.25 / (s * a.v));
}

inline Dual2 pow(Dual2 a, Dual2 b) {
  if (b.d1 == 0.0 && b.d2 == 0.0) {
    // Constant exponent: valid for negative bases at integer exponents.
    const double n = b.v;
    if (a.v == 0.0 && n < 2.0 && n != 0.0 && n != 1.0) throw DomainError("^");
    if (a.v < 0.0 && n != std::floor(n)) throw DomainError("^");
    const double f = std::pow(a.v, n);
    const double fp = n == 0.0 ? 0.0 : n * std::pow(a.v, n - 1.0);
    const double fpp = (n == 0.0 || n == 1.0) ? 0.0 : n * (n - 1.0) * std::pow(a.v, n - 2.0);
    return lift(a, f, fp, fpp);
  }
  if (a.v <= 0.0) throw DomainError("^");
  return exp(b * log(a));
}

}  // namespace curvelab

#endif
