#ifndef CURVELAB_CURVE_HPP
#define CURVELAB_CURVE_HPP

#include <string>
#include <variant>
#include <vector>

#include "curvelab/expr.hpp"
#include "curvelab/geometry.hpp"

namespace curvelab {

// Open interval of x values. Infinite endpoints allowed.
struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return x > lo && x < hi; }
};

struct Parabola {
  double a;  // y = a x^2, a > 0
};

// Closed-form strictly convex family; reduces to Parabola when c = 0.
struct Family314 {
  double a;  // > 0
  double c;
};

struct CircleArc {
  double r;  // lower arc y = r - sqrt(r^2 - x^2)
};

struct EllipseArc {
  double p;  // semi-axes; lower arc y = q(1 - sqrt(1 - x^2/p^2))
  double q;
};

// y = e^x - 1 - x; strictly convex with f(0) = f'(0) = 0.
struct ExpShift {};

// y = a x^2 for x < 0, b x^2 for x >= 0; C^1 but not C^2 at 0.
struct PiecewiseQuadratic {
  double a;
  double b;
};

struct Expression {
  ExprPtr ast;
};

using CurveCatalogEntry = std::variant<Parabola, Family314, CircleArc, EllipseArc,
                                       ExpShift, PiecewiseQuadratic, Expression>;

// Immutable evaluable plane curve in graph form y = f(x).
class Curve {
 public:
  explicit Curve(CurveCatalogEntry entry);

  double eval(double x) const;               // throws OutOfDomain
  double slope(double x) const;
  double second_derivative(double x) const;  // one-sided right value at non-C2 points
  double curvature(double x) const;          // throws NonSmoothPoint at non-C2 points
  Line tangent_line(double x) const;

  const Interval& domain() const { return domain_; }
  // True for catalog entries known to have f'' > 0 everywhere.
  bool strictly_convex() const { return strictly_convex_; }
  const std::vector<double>& non_c2_points() const { return non_c2_points_; }
  bool is_c2_at(double x) const;

  // Canonical spec string, reparsable by parse_curve_spec.
  std::string spec() const;

  const CurveCatalogEntry& entry() const { return entry_; }

 private:
  void check_domain(double x) const;

  CurveCatalogEntry entry_;
  Interval domain_;
  bool strictly_convex_ = false;
  std::vector<double> non_c2_points_;
};

Curve family_curve(double a, double c);  // throws InvalidParameter unless a > 0

}  // namespace curvelab

#endif
