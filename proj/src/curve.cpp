#include "curvelab/curve.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace curvelab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// f, f', f'' of a catalog entry at an in-domain x.
struct Triple {
  double f, d1, d2;
};

Triple eval3(const CurveCatalogEntry& e, double x) {
  struct Visitor {
    double x;
    Triple operator()(const Parabola& p) const { return {p.a * x * x, 2.0 * p.a * x, 2.0 * p.a}; }
    Triple operator()(const Family314& f) const {
      if (f.c == 0.0) return {f.a * x * x, 2.0 * f.a * x, 2.0 * f.a};
      const double sa = std::sqrt(f.a);
      const double z = 4.0 * sa * f.c * x;
      const double w = z + 1.0;
      const double sw = std::sqrt(w);
      // z^2/4 / (1 + z/2 + sqrt(1+z)) avoids cancellation near x = 0.
      return {z * z / (8.0 * f.c * f.c * (1.0 + 0.5 * z + sw)),
              (sa / f.c) * z / (sw * (1.0 + sw)),
              2.0 * f.a / (w * sw)};
    }
    Triple operator()(const CircleArc& c) const {
      const double s = std::sqrt(c.r * c.r - x * x);
      return {x * x / (c.r + s), x / s, c.r * c.r / (s * s * s)};
    }
    Triple operator()(const EllipseArc& e) const {
      const double u = x / e.p;
      const double s = std::sqrt(1.0 - u * u);
      return {e.q * u * u / (1.0 + s), (e.q / e.p) * u / s, (e.q / (e.p * e.p)) / (s * s * s)};
    }
    Triple operator()(const ExpShift&) const {
      const double ex = std::exp(x);
      return {std::expm1(x) - x, std::expm1(x), ex};
    }
    Triple operator()(const PiecewiseQuadratic& p) const {
      // Right value at the junction x = 0; callers gate on is_c2_at.
      const double c = x < 0.0 ? p.a : p.b;
      return {c * x * x, 2.0 * c * x, 2.0 * c};
    }
    Triple operator()(const Expression& e) const {
      auto [f, d1, d2] = eval_dual(e.ast, x);
      return {f, d1, d2};
    }
  };
  return std::visit(Visitor{x}, e);
}

}  // namespace

Curve::Curve(CurveCatalogEntry entry) : entry_(std::move(entry)) {
  struct Setup {
    Interval domain{-kInf, kInf};
    bool convex = false;
    std::vector<double> non_c2;
  };
  struct Visitor {
    Setup operator()(const Parabola& p) const {
      if (!(p.a > 0.0)) throw InvalidParameter("a", "must be positive");
      return {{-kInf, kInf}, true, {}};
    }
    Setup operator()(const Family314& f) const {
      if (!(f.a > 0.0)) throw InvalidParameter("a", "must be positive");
      if (f.c == 0.0) return {{-kInf, kInf}, true, {}};
      const double bound = -1.0 / (4.0 * std::sqrt(f.a) * f.c);
      if (f.c > 0.0) return {{bound, kInf}, true, {}};
      return {{-kInf, bound}, true, {}};
    }
    Setup operator()(const CircleArc& c) const {
      if (!(c.r > 0.0)) throw InvalidParameter("r", "must be positive");
      return {{-c.r, c.r}, true, {}};
    }
    Setup operator()(const EllipseArc& e) const {
      if (!(e.p > 0.0)) throw InvalidParameter("p", "must be positive");
      if (!(e.q > 0.0)) throw InvalidParameter("q", "must be positive");
      return {{-e.p, e.p}, true, {}};
    }
    Setup operator()(const ExpShift&) const { return {{-kInf, kInf}, true, {}}; }
    Setup operator()(const PiecewiseQuadratic& p) const {
      if (!(p.a > 0.0)) throw InvalidParameter("a", "must be positive");
      if (!(p.b > 0.0)) throw InvalidParameter("b", "must be positive");
      if (p.a == p.b) throw InvalidParameter("b", "must differ from a");
      return {{-kInf, kInf}, false, {0.0}};
    }
    Setup operator()(const Expression&) const { return {{-kInf, kInf}, false, {}}; }
  };
  Setup s = std::visit(Visitor{}, entry_);
  domain_ = s.domain;
  strictly_convex_ = s.convex;
  non_c2_points_ = std::move(s.non_c2);
}

void Curve::check_domain(double x) const {
  if (!domain_.contains(x) || !std::isfinite(x)) throw OutOfDomain(x);
}

bool Curve::is_c2_at(double x) const {
  for (double p : non_c2_points_)
    if (p == x) return false;
  return true;
}

double Curve::eval(double x) const {
  check_domain(x);
  return eval3(entry_, x).f;
}

double Curve::slope(double x) const {
  check_domain(x);
  return eval3(entry_, x).d1;
}

double Curve::second_derivative(double x) const {
  check_domain(x);
  return eval3(entry_, x).d2;
}

double Curve::curvature(double x) const {
  check_domain(x);
  if (!is_c2_at(x)) throw NonSmoothPoint(x);
  const Triple t = eval3(entry_, x);
  const double n = 1.0 + t.d1 * t.d1;
  return t.d2 / (n * std::sqrt(n));
}

Line Curve::tangent_line(double x) const {
  check_domain(x);
  const Triple t = eval3(entry_, x);
  return Line::through({x, t.f}, {1.0, t.d1});
}

std::string Curve::spec() const {
  struct Visitor {
    std::string operator()(const Parabola& p) const { return "parabola(a=" + fmt(p.a) + ")"; }
    std::string operator()(const Family314& f) const {
      return "family(a=" + fmt(f.a) + ",c=" + fmt(f.c) + ")";
    }
    std::string operator()(const CircleArc& c) const { return "circle(r=" + fmt(c.r) + ")"; }
    std::string operator()(const EllipseArc& e) const {
      return "ellipse(p=" + fmt(e.p) + ",q=" + fmt(e.q) + ")";
    }
    std::string operator()(const ExpShift&) const { return "expshift"; }
    std::string operator()(const PiecewiseQuadratic& p) const {
      return "piecewise(a=" + fmt(p.a) + ",b=" + fmt(p.b) + ")";
    }
    std::string operator()(const Expression& e) const {
      return "expr(" + format_expr(e.ast) + ")";
    }
  };
  return std::visit(Visitor{}, entry_);
}

Curve family_curve(double a, double c) {
  if (!(a > 0.0)) throw InvalidParameter("a", "must be positive");
  return Curve(Family314{a, c});
}

}  // namespace curvelab
