#include <doctest.h>

#include <cmath>

#include "curvelab/dsl.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/frame.hpp"

using namespace curvelab;

TEST_CASE("identity frame at an apex") {
  Frame fr(Curve{Parabola{1.0}}, 0.0);
  CHECK(fr.kappa() == doctest::Approx(2.0));
  for (double u : {-0.9, -0.2, 0.4, 1.1}) {
    CHECK(fr.eval(u) == doctest::Approx(u * u).epsilon(1e-14));
    CHECK(fr.slope(u) == doctest::Approx(2.0 * u).epsilon(1e-14));
    CHECK(fr.x_of_u(u) == doctest::Approx(u));
  }
}

TEST_CASE("rotated parabola frame") {
  const Curve c{Parabola{1.0}};
  Frame fr(c, 1.0);
  // kappa = 2 / (1 + 4)^(3/2) at x0 = 1.
  CHECK(fr.kappa() == doctest::Approx(2.0 / std::pow(5.0, 1.5)).epsilon(1e-14));
  CHECK(fr.eval(0.0) == doctest::Approx(0.0));
  CHECK(fr.slope(0.0) == doctest::Approx(0.0));
  // Frame maps invert each other.
  for (double u : {-0.8, -0.1, 0.3, 1.5}) {
    const double x = fr.x_of_u(u);
    CHECK(fr.u_of_x(x) == doctest::Approx(u).epsilon(1e-12));
    CHECK(fr.eval(u) == doctest::Approx(fr.v_of_x(x)).epsilon(1e-13));
    CHECK(fr.eval(u) >= 0.0);
  }
  // Small-u expansion: v ~ kappa/2 u^2.
  const double u = 1e-4;
  CHECK(fr.eval(u) == doctest::Approx(0.5 * fr.kappa() * u * u).epsilon(1e-3));
}

TEST_CASE("frame second derivative matches curvature at the base") {
  for (const char* spec : {"parabola(a=2)", "circle(r=1)", "ellipse(p=2,q=1)", "expshift",
                           "family(a=1,c=1)"}) {
    const Curve c = parse_curve_spec(spec);
    for (double x0 : {-0.2, 0.0, 0.4}) {
      Frame fr(c, x0);
      CHECK(fr.second(0.0) == doctest::Approx(fr.kappa()).epsilon(1e-12));
      CHECK(fr.second(0.0) == doctest::Approx(c.curvature(x0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("chord endpoints satisfy the height equation") {
  for (const char* spec : {"circle(r=1)", "ellipse(p=2,q=1)", "expshift", "family(a=1,c=1)"}) {
    const Curve c = parse_curve_spec(spec);
    Frame fr(c, 0.1);
    for (double h : {1e-6, 1e-3, 0.05}) {
      const Chord ch = chord_endpoints(fr, h);
      CHECK(ch.s < 0.0);
      CHECK(ch.t > 0.0);
      CHECK(std::abs(fr.eval(ch.s) - h) <= 1e-13 * std::max(1.0, h));
      CHECK(std::abs(fr.eval(ch.t) - h) <= 1e-13 * std::max(1.0, h));
    }
  }
}

TEST_CASE("circle chord has a closed form") {
  Frame fr(Curve{CircleArc{1.0}}, 0.0);
  for (double h : {0.01, 0.1, 0.5}) {
    // v = 1 - sqrt(1 - u^2) = h  =>  u = sqrt(h(2 - h)).
    const double u = std::sqrt(h * (2.0 - h));
    const Chord ch = chord_endpoints(fr, h);
    CHECK(ch.t == doctest::Approx(u).epsilon(1e-12));
    CHECK(ch.s == doctest::Approx(-u).epsilon(1e-12));
  }
}

TEST_CASE("piecewise chord endpoints") {
  Frame fr(Curve{PiecewiseQuadratic{1.0, 4.0}}, 0.0);
  const Chord ch = chord_endpoints(fr, 0.04);
  CHECK(ch.s == doctest::Approx(-0.2).epsilon(1e-12));
  CHECK(ch.t == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("frame heights agree with a direct offset-line construction") {
  // Independent oracle: intersect the curve with the line parallel to the
  // tangent at distance h, in world coordinates, by bisection on x.
  const Curve c = parse_curve_spec("ellipse(p=2,q=1)");
  const double x0 = 0.6, h = 0.02;
  Frame fr(c, x0);
  const Line tangent = c.tangent_line(x0);
  auto offset_of = [&](double x) {
    // Signed distance from the curve point to the tangent line (convex side
    // is positive for the lower arc).
    return tangent.residual({x, c.eval(x)});
  };
  const double sgn = offset_of(x0 + 0.1) > 0.0 ? 1.0 : -1.0;
  auto g = [&](double x) { return sgn * offset_of(x) - h; };
  double lo = x0, hi = x0 + 0.5;
  while (g(hi) < 0.0) hi += 0.1;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  const double x_right = 0.5 * (lo + hi);
  const Chord ch = chord_endpoints(fr, h);
  CHECK(fr.x_of_u(ch.t) == doctest::Approx(x_right).epsilon(1e-10));
}

TEST_CASE("frame construction failures") {
  CHECK_THROWS_AS(Frame(Curve{CircleArc{1.0}}, 1.5), OutOfDomain);
  CHECK_THROWS_AS(Frame(Curve{Expression{parse_expression("x^3")}}, -0.5), NonConvexAt);
  Frame fr(Curve{CircleArc{1.0}}, 0.0);
  CHECK_THROWS_AS(fr.eval(1.5), OutOfFrameRange);
  CHECK_THROWS_AS(chord_endpoints(fr, 1.5), ChordOutOfDomain);
  CHECK_THROWS_AS(chord_endpoints(fr, -0.1), InvalidParameter);
}

TEST_CASE("x_of_u shrinks back near the domain boundary") {
  // family(a=1,c=1) has domain x > -1/4; heights near the reachable maximum
  // must not be lost to overshooting bracket expansion.
  Frame fr(family_curve(1.0, 1.0), 0.1);
  const Chord ch = chord_endpoints(fr, 0.05);
  CHECK(fr.eval(ch.s) == doctest::Approx(0.05).epsilon(1e-12));
}
