#include <doctest.h>

#include <cmath>

#include "curvelab/characterize.hpp"
#include "curvelab/dsl.hpp"
#include "curvelab/errors.hpp"

using namespace curvelab;

TEST_CASE("ratio lambda") {
  Frame par(Curve{Parabola{1.0}}, 0.0);
  CHECK(ratio_lambda(par, 0.3) == doctest::Approx(0.5).epsilon(1e-12));
  Frame circ(Curve{CircleArc{1.0}}, 0.0);
  CHECK(ratio_lambda(circ, 0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("power law fit") {
  Frame fr(Curve{Parabola{2.0}}, 0.3);
  const auto hs = h_sequence(0.05, 0.5, 8);
  const PowerLawFit fit = power_law_fit(fr, hs);
  CHECK(fit.mu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.lambda == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fit.rms < 1e-12);
  CHECK_THROWS_AS(power_law_fit(fr, h_sequence(0.05, 0.5, 2)), DegenerateInput);
}

TEST_CASE("identity residuals vanish on parabolas and family members") {
  for (const char* spec : {"parabola(a=1)", "parabola(a=0.5)", "family(a=1,c=1)",
                           "family(a=2,c=-1)"}) {
    const Curve c = parse_curve_spec(spec);
    for (double x0 : {0.0, 0.05}) {
      Frame fr(c, x0);
      for (double t : {-0.04, 0.02, 0.05}) {
        CHECK(std::abs(lemma6_residual(fr, t)) < 1e-8);
        CHECK(std::abs(lemma7_residual(fr, t)) < 1e-8);
        CHECK(std::abs(ode_residual(fr, t)) < 1e-6);
      }
    }
  }
}

TEST_CASE("circle residuals at t = 0.5") {
  Frame fr(Curve{CircleArc{1.0}}, 0.0);
  CHECK(lemma6_residual(fr, 0.5) == doctest::Approx(-3.206e-3).epsilon(1e-3));
  CHECK(lemma7_residual(fr, 0.5) == doctest::Approx(3.703e-3).epsilon(1e-3));
  CHECK(ode_residual(fr, 0.5) == doctest::Approx(0.1521).epsilon(1e-3));
  CHECK_THROWS_AS(ode_residual(fr, 0.0), SingularAtApex);
}

TEST_CASE("ode residual is even in the probe side for family members") {
  Frame fr(family_curve(1.0, 0.5), 0.4);
  CHECK(std::abs(ode_residual(fr, 0.15)) < 1e-10);
  CHECK(std::abs(ode_residual(fr, -0.15)) < 1e-10);
}

TEST_CASE("conic coefficients interpolate the family") {
  for (double a : {1.0, 2.0}) {
    for (double c : {-1.0, 0.5, 1.0}) {
      const ConicFit fit = conic_coefficients(a, c);
      CHECK(fit.discriminant == doctest::Approx(0.0).epsilon(1e-14));
      const Curve f = family_curve(a, c);
      for (double x : {-0.1, 0.2, 0.8}) {
        if (!f.domain().contains(x)) continue;
        const double y = f.eval(x);
        const auto& A = fit.coeffs;
        const double r = A[0] * x * x + A[1] * x * y + A[2] * y * y + A[3] * x + A[4] * y + A[5];
        CHECK(std::abs(r) < 1e-12);
      }
    }
  }
}

TEST_CASE("conic fit recovers exact conics") {
  // Unit circle points: x^2 + y^2 - 1 = 0, discriminant -4 of (1,0,1,...)
  // normalized to unit coefficient norm.
  std::vector<Point2> pts;
  for (int i = 0; i < 24; ++i) {
    const double th = 0.1 + 0.09 * i;
    pts.push_back({std::cos(th), std::sin(th)});
  }
  const ConicFit fit = fit_parabola_conic(pts);
  CHECK(fit.residual < 1e-12);
  // coeffs proportional to (1,0,1,0,0,-1): |v| = sqrt(3), disc = -4/3.
  CHECK(fit.discriminant == doctest::Approx(-4.0 / 3.0).epsilon(1e-10));

  std::vector<Point2> too_few(pts.begin(), pts.begin() + 5);
  CHECK_THROWS_AS(fit_parabola_conic(too_few), DegenerateInput);
}

TEST_CASE("conic fit on family samples") {
  const Curve f = family_curve(1.0, 1.0);
  const auto pts = sample_curve_points(f);
  const ConicFit fit = fit_parabola_conic(pts);
  CHECK(fit.residual < 1e-10);
  CHECK(std::abs(fit.discriminant) < 1e-8);
}

TEST_CASE("classifier verdicts across the catalog") {
  struct Case {
    const char* spec;
    Decision expected;
  };
  for (const Case& tc : {Case{"parabola(a=1)", Decision::Parabola},
                         Case{"family(a=1,c=0.5)", Decision::Parabola},
                         Case{"family(a=2,c=-1)", Decision::Parabola},
                         Case{"circle(r=1)", Decision::NotParabola},
                         Case{"ellipse(p=2,q=1)", Decision::NotParabola},
                         Case{"expshift", Decision::NotParabola},
                         Case{"piecewise(a=1,b=4)", Decision::NotParabola}}) {
    const Curve c = parse_curve_spec(tc.spec);
    const auto points = default_sample_points(c);
    const auto scales = default_scales(c, points[points.size() / 2]);
    const Verdict v = classify_curve(c, points, scales);
    CHECK(v.decision == tc.expected);
    CHECK(v.ratio_samples > 0);
  }
}

TEST_CASE("point-set classification") {
  const auto par_pts = sample_curve_points(Curve{Parabola{1.0}});
  CHECK(classify_points(par_pts).decision == Decision::Parabola);
  const auto circ_pts = sample_curve_points(Curve{CircleArc{1.0}});
  CHECK(classify_points(circ_pts).decision == Decision::NotParabola);
}

TEST_CASE("ode trajectory stays on the closed form") {
  CHECK(ode_trajectory_max_error(1.0, 1.0, 0.5, 3.0) < 1e-8);
  CHECK(ode_trajectory_max_error(2.0, 1.0, 0.5, 2.0) < 1e-8);
  // Negative c shrinks the domain to x < 1/(4 sqrt(a) |c|).
  CHECK(ode_trajectory_max_error(1.0, -0.5, 0.1, 0.4) < 1e-8);
}

TEST_CASE("to_string covers every decision") {
  CHECK(to_string(Decision::Parabola) == "Parabola");
  CHECK(to_string(Decision::NotParabola) == "NotParabola");
  CHECK(to_string(Decision::Inconclusive) == "Inconclusive");
}
