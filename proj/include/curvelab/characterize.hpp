#ifndef CURVELAB_CHARACTERIZE_HPP
#define CURVELAB_CHARACTERIZE_HPP

#include <array>
#include <string>
#include <vector>

#include "curvelab/curve.hpp"
#include "curvelab/frame.hpp"
#include "curvelab/limits.hpp"

namespace curvelab {

// Implicit conic A x^2 + B xy + C y^2 + D x + E y + F = 0, coefficient
// vector normalized to unit length.
struct ConicFit {
  std::array<double, 6> coeffs{};  // A, B, C, D, E, F
  double residual = 0.0;           // RMS algebraic residual over the input points
  double discriminant = 0.0;       // B^2 - 4AC
};

struct PowerLawFit {
  double lambda = 0.0;  // U = lambda * T^mu
  double mu = 0.0;
  double rms = 0.0;  // fit residual in log-log space
};

struct ClassifyThresholds {
  double tol_ratio = 1e-7;
  double tol_conic = 1e-8;
  double tol_disc = 1e-6;
  double tol_res = 1e-7;
};

enum class Decision { Parabola, NotParabola, Inconclusive };

std::string to_string(Decision d);

// Evidence for the verdict: one entry per channel, each with its threshold.
struct Verdict {
  Decision decision = Decision::Inconclusive;
  double max_ratio_deviation = 0.0;  // max |U_P/T_P - 1/2| over points and scales
  double conic_residual = 0.0;
  double conic_discriminant = 0.0;
  double max_lemma6 = 0.0;
  double max_lemma7 = 0.0;
  double max_ode = 0.0;
  ClassifyThresholds thresholds;
  int ratio_samples = 0;
};

// U_P(h) / T_P(h).
double ratio_lambda(const Frame& frame, double h);

// Least-squares line in (log T_P, log U_P); needs at least 3 valid chords.
PowerLawFit power_law_fit(const Frame& frame, const std::vector<double>& hs);

// Pointwise residuals of the characterizing identities, evaluated from
// frame derivatives at offset t with a = kappa(P)/2:
//   lemma6: f f'^2 - 4a (t f' - f)^2
//   lemma7: 2 f^2 f'' - f'^2 (t f' - f)
//   ode:    f'' - f'^3 / (4 sqrt(a) f^(3/2))
double lemma6_residual(const Frame& frame, double t);
double lemma7_residual(const Frame& frame, double t);
double ode_residual(const Frame& frame, double t);  // throws SingularAtApex if f ~ 0

// Exact coefficients of the parabola conic for the closed-form family:
// a x^2 - 2 sqrt(a) c xy + c^2 y^2 - y = 0, normalized. Discriminant is 0.
ConicFit conic_coefficients(double a, double c);

// Algebraic least-squares conic through >= 6 points (smallest singular
// direction of the design system).
ConicFit fit_parabola_conic(const std::vector<Point2>& points);

// Full classifier over a curve: finite-scale ratio channel (the only
// ratio test that discriminates; the h->0 ratio is 1/2 for every strictly
// convex curve), conic-fit channel, and identity-residual channel.
Verdict classify_curve(const Curve& curve, const std::vector<double>& sample_points,
                       const std::vector<double>& scales,
                       const ClassifyThresholds& thresholds = {});

// Conic-only classification of a raw point set.
Verdict classify_points(const std::vector<Point2>& points,
                        const ClassifyThresholds& thresholds = {});

// Integrates the characterization ODE f'' = f'^3/(4 sqrt(a) f^(3/2)) from
// t0 (away from the apex singularity at f = 0) with closed-form family
// initial data, and reports the max deviation from the closed form on
// [t0, t1].
double ode_trajectory_max_error(double a, double c, double t0, double t1);

// Default classifier inputs derived from the curve's domain.
std::vector<double> default_sample_points(const Curve& curve, int n = 7);
std::vector<double> default_scales(const Curve& curve, double x0);
std::vector<Point2> sample_curve_points(const Curve& curve, int n = 200);

}  // namespace curvelab

#endif
