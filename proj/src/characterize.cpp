#include "curvelab/characterize.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>

namespace curvelab {

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Parabola: return "Parabola";
    case Decision::NotParabola: return "NotParabola";
    case Decision::Inconclusive: return "Inconclusive";
  }
  return "?";
}

double ratio_lambda(const Frame& frame, double h) { return u_p(frame, h) / t_p(frame, h); }

PowerLawFit power_law_fit(const Frame& frame, const std::vector<double>& hs) {
  if (hs.size() < 3) throw DegenerateInput("power-law fit needs at least 3 chords");
  std::vector<double> lt, lu;
  for (double h : hs) {
    lt.push_back(std::log(t_p(frame, h)));
    lu.push_back(std::log(u_p(frame, h)));
  }
  const auto n = static_cast<double>(lt.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    sx += lt[i];
    sy += lu[i];
    sxx += lt[i] * lt[i];
    sxy += lt[i] * lu[i];
  }
  const double det = n * sxx - sx * sx;
  if (std::abs(det) < 1e-14 * n * sxx) throw DegenerateInput("chord heights are not distinct");
  PowerLawFit fit;
  fit.mu = (n * sxy - sx * sy) / det;
  const double intercept = (sy - fit.mu * sx) / n;
  fit.lambda = std::exp(intercept);
  double ss = 0;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    const double r = lu[i] - (fit.mu * lt[i] + intercept);
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

namespace {

struct FrameTriple {
  double f, fp, fpp, a;
};

FrameTriple frame_triple(const Frame& frame, double t) {
  return {frame.eval(t), frame.slope(t), frame.second(t), 0.5 * frame.kappa()};
}

}  // namespace

double lemma6_residual(const Frame& frame, double t) {
  const auto [f, fp, fpp, a] = frame_triple(frame, t);
  const double m = t * fp - f;
  return f * fp * fp - 4.0 * a * m * m;
}

double lemma7_residual(const Frame& frame, double t) {
  const auto [f, fp, fpp, a] = frame_triple(frame, t);
  return 2.0 * f * f * fpp - fp * fp * (t * fp - f);
}

double ode_residual(const Frame& frame, double t) {
  const auto [f, fp, fpp, a] = frame_triple(frame, t);
  if (std::abs(f) < 1e-14) throw SingularAtApex{};
  // |f'|^3 keeps the identity odd-symmetric; for t < 0 the signed cube flips
  // the branch of the square root taken when eliminating (t f' - f).
  const double m = std::abs(fp);
  return fpp - m * m * m / (4.0 * std::sqrt(a) * f * std::sqrt(f));
}

ConicFit conic_coefficients(double a, double c) {
  if (!(a > 0.0)) throw InvalidParameter("a", "must be positive");
  ConicFit fit;
  fit.coeffs = {a, -2.0 * std::sqrt(a) * c, c * c, 0.0, -1.0, 0.0};
  double n = 0.0;
  for (double v : fit.coeffs) n += v * v;
  n = std::sqrt(n);
  for (double& v : fit.coeffs) v /= n;
  fit.discriminant =
      fit.coeffs[1] * fit.coeffs[1] - 4.0 * fit.coeffs[0] * fit.coeffs[2];
  fit.residual = 0.0;
  return fit;
}

ConicFit fit_parabola_conic(const std::vector<Point2>& points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n < 6) throw DegenerateInput("conic fit needs at least 6 points");
  Eigen::MatrixXd design(n, 6);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = points[static_cast<std::size_t>(i)].x;
    const double y = points[static_cast<std::size_t>(i)].y;
    design.row(i) << x * x, x * y, y * y, x, y, 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  // One vanishing direction is the conic itself; a second means the input
  // is degenerate (e.g. collinear points).
  if (sigma(4) < 1e-10 * sigma(0)) throw DegenerateInput("degenerate point configuration");
  Eigen::VectorXd v = svd.matrixV().col(5);
  Eigen::Index imax;
  v.cwiseAbs().maxCoeff(&imax);
  if (v(imax) < 0.0) v = -v;
  ConicFit fit;
  for (int i = 0; i < 6; ++i) fit.coeffs[static_cast<std::size_t>(i)] = v(i);
  fit.residual = (design * v).norm() / std::sqrt(static_cast<double>(n));
  fit.discriminant = v(1) * v(1) - 4.0 * v(0) * v(2);
  return fit;
}

std::vector<double> default_sample_points(const Curve& curve, int n) {
  const Interval dom = curve.domain();
  const double lo = std::isfinite(dom.lo) ? dom.lo : -1.5;
  const double hi = std::isfinite(dom.hi) ? dom.hi : 1.5;
  const double margin = 0.2 * (hi - lo);
  std::vector<double> pts;
  for (int i = 0; i < n; ++i) {
    const double f = n == 1 ? 0.5 : static_cast<double>(i) / (n - 1);
    pts.push_back(lo + margin + f * (hi - lo - 2.0 * margin));
  }
  return pts;
}

std::vector<double> default_scales(const Curve& curve, double x0) {
  const Frame frame(curve, x0);
  const double r = 0.8 * frame.probe_radius();
  // Parabolic height estimate at the probe edge; shrink over two decades.
  const double h_max = 0.5 * frame.kappa() * r * r;
  return h_sequence(h_max, 0.5, 8);
}

std::vector<Point2> sample_curve_points(const Curve& curve, int n) {
  const Interval dom = curve.domain();
  const double lo = std::isfinite(dom.lo) ? dom.lo : -1.5;
  const double hi = std::isfinite(dom.hi) ? dom.hi : 1.5;
  const double margin = 0.1 * (hi - lo);
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / (n - 1);
    const double x = lo + margin + f * (hi - lo - 2.0 * margin);
    pts.push_back({x, curve.eval(x)});
  }
  return pts;
}

namespace {

Decision decide(const std::vector<std::pair<double, double>>& channels) {
  // channels: (value, threshold)
  bool all_below = true;
  for (const auto& [value, tol] : channels) {
    if (value > 10.0 * tol) return Decision::NotParabola;
    all_below = all_below && value <= tol;
  }
  return all_below ? Decision::Parabola : Decision::Inconclusive;
}

}  // namespace

Verdict classify_curve(const Curve& curve, const std::vector<double>& sample_points,
                       const std::vector<double>& scales,
                       const ClassifyThresholds& thresholds) {
  if (sample_points.empty()) throw DegenerateInput("no sample points");
  if (scales.size() < 2) throw DegenerateInput("need at least 2 scales");
  const auto [min_it, max_it] = std::minmax_element(scales.begin(), scales.end());
  if (*max_it < 99.0 * *min_it)
    throw InvalidParameter("scales", "must span at least two decades");

  Verdict verdict;
  verdict.thresholds = thresholds;

  for (double x0 : sample_points) {
    const Frame frame(curve, x0);
    for (double h : scales) {
      try {
        const double dev = std::abs(ratio_lambda(frame, h) - 0.5);
        verdict.max_ratio_deviation = std::max(verdict.max_ratio_deviation, dev);
        ++verdict.ratio_samples;
      } catch (const ChordOutOfDomain&) {
        // Too large for this point; smaller scales still contribute.
      } catch (const DegenerateSlope&) {
      }
    }

    for (double sign : {-1.0, 1.0}) {
      for (double frac : {0.25, 0.5}) {
        const double t = sign * frac * frame.probe_radius();
        try {
          verdict.max_lemma6 =
              std::max(verdict.max_lemma6, std::abs(lemma6_residual(frame, t)));
          verdict.max_lemma7 =
              std::max(verdict.max_lemma7, std::abs(lemma7_residual(frame, t)));
          verdict.max_ode = std::max(verdict.max_ode, std::abs(ode_residual(frame, t)));
        } catch (const OutOfFrameRange&) {
        } catch (const DegenerateSlope&) {
        } catch (const SingularAtApex&) {
        }
      }
    }
  }

  const ConicFit conic = fit_parabola_conic(sample_curve_points(curve));
  verdict.conic_residual = conic.residual;
  verdict.conic_discriminant = conic.discriminant;

  if (verdict.ratio_samples == 0) {
    verdict.decision = Decision::Inconclusive;
    return verdict;
  }

  verdict.decision = decide({{verdict.max_ratio_deviation, thresholds.tol_ratio},
                             {verdict.conic_residual, thresholds.tol_conic},
                             {std::abs(verdict.conic_discriminant), thresholds.tol_disc},
                             {verdict.max_lemma6, thresholds.tol_res},
                             {verdict.max_lemma7, thresholds.tol_res},
                             {verdict.max_ode, thresholds.tol_res}});
  return verdict;
}

Verdict classify_points(const std::vector<Point2>& points,
                        const ClassifyThresholds& thresholds) {
  Verdict verdict;
  verdict.thresholds = thresholds;
  const ConicFit conic = fit_parabola_conic(points);
  verdict.conic_residual = conic.residual;
  verdict.conic_discriminant = conic.discriminant;
  verdict.decision = decide({{verdict.conic_residual, thresholds.tol_conic},
                             {std::abs(verdict.conic_discriminant), thresholds.tol_disc}});
  return verdict;
}

double ode_trajectory_max_error(double a, double c, double t0, double t1) {
  namespace odeint = boost::numeric::odeint;
  const Curve closed = family_curve(a, c);
  const double sqrt_a = std::sqrt(a);

  using State = std::array<double, 2>;
  auto rhs = [sqrt_a](const State& y, State& dydt, double) {
    dydt[0] = y[1];
    dydt[1] = y[1] * y[1] * y[1] / (4.0 * sqrt_a * y[0] * std::sqrt(y[0]));
  };

  State y{closed.eval(t0), closed.slope(t0)};
  double max_err = 0.0;
  auto observer = [&](const State& state, double t) {
    max_err = std::max(max_err, std::abs(state[0] - closed.eval(t)));
  };

  auto stepper = odeint::make_controlled(1e-12, 1e-12,
                                         odeint::runge_kutta_dopri5<State>());
  odeint::integrate_const(stepper, rhs, y, t0, t1, 0.01, observer);
  return max_err;
}

}  // namespace curvelab
