#ifndef CURVELAB_LIMITS_HPP
#define CURVELAB_LIMITS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "curvelab/frame.hpp"
#include "curvelab/triangle.hpp"

namespace curvelab {

// Scale/value samples with an accelerated limit. Samples are sorted by
// decreasing scale. `residual` is the spread of the last entries of the
// chosen extrapolation row.
struct LimitEstimate {
  std::vector<std::pair<double, double>> samples;
  double value = 0.0;
  double residual = 0.0;
  bool converged = false;
};

std::vector<double> h_sequence(double h0, double ratio, int n);

// Iterated Aitken acceleration. The order of convergence is estimated,
// never assumed; on stagnation the last sample is returned with the
// convergence flag cleared only if the raw deltas were not shrinking.
LimitEstimate extrapolate(std::vector<std::pair<double, double>> samples);

// Samples fn(h) over hs and extrapolates.
LimitEstimate limit_of(const std::vector<double>& hs,
                       const std::function<double(double)>& fn);

LimitEstimate chord_limit(const Frame& frame, const std::vector<double>& hs);
LimitEstimate t_limit(const Frame& frame, const std::vector<double>& hs);
LimitEstimate u_limit(const Frame& frame, const std::vector<double>& hs);

// The chord-endpoint slope quantities and their factorization.
struct AlphaDecomposition {
  double alpha;  // sqrt(h)(f'(t)-f'(s)) / (-f'(s)f'(t))
  double beta;   // (f'(t)-f'(s)) / (t-s)
  double gamma;  // -f'(s)f'(t) / (sqrt(h)(t-s))
  double delta;  // f'(s)f'(t) / (st)
  double eta;    // -st / (sqrt(h)(t-s))
};
AlphaDecomposition alpha_decomposition(const Frame& frame, double h);

LimitEstimate alpha_limit(const Frame& frame, const std::vector<double>& hs);
LimitEstimate beta_limit(const Frame& frame, const std::vector<double>& hs);
LimitEstimate gamma_limit(const Frame& frame, const std::vector<double>& hs);
LimitEstimate delta_limit(const Frame& frame, const std::vector<double>& hs);
LimitEstimate eta_limit(const Frame& frame, const std::vector<double>& hs);

// T/U over shrinking asymmetric triples (x0, x0 + scale, x0 - 0.7*scale);
// the asymmetry keeps even curves from passing by symmetry alone.
LimitEstimate ratio_limit_tu(const Curve& curve, double x0,
                             const std::vector<double>& scales);

// Curvature estimators inverted from the chord, T and U asymptotics.
double kappa_from_chord(const Frame& frame, double h);  // 8h / L^2
double kappa_from_t(const Frame& frame, double h);      // 2h^3 / T^2
double kappa_from_u(const Frame& frame, double h);      // h^3 / (2U^2)

// Edge limits of T(s,t) and U(s,t) as s -> 0 and s -> t, each paired with
// its closed-form target evaluated from frame derivatives at t.
struct DegenerateTriangleLimits {
  LimitEstimate t_at_zero;   // T(s,t)/s          -> f(t)/2
  LimitEstimate u_at_zero;   // 2U(s,t)/s         -> 2a (tf'-f)^2 / f'^2
  LimitEstimate t_at_t;      // T(s,t)/(s-t)      -> (f(t)-tf'(t))/2
  LimitEstimate u_at_t;      // 2U(s,t)/(s-t)     -> -f^2 f'' / f'^2
  double t_at_zero_target;
  double u_at_zero_target;
  double t_at_t_target;
  double u_at_t_target;
};
DegenerateTriangleLimits degenerate_triangle_limits(const Frame& frame, double t);

// Default geometric scan for a frame: h0 = 0.25 * probe radius, ratio 1/2,
// 16 steps, floored at 1e-10.
std::vector<double> default_h_sequence(const Frame& frame);

}  // namespace curvelab

#endif
