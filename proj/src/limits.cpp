#include "curvelab/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvelab {

std::vector<double> h_sequence(double h0, double ratio, int n) {
  if (!(h0 > 0.0)) throw InvalidParameter("h0", "must be positive");
  if (!(ratio > 0.0 && ratio < 1.0)) throw InvalidParameter("ratio", "must be in (0,1)");
  if (n < 1) throw InvalidParameter("n", "must be at least 1");
  std::vector<double> hs(n);
  double h = h0;
  for (int k = 0; k < n; ++k, h *= ratio) hs[k] = h;
  return hs;
}

std::vector<double> default_h_sequence(const Frame& frame) {
  std::vector<double> hs = h_sequence(0.25 * frame.probe_radius(), 0.5, 16);
  std::erase_if(hs, [](double h) { return h < 1e-10; });
  return hs;
}

LimitEstimate extrapolate(std::vector<std::pair<double, double>> samples) {
  if (samples.empty()) throw DegenerateInput("no samples to extrapolate");
  std::sort(samples.begin(), samples.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  LimitEstimate est;
  est.samples = samples;

  std::vector<double> row;
  row.reserve(samples.size());
  for (const auto& [h, v] : samples) row.push_back(v);

  auto spread = [](const std::vector<double>& r) {
    if (r.size() < 2) return std::numeric_limits<double>::infinity();
    return std::abs(r.back() - r[r.size() - 2]);
  };

  est.value = row.back();
  est.residual = row.size() >= 2 ? spread(row) : 0.0;

  // Raw deltas shrinking (or an exactly constant tail) counts as converged
  // even if acceleration stalls.
  bool shrinking = false;
  if (row.size() >= 3) {
    const double d1 = std::abs(row[row.size() - 1] - row[row.size() - 2]);
    const double d2 = std::abs(row[row.size() - 2] - row[row.size() - 3]);
    shrinking = d1 <= 1.05 * d2;
  }

  // Iterated Aitken; keep the row with the quietest tail.
  double best_spread = spread(row);
  for (int pass = 0; pass < 4 && row.size() >= 3; ++pass) {
    std::vector<double> next;
    next.reserve(row.size() - 2);
    for (std::size_t k = 0; k + 2 < row.size(); ++k) {
      const double a = row[k], b = row[k + 1], c = row[k + 2];
      const double dd = c - 2.0 * b + a;
      double acc = c;
      if (std::abs(dd) > 1e-14 * (std::abs(a) + std::abs(b) + std::abs(c))) {
        const double cand = c - (c - b) * (c - b) / dd;
        if (std::isfinite(cand)) acc = cand;
      }
      next.push_back(acc);
    }
    row = std::move(next);
    const double s = spread(row);
    if (s < best_spread) {
      best_spread = s;
      est.value = row.back();
      est.residual = s;
    }
  }

  est.converged = shrinking || est.residual <= 1e-9 * std::max(1.0, std::abs(est.value));
  return est;
}

LimitEstimate limit_of(const std::vector<double>& hs,
                       const std::function<double(double)>& fn) {
  std::vector<std::pair<double, double>> samples;
  samples.reserve(hs.size());
  for (double h : hs) samples.emplace_back(h, fn(h));
  return extrapolate(std::move(samples));
}

LimitEstimate chord_limit(const Frame& frame, const std::vector<double>& hs) {
  return limit_of(hs, [&](double h) { return chord_length(frame, h) / std::sqrt(h); });
}

LimitEstimate t_limit(const Frame& frame, const std::vector<double>& hs) {
  return limit_of(hs, [&](double h) { return t_p(frame, h) / (h * std::sqrt(h)); });
}

LimitEstimate u_limit(const Frame& frame, const std::vector<double>& hs) {
  return limit_of(hs, [&](double h) { return u_p(frame, h) / (h * std::sqrt(h)); });
}

AlphaDecomposition alpha_decomposition(const Frame& frame, double h) {
  const Chord c = chord_endpoints(frame, h);
  const double ds = frame.slope_of_x(c.xs);
  const double dt = frame.slope_of_x(c.xt);
  if (std::abs(ds) < 1e-14) throw DegenerateSlope(c.s);
  if (std::abs(dt) < 1e-14) throw DegenerateSlope(c.t);
  const double sh = std::sqrt(h);
  const double L = c.length();
  AlphaDecomposition d;
  d.alpha = sh * (dt - ds) / (-ds * dt);
  d.beta = (dt - ds) / L;
  d.gamma = -ds * dt / (sh * L);
  d.delta = ds * dt / (c.s * c.t);
  d.eta = -c.s * c.t / (sh * L);
  return d;
}

LimitEstimate alpha_limit(const Frame& frame, const std::vector<double>& hs) {
  return limit_of(hs, [&](double h) { return alpha_decomposition(frame, h).alpha; });
}
LimitEstimate beta_limit(const Frame& frame, const std::vector<double>& hs) {
  return limit_of(hs, [&](double h) { return alpha_decomposition(frame, h).beta; });
}
LimitEstimate gamma_limit(const Frame& frame, const std::vector<double>& hs) {
  return limit_of(hs, [&](double h) { return alpha_decomposition(frame, h).gamma; });
}
LimitEstimate delta_limit(const Frame& frame, const std::vector<double>& hs) {
  return limit_of(hs, [&](double h) { return alpha_decomposition(frame, h).delta; });
}
LimitEstimate eta_limit(const Frame& frame, const std::vector<double>& hs) {
  return limit_of(hs, [&](double h) { return alpha_decomposition(frame, h).eta; });
}

LimitEstimate ratio_limit_tu(const Curve& curve, double x0,
                             const std::vector<double>& scales) {
  return limit_of(scales, [&](double scale) {
    const TrianglePair tri = tangent_triangle(curve, x0, x0 + scale, x0 - 0.7 * scale);
    return tri.T / tri.U;
  });
}

double kappa_from_chord(const Frame& frame, double h) {
  const double L = chord_length(frame, h);
  return 8.0 * h / (L * L);
}

double kappa_from_t(const Frame& frame, double h) {
  const double T = t_p(frame, h);
  return 2.0 * h * h * h / (T * T);
}

double kappa_from_u(const Frame& frame, double h) {
  const double U = u_p(frame, h);
  return h * h * h / (2.0 * U * U);
}

DegenerateTriangleLimits degenerate_triangle_limits(const Frame& frame, double t) {
  const double f = frame.eval(t);
  const double fp = frame.slope(t);
  const double fpp = frame.second(t);
  if (std::abs(fp) < 1e-14) throw DegenerateSlope(t);
  const double a = 0.5 * frame.kappa();

  DegenerateTriangleLimits out;
  out.t_at_zero_target = 0.5 * f;
  out.u_at_zero_target = 2.0 * a * (t * fp - f) * (t * fp - f) / (fp * fp);
  out.t_at_t_target = 0.5 * (f - t * fp);
  out.u_at_t_target = -f * f * fpp / (fp * fp);

  // s -> 0 along s_k = (t/8) 2^-k, s -> t along t -+ d with the same decay;
  // both keep the ordering 0 < s < t (eps = +1) or t < s < 0 (eps = -1).
  const double eps = t > 0.0 ? +1.0 : -1.0;
  std::vector<std::pair<double, double>> t0, u0, tt, ut;
  double d = std::abs(t) / 8.0;
  for (int k = 0; k < 15; ++k, d *= 0.5) {
    {
      const double s = std::copysign(d, t);
      const auto areas = frame_triple_areas(frame, s, t);
      t0.emplace_back(d, eps * areas.T / s);
      u0.emplace_back(d, eps * 2.0 * areas.U / s);
    }
    {
      const double s = t - std::copysign(d, t);
      const auto areas = frame_triple_areas(frame, s, t);
      tt.emplace_back(d, eps * areas.T / (s - t));
      ut.emplace_back(d, eps * 2.0 * areas.U / (s - t));
    }
  }
  out.t_at_zero = extrapolate(std::move(t0));
  out.u_at_zero = extrapolate(std::move(u0));
  out.t_at_t = extrapolate(std::move(tt));
  out.u_at_t = extrapolate(std::move(ut));
  return out;
}

}  // namespace curvelab
