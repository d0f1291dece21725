#include "curvelab/frame.hpp"

#include <algorithm>
#include <cmath>

#include "curvelab/rootfind.hpp"

namespace curvelab {

namespace {
constexpr double kDefaultProbeCap = 1.0;
}

Frame::Frame(Curve curve, double x0) : curve_(std::move(curve)), x0_(x0) {
  if (!curve_.domain().contains(x0)) throw OutOfDomain(x0);
  f0_ = curve_.eval(x0);
  d0_ = curve_.slope(x0);
  const double d2 = curve_.second_derivative(x0);
  if (!(d2 > 0.0)) throw NonConvexAt(x0);
  norm_ = std::sqrt(1.0 + d0_ * d0_);
  kappa_ = d2 / (norm_ * norm_ * norm_);
  base_ = {x0_, f0_};
  tangent_ = {1.0 / norm_, d0_ / norm_};
  normal_ = {-d0_ / norm_, 1.0 / norm_};
  axis_aligned_ = d0_ == 0.0;
  const double left = x0_ - curve_.domain().lo;
  const double right = curve_.domain().hi - x0_;
  probe_radius_ = std::min({0.5 * left, 0.5 * right, kDefaultProbeCap});
}

double Frame::u_of_x(double x) const {
  return ((x - x0_) + (curve_.eval(x) - f0_) * d0_) / norm_;
}

double Frame::v_of_x(double x) const {
  return ((curve_.eval(x) - f0_) - (x - x0_) * d0_) / norm_;
}

double Frame::slope_of_x(double x) const {
  const double d = curve_.slope(x);
  return (d - d0_) / (1.0 + d * d0_);
}

double Frame::x_of_u(double u) const {
  if (axis_aligned_) {
    const double x = x0_ + u;
    if (!curve_.domain().contains(x)) throw OutOfFrameRange(u);
    return x;
  }
  if (u == 0.0) return x0_;

  // du/dx = (1 + f'(x) d0)/norm; positive in the monotone neighborhood.
  auto deriv = [&](double x) { return (1.0 + curve_.slope(x) * d0_) / norm_; };
  auto value = [&](double x) {
    if (!curve_.domain().contains(x)) throw OutOfFrameRange(u);
    if (deriv(x) <= 0.0) throw OutOfFrameRange(u);
    return u_of_x(x) - u;
  };

  // Bracket: expand from the tangent-line prediction until the sign flips.
  // Probes that leave the domain or the monotone neighborhood shrink back
  // toward the bracket instead of failing outright.
  double step = u / norm_;
  double lo = x0_, hi = x0_ + step;
  double flo = -u, fhi = 0.0;
  for (int guard = 0;; ++guard) {
    if (guard > 200) throw OutOfFrameRange(u);
    bool feasible = true;
    try {
      fhi = value(hi);
    } catch (const OutOfFrameRange&) {
      feasible = false;
    }
    if (!feasible) {
      hi = 0.5 * (lo + hi);
      if (std::abs(hi - lo) <= 1e-14 * std::max(1.0, std::abs(hi))) throw OutOfFrameRange(u);
      continue;
    }
    if ((u > 0.0 && fhi >= 0.0) || (u < 0.0 && fhi <= 0.0)) break;
    lo = hi;
    flo = fhi;
    step *= 2.0;
    hi = x0_ + step;
  }
  if (lo > hi) {
    std::swap(lo, hi);
    std::swap(flo, fhi);
  }
  auto g = [&](double x) { return u_of_x(x) - u; };
  const double xtol = 1e-15 * std::max(1.0, std::abs(x0_) + std::abs(u));
  return newton_bisection(g, deriv, 0.5 * (lo + hi), lo, hi, xtol);
}

double Frame::eval(double u) const { return v_of_x(x_of_u(u)); }

double Frame::slope(double u) const {
  const double d = curve_.slope(x_of_u(u));
  return (d - d0_) / (1.0 + d * d0_);
}

double Frame::second(double u) const {
  const double x = x_of_u(u);
  const double d = curve_.slope(x);
  const double w = 1.0 + d * d0_;
  return curve_.second_derivative(x) * (norm_ * norm_ * norm_) / (w * w * w);
}

namespace {

// Solve v_of_x(x) = h for the curve parameter x on one side of P. The
// height above the tangent line is strictly monotone in x on each side,
// even where the curve is no longer a graph over the u-axis, so the
// bisection works all the way to the domain boundary.
double solve_side_x(const Frame& frame, double h, double sign, const char* side) {
  const Curve& curve = frame.curve();
  auto value = [&](double x) {
    if (!curve.domain().contains(x)) throw OutOfDomain(x);
    return frame.v_of_x(x) - h;
  };
  const double norm = std::hypot(1.0, curve.slope(frame.x0()));
  // Expand geometrically from the parabolic prediction; an evaluation that
  // leaves the domain pulls the far end back toward the bracket instead of
  // failing, so heights close to the reachable maximum still resolve.
  double step = sign * std::sqrt(2.0 * h / frame.kappa()) / norm;
  double lo = frame.x0(), flo = -h;
  double hi = frame.x0() + step;
  double fhi = 0.0;
  for (int guard = 0;; ++guard) {
    if (guard > 200) throw ChordOutOfDomain(side, h);
    bool feasible = true;
    try {
      fhi = value(hi);
    } catch (const OutOfDomain&) {
      feasible = false;
    }
    if (!feasible) {
      hi = 0.5 * (lo + hi);
      if (std::abs(hi - lo) <= 1e-12 * std::max(1.0, std::abs(hi)))
        throw ChordOutOfDomain(side, h);
      continue;
    }
    if (fhi >= 0.0) break;
    lo = hi;
    flo = fhi;
    step *= 2.0;
    hi = frame.x0() + step;
  }
  if (lo > hi) {
    std::swap(lo, hi);
    std::swap(flo, fhi);
  }
  // Bisect to bracket collapse; well inside the 1e-13*max(1,h) contract.
  return bisect(value, lo, hi, flo, fhi, 0.0);
}

}  // namespace

Chord chord_endpoints(const Frame& frame, double h) {
  if (!(h > 0.0)) throw InvalidParameter("h", "chord height must be positive");
  Chord c;
  c.h = h;
  c.xt = solve_side_x(frame, h, +1.0, "right");
  c.xs = solve_side_x(frame, h, -1.0, "left");
  c.t = frame.u_of_x(c.xt);
  c.s = frame.u_of_x(c.xs);
  return c;
}

double chord_length(const Frame& frame, double h) { return chord_endpoints(frame, h).length(); }

}  // namespace curvelab
