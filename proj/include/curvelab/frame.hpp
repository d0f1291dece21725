#ifndef CURVELAB_FRAME_HPP
#define CURVELAB_FRAME_HPP

#include "curvelab/curve.hpp"
#include "curvelab/geometry.hpp"

namespace curvelab {

// Canonical coordinates at a base point P: P at the origin, tangent along
// the u-axis, convex side up. In these coordinates the curve is again a
// graph v = f(u) with f(0) = f'(0) = 0 and f''(0) = kappa(P).
class Frame {
 public:
  Frame(Curve curve, double x0);  // throws NonConvexAt, OutOfDomain

  double eval(double u) const;    // height above the tangent line
  double slope(double u) const;
  double second(double u) const;

  double kappa() const { return kappa_; }
  Point2 base() const { return base_; }
  Point2 tangent() const { return tangent_; }
  Point2 normal() const { return normal_; }
  const Curve& curve() const { return curve_; }
  double x0() const { return x0_; }

  double probe_radius() const { return probe_radius_; }
  void set_probe_radius(double r) { probe_radius_ = r; }

  // Forward maps from a curve parameter x to frame coordinates.
  double u_of_x(double x) const;
  double v_of_x(double x) const;
  // Frame slope of the curve at parameter x (tangent addition formula).
  double slope_of_x(double x) const;
  // Monotone inversion u -> x (safeguarded Newton with bisection fallback).
  // Throws OutOfFrameRange when the inversion leaves the curve domain or
  // the monotone neighborhood of P.
  double x_of_u(double u) const;

  Point2 to_world(double u, double v) const {
    return base_ + u * tangent_ + v * normal_;
  }

 private:
  Curve curve_;
  double x0_;
  double f0_;
  double d0_;      // slope at x0
  double norm_;    // sqrt(1 + d0^2)
  double kappa_;   // curvature at P (one-sided at a non-C2 base point)
  Point2 base_, tangent_, normal_;
  bool axis_aligned_;
  double probe_radius_;
};

inline Frame canonical_frame(const Curve& curve, double x0) { return Frame(curve, x0); }

struct Chord {
  double h;
  double s;   // left endpoint offset, s < 0
  double t;   // right endpoint offset, t > 0
  double xs;  // curve parameters of the endpoints
  double xt;
  double length() const { return t - s; }
};

// Endpoints of the chord cut at height h above the tangent, solved by
// bracketed bisection on each side of P.
Chord chord_endpoints(const Frame& frame, double h);
double chord_length(const Frame& frame, double h);

}  // namespace curvelab

#endif
