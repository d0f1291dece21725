#include "curvelab/triangle.hpp"

#include <cmath>

namespace curvelab {

double contact_triangle_area(Point2 a, Point2 a1, Point2 a2) {
  return triangle_area(a, a1, a2);
}

TrianglePair tangent_triangle(const Curve& curve, double x_a, double x_1, double x_2) {
  if (x_a == x_1 || x_a == x_2 || x_1 == x_2)
    throw InvalidParameter("x", "contact parameters must be pairwise distinct");

  const double fa = curve.eval(x_a), f1 = curve.eval(x_1), f2 = curve.eval(x_2);
  const double da = curve.slope(x_a), d1 = curve.slope(x_1), d2 = curve.slope(x_2);

  // Work in coordinates centered at A; tiny triangles keep full precision.
  const Point2 A{x_a, fa};
  const Point2 P1{x_1 - x_a, f1 - fa};
  const Point2 P2{x_2 - x_a, f2 - fa};
  const Line l = Line::through({0.0, 0.0}, {1.0, da});
  const Line l1 = Line::through(P1, {1.0, d1});
  const Line l2 = Line::through(P2, {1.0, d2});

  TrianglePair out;
  const Point2 b = line_intersection(l1, l2);
  const Point2 b1 = line_intersection(l, l1);
  const Point2 b2 = line_intersection(l, l2);
  out.A = A;
  out.A1 = A + P1;
  out.A2 = A + P2;
  out.B = A + b;
  out.B1 = A + b1;
  out.B2 = A + b2;
  out.T = triangle_area({0.0, 0.0}, P1, P2);
  out.U = triangle_area(b, b1, b2);

  // Closed-form route in the canonical frame at A.
  const Frame frame(curve, x_a);
  const double s = frame.u_of_x(x_1), t = frame.u_of_x(x_2);
  const double fs = frame.v_of_x(x_1), ft = frame.v_of_x(x_2);
  const double ds = (d1 - da) / (1.0 + d1 * da);
  const double dt = (d2 - da) / (1.0 + d2 * da);
  if (std::abs(ds) < 1e-14 || std::abs(dt) < 1e-14 || std::abs(dt - ds) < 1e-12)
    throw DegenerateSlope(std::abs(ds) < 1e-14 ? s : t);
  const double num = (t - s) * dt * ds + fs * dt - ds * ft;
  out.U_frame = 0.5 * std::abs(num * num / (ds * dt * (dt - ds)));

  if (0.0 < s && s < t)
    out.epsilon = +1;
  else if (t < s && s < 0.0)
    out.epsilon = -1;
  else
    out.epsilon = (s * ft - t * fs) >= 0.0 ? +1 : -1;
  return out;
}

double t_p(const Frame& frame, double h) { return 0.5 * h * chord_length(frame, h); }

namespace {

struct ChordSlopes {
  Chord chord;
  double ds, dt;  // frame slopes at the endpoints, ds < 0 < dt
};

ChordSlopes chord_with_slopes(const Frame& frame, double h) {
  ChordSlopes c{chord_endpoints(frame, h), 0.0, 0.0};
  c.ds = frame.slope_of_x(c.chord.xs);
  c.dt = frame.slope_of_x(c.chord.xt);
  if (std::abs(c.ds) < 1e-14) throw DegenerateSlope(c.chord.s);
  if (std::abs(c.dt) < 1e-14) throw DegenerateSlope(c.chord.t);
  return c;
}

// Endpoint tangent direction rotated into the frame; well-defined even
// where the tangent has turned past vertical in frame coordinates.
Point2 frame_tangent_dir(const Frame& frame, double x) {
  const double d = frame.curve().slope(x);
  const double d0 = frame.curve().slope(frame.x0());
  return {1.0 + d * d0, d - d0};
}

}  // namespace

double u_p(const Frame& frame, double h) {
  const Chord chord = chord_endpoints(frame, h);
  const Line ell{0.0, 1.0, 0.0};  // the tangent at P: v = 0
  const Line l1 = Line::through({chord.s, h}, frame_tangent_dir(frame, chord.xs));
  const Line l2 = Line::through({chord.t, h}, frame_tangent_dir(frame, chord.xt));
  const Point2 b = line_intersection(l1, l2);
  const Point2 b1 = line_intersection(ell, l1);
  const Point2 b2 = line_intersection(ell, l2);
  return triangle_area(b, b1, b2);
}

double u_p_frame_formula(const Frame& frame, double h) {
  const auto [chord, ds, dt] = chord_with_slopes(frame, h);
  const double L = chord.length();
  const double two_u =
      h * h * (dt - ds) / (-ds * dt) - 2.0 * h * L + (-ds * dt / (dt - ds)) * L * L;
  return 0.5 * two_u;
}

FrameTripleAreas frame_triple_areas(const Frame& frame, double s, double t) {
  if (s == 0.0 || t == 0.0 || s == t)
    throw InvalidParameter("s", "frame offsets must be distinct and nonzero");
  const double fs = frame.eval(s), ft = frame.eval(t);
  const double ds = frame.slope(s), dt = frame.slope(t);
  const Line ell{0.0, 1.0, 0.0};
  const Line l1 = Line::through({s, fs}, {1.0, ds});
  const Line l2 = Line::through({t, ft}, {1.0, dt});
  const Point2 b = line_intersection(l1, l2);
  const Point2 b1 = line_intersection(ell, l1);
  const Point2 b2 = line_intersection(ell, l2);
  return {triangle_area({0.0, 0.0}, {s, fs}, {t, ft}), triangle_area(b, b1, b2)};
}

}  // namespace curvelab
