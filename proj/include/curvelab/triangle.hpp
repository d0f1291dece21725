#ifndef CURVELAB_TRIANGLE_HPP
#define CURVELAB_TRIANGLE_HPP

#include "curvelab/curve.hpp"
#include "curvelab/frame.hpp"
#include "curvelab/geometry.hpp"

namespace curvelab {

// Contact points A, A1, A2 with tangent-intersection points B = l1 ^ l2,
// B1 = l ^ l1, B2 = l ^ l2, and the two areas. U is computed by the
// generic three-line construction; U_frame is the closed-form route in
// the canonical frame at A, kept as a cross-check.
struct TrianglePair {
  Point2 A, A1, A2;
  Point2 B, B1, B2;
  double T = 0.0;
  double U = 0.0;
  double U_frame = 0.0;
  int epsilon = +1;
};

// Unsigned shoelace area of the contact triangle.
double contact_triangle_area(Point2 a, Point2 a1, Point2 a2);

// Triangles for an arbitrary triple of contact parameters.
// Throws InvalidParameter on repeated parameters, ParallelLines on equal
// tangent slopes.
TrianglePair tangent_triangle(const Curve& curve, double x_a, double x_1, double x_2);

// Symmetric chord configuration at height h.
double t_p(const Frame& frame, double h);              // h * L_P(h) / 2
double u_p(const Frame& frame, double h);              // generic construction
double u_p_frame_formula(const Frame& frame, double h);  // endpoint-slope formula

// Contact/tangent areas for the triple of frame offsets {0, s, t}.
struct FrameTripleAreas {
  double T;
  double U;
};
FrameTripleAreas frame_triple_areas(const Frame& frame, double s, double t);

}  // namespace curvelab

#endif
