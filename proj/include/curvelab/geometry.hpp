#ifndef CURVELAB_GEOMETRY_HPP
#define CURVELAB_GEOMETRY_HPP

#include <cmath>

#include "curvelab/errors.hpp"

namespace curvelab {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

// Line p*x + q*y = r with p^2 + q^2 = 1.
struct Line {
  double p = 0.0;
  double q = 1.0;
  double r = 0.0;

  // Line through `pt` with direction `dir` (not necessarily unit).
  static Line through(Point2 pt, Point2 dir) {
    const double n = std::hypot(dir.x, dir.y);
    Line l;
    l.p = -dir.y / n;
    l.q = dir.x / n;
    l.r = l.p * pt.x + l.q * pt.y;
    return l;
  }

  double residual(Point2 pt) const { return p * pt.x + q * pt.y - r; }
};

inline Point2 line_intersection(const Line& l1, const Line& l2) {
  const double det = l1.p * l2.q - l2.p * l1.q;
  if (std::abs(det) < 1e-12) throw ParallelLines{};
  return {(l1.r * l2.q - l2.r * l1.q) / det, (l1.p * l2.r - l2.p * l1.r) / det};
}

// Unsigned shoelace area. Translated to the first vertex so that tiny
// triangles far from the origin do not lose precision to cancellation.
inline double triangle_area(Point2 a, Point2 b, Point2 c) {
  return 0.5 * std::abs(cross(b - a, c - a));
}

inline double signed_triangle_area(Point2 a, Point2 b, Point2 c) {
  return 0.5 * cross(b - a, c - a);
}

}  // namespace curvelab

#endif
