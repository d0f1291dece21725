#ifndef CURVELAB_ERRORS_HPP
#define CURVELAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvelab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfDomain : Error {
  explicit OutOfDomain(double x)
      : Error("evaluation point " + std::to_string(x) + " outside open domain"), x(x) {}
  double x;
};

struct NonSmoothPoint : Error {
  explicit NonSmoothPoint(double x)
      : Error("curve is not C^2 at x = " + std::to_string(x)), x(x) {}
  double x;
};

struct NonConvexAt : Error {
  explicit NonConvexAt(double x)
      : Error("curvature is not positive at x = " + std::to_string(x)), x(x) {}
  double x;
};

struct OutOfFrameRange : Error {
  explicit OutOfFrameRange(double u)
      : Error("tangential offset " + std::to_string(u) + " leaves the frame's valid range"), u(u) {}
  double u;
};

struct ChordOutOfDomain : Error {
  explicit ChordOutOfDomain(const std::string& side, double h)
      : Error("chord at height " + std::to_string(h) + " exits the domain on the " + side + " side"),
        side(side), h(h) {}
  std::string side;
  double h;
};

struct ParallelLines : Error {
  ParallelLines() : Error("lines are parallel (equal tangent slopes)") {}
};

struct DegenerateSlope : Error {
  explicit DegenerateSlope(double u)
      : Error("tangent slope vanishes at frame offset " + std::to_string(u)), u(u) {}
  double u;
};

struct SingularAtApex : Error {
  SingularAtApex() : Error("characterization ODE is singular where f = 0 (the apex)") {}
};

struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

struct InvalidParameter : Error {
  InvalidParameter(const std::string& name, const std::string& why)
      : Error("invalid parameter '" + name + "': " + why), name(name) {}
  std::string name;
};

struct DomainError : Error {
  explicit DomainError(const std::string& func)
      : Error("domain error in function '" + func + "'"), func(func) {}
  std::string func;
};

struct DegenerateInput : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

}  // namespace curvelab

#endif
