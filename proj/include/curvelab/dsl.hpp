#ifndef CURVELAB_DSL_HPP
#define CURVELAB_DSL_HPP

#include <string>

#include "curvelab/curve.hpp"

namespace curvelab {

// Parses a curve-spec string such as
//   parabola(a=1)  family(a=1,c=0.5)  circle(r=2)  ellipse(p=2,q=1)
//   piecewise(a=1,b=4)  expshift  expr(x^2 + 0.1*x^4)
// Throws SyntaxError (with byte offset) or InvalidParameter.
Curve parse_curve_spec(const std::string& text);

// Canonical spelling; parse_curve_spec(format_curve_spec(c)) reproduces c.
std::string format_curve_spec(const Curve& curve);

}  // namespace curvelab

#endif
