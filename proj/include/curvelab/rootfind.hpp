#ifndef CURVELAB_ROOTFIND_HPP
#define CURVELAB_ROOTFIND_HPP

#include <cmath>
#include <functional>

#include "curvelab/errors.hpp"

namespace curvelab {

// Bisection on [lo, hi] with f(lo) <= 0 <= f(hi) or the reverse.
// Stops when |f| <= ftol or the bracket collapses to machine width.
template <class F>
double bisect(F&& f, double lo, double hi, double flo, double fhi, double ftol,
              int max_iter = 200) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) return mid;
    const double fm = f(mid);
    if (std::abs(fm) <= ftol) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

// Newton iteration kept inside a bracket [lo, hi] with f(lo) < 0 < f(hi)
// (f increasing); any step that leaves the bracket, or a tiny derivative,
// falls back to bisection. Throws NoConvergence after max_iter iterations.
template <class F, class DF>
double newton_bisection(F&& f, DF&& df, double x, double lo, double hi, double xtol,
                        int max_iter = 200) {
  for (int it = 0; it < max_iter; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (fx < 0.0)
      lo = x;
    else
      hi = x;
    const double d = df(x);
    double next;
    if (d != 0.0) {
      next = x - fx / d;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    } else {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - x) <= xtol || next == x) return next;
    x = next;
  }
  throw NoConvergence("safeguarded Newton did not converge in " + std::to_string(max_iter) +
                      " iterations");
}

}  // namespace curvelab

#endif
