#include "hill4/roots.hpp"

#include <cmath>

#include "hill4/error.hpp"

namespace hill4::roots {

double bisect(const std::function<double(double)>& f, Bracket b, double rel_tol,
              const std::function<double(double)>& df, int newton_steps) {
  double lo = b.lo, hi = b.hi;
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw Error(Errc::no_bracket, "endpoints do not bracket a root");
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= rel_tol * std::fabs(hi)) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  if (df) {
    double fx = f(x);
    for (int k = 0; k < newton_steps && fx != 0.0; ++k) {
      const double slope = df(x);
      if (slope == 0.0 || !std::isfinite(slope)) break;
      const double next = x - fx / slope;
      if (!(next >= lo && next <= hi)) break;
      const double fn = f(next);
      if (std::fabs(fn) > std::fabs(fx)) break;
      x = next;
      fx = fn;
    }
  }
  return x;
}

Bracket widen(const std::function<double(double)>& f, Bracket b, double factor,
              int max_doublings) {
  double flo = f(b.lo), fhi = f(b.hi);
  for (int k = 0; k < max_doublings; ++k) {
    if ((flo > 0.0) != (fhi > 0.0) || flo == 0.0 || fhi == 0.0) return b;
    b.lo /= factor;
    b.hi *= factor;
    flo = f(b.lo);
    fhi = f(b.hi);
  }
  throw Error(Errc::no_bracket, "no sign change found while widening bracket");
}

}  // namespace hill4::roots
