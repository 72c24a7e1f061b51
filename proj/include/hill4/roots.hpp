#pragma once

#include <functional>

namespace hill4::roots {

struct Bracket {
  double lo;
  double hi;
};

// Bisection on a sign-changing bracket down to rel_tol * |hi|, then up to
// `newton_steps` Newton corrections when a derivative is supplied (a step is
// only kept if it stays inside the final bracket and lowers |f|).
double bisect(const std::function<double(double)>& f, Bracket b, double rel_tol = 1e-15,
              const std::function<double(double)>& df = nullptr, int newton_steps = 2);

// Grows [lo, hi] geometrically about its ends until f changes sign.
// Throws Error(no_bracket) after max_doublings attempts.
Bracket widen(const std::function<double(double)>& f, Bracket b, double factor = 2.0,
              int max_doublings = 200);

}  // namespace hill4::roots
