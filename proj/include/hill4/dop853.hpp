#pragma once

#include <functional>
#include <vector>

#include "hill4/vec.hpp"

namespace hill4 {

// Dormand-Prince 8(5,3) with the 7th-order continuous extension. Fixed
// dimension 6. Step control is a PI controller on the blended 5th/3rd order
// error estimate:
//   fac = err^(1/8 - 0.2 beta) * err_prev^(-beta), beta = 0.04,
//   h_new = h / clamp(fac / 0.9, 1/6, 3)
// and the first step comes from the usual f / f' curvature estimate.
class Dop853 {
 public:
  using Rhs = std::function<State6(double, const State6&)>;

  struct Options {
    double rel_tol = 1e-12;
    double abs_tol = 1e-12;
    double h_max = 0.0;          // 0 means |t1 - t0|
    long max_steps = 10'000'000;
    // Distance to the nearest singularity; integration stops with
    // Error(singularity_approach) once it drops below guard_min.
    std::function<double(const State6&)> guard;
    double guard_min = 1e-9;
  };

  struct Result {
    std::vector<double> times;   // t0 first, then samples, t1 last
    std::vector<State6> states;
    long accepted = 0;
    long rejected = 0;
    long evaluations = 0;
  };

  Dop853(Rhs rhs, Options opts);

  // Integrates from t0 to t1 (either direction). If `samples` is empty every
  // accepted step is recorded; otherwise the dense output is evaluated at each
  // requested time, which must lie in [t0, t1] in integration order.
  Result solve(double t0, const State6& y0, double t1, const std::vector<double>& samples = {});

 private:
  Rhs rhs_;
  Options opt_;
};

}  // namespace hill4
