#include "hill4/propagate.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "hill4/central_config.hpp"
#include "hill4/dop853.hpp"
#include "hill4/error.hpp"
#include "hill4/four_body.hpp"
#include "hill4/hill_model.hpp"

namespace hill4 {

std::string_view model_name(Model m) noexcept { return m == Model::hill ? "hill" : "4bp"; }

namespace {

void check_tolerances(const IntegrateOptions& o) {
  auto ok = [](double x) { return x >= 1e-14 && x <= 1e-3; };
  if (!ok(o.rel_tol) || !ok(o.abs_tol)) {
    throw Error(Errc::invalid_argument, "tolerances must lie in [1e-14, 1e-3]");
  }
}

template <class Energy>
Trajectory assemble(const Dop853::Result& r, Model model, Frame frame, Representation rep,
                    Energy&& energy) {
  Trajectory tr;
  tr.model = model;
  tr.frame = frame;
  tr.times = r.times;
  tr.steps = r.accepted;
  tr.rejected = r.rejected;
  tr.states.reserve(r.states.size());
  tr.energy.reserve(r.states.size());
  for (const auto& s : r.states) {
    tr.states.push_back(PhaseState::unpack(frame, rep, s));
    tr.energy.push_back(energy(s));
  }
  for (double e : tr.energy) tr.max_energy_drift = std::max(tr.max_energy_drift, std::fabs(e - tr.energy[0]));
  return tr;
}

}  // namespace

Trajectory integrate_hill(const PhaseState& initial, double t0, double t1,
                          const IntegrateOptions& opts, double lambda1, double lambda2, double c) {
  check_tolerances(opts);
  require(initial, Frame::hill_rotated, Representation::velocity, "integrate --model hill");
  Dop853::Options o;
  o.rel_tol = opts.rel_tol;
  o.abs_tol = opts.abs_tol;
  o.guard_min = opts.guard_min;
  o.guard = [](const State6& s) { return norm({s[0], s[1], s[2]}); };
  Dop853 solver([&](double, const State6& s) { return hill::eom(s, lambda1, lambda2, c); }, o);
  const auto r = solver.solve(t0, initial.packed(), t1, opts.sample_times);
  return assemble(r, Model::hill, Frame::hill_rotated, Representation::velocity,
                  [&](const State6& s) { return hill::energy(s, lambda1, lambda2, c); });
}

Trajectory integrate(const PhaseState& initial, double t0, double t1,
                     const IntegrateOptions& opts, Model model, const SystemParams& params) {
  if (model == Model::hill) {
    return integrate_hill(initial, t0, t1, opts, params.lambda1, params.lambda2, params.little_c);
  }
  check_tolerances(opts);
  if (initial.frame != Frame::synodic_4bp) {
    throw Error(Errc::frame_mismatch, "integrate --model 4bp expects a synodic-4bp state, got " +
                                          std::string(frame_name(initial.frame)));
  }
  const FourBodyModel fb(params, cc::build_triangle(params));
  const bool velocity = initial.rep == Representation::velocity;
  Dop853::Options o;
  o.rel_tol = opts.rel_tol;
  o.abs_tol = opts.abs_tol;
  o.guard_min = opts.guard_min;
  o.guard = [&](const State6& s) { return fb.min_body_distance({s[0], s[1], s[2]}); };
  Dop853 solver(
      [&](double, const State6& s) { return velocity ? fb.eom_velocity(s) : fb.eom_canonical(s); },
      o);
  const auto r = solver.solve(t0, initial.packed(), t1, opts.sample_times);
  return assemble(r, Model::four_body, Frame::synodic_4bp, initial.rep, [&](const State6& s) {
    return velocity ? fb.energy(s) : fb.hamiltonian(s);
  });
}

MonodromyReport monodromy_step(const Vec3& location, const State6& displacement, double tau,
                               double lambda1, double lambda2, double c) {
  MonodromyReport rep;
  double size = 0.0;
  for (double d : displacement) size = std::max(size, std::fabs(d));
  if (size == 0.0) return rep;

  using Mat6 = Eigen::Matrix<double, 6, 6>;
  using Vec6 = Eigen::Matrix<double, 6, 1>;
  const Mat3 h = hill::hessian(location, lambda1, lambda2, c);
  Mat6 j = Mat6::Zero();
  j.topRightCorner<3, 3>().setIdentity();
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 3; ++k) j(3 + r, k) = h[r][k];
  j(3, 4) = 2.0;
  j(4, 3) = -2.0;
  const Vec6 d0 = Eigen::Map<const Vec6>(displacement.data());
  const Mat6 flow = (j * tau).exp();
  const Vec6 lin = flow * d0;

  // Displacement form keeps the equilibrium's O(1) state out of the error
  // control, so tolerances act on the small quantity itself.
  const State6 base{location[0], location[1], location[2], 0.0, 0.0, 0.0};
  const State6 f0 = hill::eom(base, lambda1, lambda2, c);
  Dop853::Options o;
  o.rel_tol = 1e-12;
  o.abs_tol = 1e-14 * size;
  Dop853 solver(
      [&](double, const State6& d) {
        State6 s{};
        for (int i = 0; i < 6; ++i) s[i] = base[i] + d[i];
        State6 f = hill::eom(s, lambda1, lambda2, c);
        for (int i = 0; i < 6; ++i) f[i] -= f0[i];
        return f;
      },
      o);
  const auto r = solver.solve(0.0, displacement, tau);
  rep.nonlinear = r.states.back();

  double num = 0.0, den = 0.0;
  for (int i = 0; i < 6; ++i) {
    rep.linear[i] = lin[i];
    num += (rep.nonlinear[i] - lin[i]) * (rep.nonlinear[i] - lin[i]);
    den += lin[i] * lin[i];
  }
  rep.deviation = den > 0.0 ? std::sqrt(num / den) : 0.0;
  return rep;
}

}  // namespace hill4
