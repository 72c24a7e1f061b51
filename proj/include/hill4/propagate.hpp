#pragma once

#include <string_view>
#include <vector>

#include "hill4/core_types.hpp"
#include "hill4/phase_state.hpp"
#include "hill4/vec.hpp"

namespace hill4 {

enum class Model { four_body, hill };

std::string_view model_name(Model m) noexcept;

struct IntegrateOptions {
  double rel_tol = 1e-12;   // both must lie in [1e-14, 1e-3]
  double abs_tol = 1e-12;
  std::vector<double> sample_times;  // empty: every accepted step
  double guard_min = 1e-9;           // closest allowed approach to a body
};

// Samples are ordered in the direction of integration (decreasing times for
// a backward run). energy[i] is the conserved quantity at states[i]: the
// Hamiltonian for canonical states, |v|^2/2 - Omega for velocity states.
struct Trajectory {
  Model model = Model::hill;
  Frame frame = Frame::hill_rotated;
  std::vector<double> times;
  std::vector<PhaseState> states;
  std::vector<double> energy;
  double max_energy_drift = 0.0;  // max |energy[i] - energy[0]|
  long steps = 0;
  long rejected = 0;
};

// Hill model: initial must be hill-rotated/velocity. Four-body model:
// synodic-4bp in either representation. Throws Error(frame_mismatch),
// Error(singularity_approach) or Error(step_underflow).
Trajectory integrate(const PhaseState& initial, double t0, double t1,
                     const IntegrateOptions& opts, Model model, const SystemParams& params);

// Hill model with explicit curvatures and oblateness.
Trajectory integrate_hill(const PhaseState& initial, double t0, double t1,
                          const IntegrateOptions& opts, double lambda1, double lambda2, double c);

struct MonodromyReport {
  State6 nonlinear{};  // displacement after tau under the full flow
  State6 linear{};     // exp(J tau) * displacement
  double deviation = 0.0;  // |nonlinear - linear| / |linear|, 0 if both vanish
};

// Flows a displacement from the equilibrium `location` (velocity zero) for
// time tau under the rotated Hill equations and under their linearization.
MonodromyReport monodromy_step(const Vec3& location, const State6& displacement, double tau,
                               double lambda1, double lambda2, double c);

}  // namespace hill4
