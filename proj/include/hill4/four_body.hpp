#pragma once

#include "hill4/central_config.hpp"
#include "hill4/core_types.hpp"
#include "hill4/phase_state.hpp"
#include "hill4/vec.hpp"

namespace hill4 {

// Spatial circular restricted four-body problem in the synodic frame: three
// heavy bodies at the central-configuration vertices, the tertiary oblate.
// Time is rescaled so the configuration rotates with unit angular velocity,
// which leaves a factor 1/omega^2 on the gravitational part.
class FourBodyModel {
 public:
  FourBodyModel(const SystemParams& params, const cc::TriangleConfig& triangle);

  const cc::TriangleConfig& triangle() const { return tri_; }
  double c_prime() const { return c_prime_; }

  // Omega = (x^2 + y^2)/2 + [sum m_i / r_i + m3 C' (3 z^2 / r3^5 - 1 / r3^3)] / omega^2.
  // Throws Error(singular_at_body) when the point sits on a body.
  double potential(const Vec3& q) const;
  Vec3 gradient(const Vec3& q) const;

  // Velocity form: (x', y', z', 2y' + Om_x, -2x' + Om_y, Om_z).
  State6 eom_velocity(const State6& s) const;
  // Canonical form with p = v + (-y, x, 0).
  State6 eom_canonical(const State6& s) const;

  State6 eom(const PhaseState& s) const;

  // |p|^2/2 + y px - x py - (Omega - (x^2 + y^2)/2).
  double hamiltonian(const State6& canonical) const;
  double hamiltonian(const PhaseState& s) const;
  // |v|^2/2 - Omega.
  double energy(const State6& velocity) const;

  double min_body_distance(const Vec3& q) const;

 private:
  cc::TriangleConfig tri_;
  double inv_omega_sq_;
  double c_prime_;
  std::array<Vec3, 3> body_{};

  double gravity(const Vec3& q) const;
  Vec3 gravity_gradient(const Vec3& q) const;
};

}  // namespace hill4
