#pragma once

#include <array>

#include "hill4/phase_state.hpp"
#include "hill4/vec.hpp"

// Hill limit of the four-body problem around the oblate tertiary. Two frames:
// "shifted" (origin at the tertiary, synodic axes) and "rotated" (axes along
// the eigenvectors of the tidal quadratic form). Nothing here depends on the
// angular velocity of the configuration; the inputs are mu, v and c only.
namespace hill4::hill {

using Mat2 = std::array<std::array<double, 2>, 2>;

struct RotationEigenvalues {
  double lambda1;
  double lambda2;
  double d;  // sqrt(1 - v^2 (4 - v^2)(mu - mu^2))
};

// Roots of lambda^2 - 3 lambda + (9/4) v^2 (4 - v^2)(mu - mu^2) = 0. The small
// root is formed as a product quotient so it keeps full relative precision.
RotationEigenvalues rotation_eigenvalues(double mu, double v);

// Tidal quadratic form M of the shifted frame (symmetric).
Mat2 quadratic_form_matrix(double mu, double v);

struct RotationFrame {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double d = 0.0;
  Vec2 v2{};  // unit eigenvector of lambda2, first column
  Vec2 v1{};  // unit eigenvector of lambda1, second column
  // Normalizers of the (M22 - lambda, -M12) eigenvector form. They vanish
  // when M is already diagonal, so they are diagnostics only.
  double delta1 = 0.0;
  double delta2 = 0.0;

  // C = col(v2, v1); shifted = C * rotated.
  Mat2 matrix() const { return {{{v2[0], v1[0]}, {v2[1], v1[1]}}}; }
};

// Proper rotation (det = +1) with C^T M C = diag(lambda2, lambda1).
// Throws Error(degenerate_eigenpair) if the eigenvalues coincide.
RotationFrame build_rotation(double mu, double v);

// Applies C^T to positions and momenta jointly (a symplectic map), or C to go
// back. Velocity and momentum states are both accepted, the map is linear.
PhaseState shifted_to_rotated(const RotationFrame& frame, const PhaseState& s);
PhaseState rotated_to_shifted(const RotationFrame& frame, const PhaseState& s);

// Shifted-frame Hamiltonian, state = (x, y, z, px, py, pz).
double hamiltonian_shifted(const State6& s, double mu, double v, double c);
double hamiltonian_shifted(const PhaseState& s, double mu, double v, double c);

// Rotated-frame Hamiltonian: |p|^2/2 + y px - x py + (x^2 + y^2)/2 - Omega.
double hamiltonian_rotated(const State6& s, double lambda1, double lambda2, double c);
double hamiltonian_rotated(const PhaseState& s, double lambda1, double lambda2, double c);

// Omega = (lambda2 x^2 + lambda1 y^2 - z^2)/2 + 1/r - c/r^3 + 3 c z^2 / r^5.
// All three throw Error(singular_origin) at r = 0.
double potential(const Vec3& q, double lambda1, double lambda2, double c);
Vec3 gradient(const Vec3& q, double lambda1, double lambda2, double c);
Mat3 hessian(const Vec3& q, double lambda1, double lambda2, double c);

// Velocity-form equations (x', y', z', 2y' + Om_x, -2x' + Om_y, Om_z).
State6 eom(const State6& s, double lambda1, double lambda2, double c);
State6 eom(const PhaseState& s, double lambda1, double lambda2, double c);

// |v|^2/2 - Omega for a rotated velocity-form state.
double energy(const State6& s, double lambda1, double lambda2, double c);

// (x, y, z, vx, vy, vz) -> (x, -y, z, -vx, vy, -vz). Combined with t -> -t this
// maps solutions of the rotated system onto solutions.
State6 mirror(const State6& s);

}  // namespace hill4::hill
