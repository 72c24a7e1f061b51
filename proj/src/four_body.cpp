#include "hill4/four_body.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hill4/error.hpp"

namespace hill4 {

FourBodyModel::FourBodyModel(const SystemParams& params, const cc::TriangleConfig& triangle)
    : tri_(triangle), inv_omega_sq_(1.0 / params.omega_sq), c_prime_(params.c_prime) {
  for (int i = 0; i < 3; ++i) body_[i] = {tri_.vertices[i][0], tri_.vertices[i][1], 0.0};
}

double FourBodyModel::min_body_distance(const Vec3& q) const {
  return std::min({norm(q - body_[0]), norm(q - body_[1]), norm(q - body_[2])});
}

namespace {

[[noreturn]] void singular(int i) {
  throw Error(Errc::singular_at_body, "position coincides with body " + std::to_string(i + 1));
}

}  // namespace

double FourBodyModel::gravity(const Vec3& q) const {
  double sum = 0.0;
  double rho = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double r = norm(q - body_[i]);
    if (r == 0.0) singular(i);
    sum += tri_.masses[i] / r;
    if (i == 2) rho = r;
  }
  const double rho3 = rho * rho * rho;
  sum += tri_.masses[2] * c_prime_ * (3.0 * q[2] * q[2] / (rho3 * rho * rho) - 1.0 / rho3);
  return inv_omega_sq_ * sum;
}

Vec3 FourBodyModel::gravity_gradient(const Vec3& q) const {
  Vec3 g{0.0, 0.0, 0.0};
  Vec3 d3{};
  double rho = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Vec3 d = q - body_[i];
    const double r = norm(d);
    if (r == 0.0) singular(i);
    g = g + (-tri_.masses[i] / (r * r * r)) * d;
    if (i == 2) {
      d3 = d;
      rho = r;
    }
  }
  const double r2 = rho * rho;
  const double i5 = 1.0 / (r2 * r2 * rho);
  const double i7 = i5 / r2;
  const double z = q[2];
  const double k = tri_.masses[2] * c_prime_;
  g = g + (k * (3.0 * i5 - 15.0 * z * z * i7)) * d3;
  g[2] += k * 6.0 * z * i5;
  return inv_omega_sq_ * g;
}

double FourBodyModel::potential(const Vec3& q) const {
  return 0.5 * (q[0] * q[0] + q[1] * q[1]) + gravity(q);
}

Vec3 FourBodyModel::gradient(const Vec3& q) const {
  Vec3 g = gravity_gradient(q);
  g[0] += q[0];
  g[1] += q[1];
  return g;
}

State6 FourBodyModel::eom_velocity(const State6& s) const {
  const Vec3 g = gradient({s[0], s[1], s[2]});
  return {s[3], s[4], s[5], 2.0 * s[4] + g[0], -2.0 * s[3] + g[1], g[2]};
}

State6 FourBodyModel::eom_canonical(const State6& s) const {
  const Vec3 g = gravity_gradient({s[0], s[1], s[2]});
  return {s[3] + s[1], s[4] - s[0], s[5], s[4] + g[0], -s[3] + g[1], g[2]};
}

State6 FourBodyModel::eom(const PhaseState& s) const {
  if (s.frame != Frame::synodic_4bp) {
    throw Error(Errc::frame_mismatch,
                "eom_4bp expects a synodic-4bp state, got " + std::string(frame_name(s.frame)));
  }
  return s.rep == Representation::velocity ? eom_velocity(s.packed()) : eom_canonical(s.packed());
}

double FourBodyModel::hamiltonian(const State6& s) const {
  return 0.5 * (s[3] * s[3] + s[4] * s[4] + s[5] * s[5]) + s[1] * s[3] - s[0] * s[4] -
         gravity({s[0], s[1], s[2]});
}

double FourBodyModel::hamiltonian(const PhaseState& s) const {
  require(s, Frame::synodic_4bp, Representation::canonical_momentum, "hamiltonian_4bp");
  return hamiltonian(s.packed());
}

double FourBodyModel::energy(const State6& s) const {
  return 0.5 * (s[3] * s[3] + s[4] * s[4] + s[5] * s[5]) - potential({s[0], s[1], s[2]});
}

}  // namespace hill4
