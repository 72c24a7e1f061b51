#include "hill4/hill_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hill4/error.hpp"

namespace hill4::hill {

RotationEigenvalues rotation_eigenvalues(double mu, double v) {
  const double upsilon = v * v * (4.0 - v * v) * (mu - mu * mu);
  const double d = std::sqrt(1.0 - upsilon);
  // lambda1 = 3(1 - d)/2 = 3 upsilon / (2 (1 + d)); lambda1 lambda2 = 9 upsilon / 4.
  return {1.5 * upsilon / (1.0 + d), 1.5 * (1.0 + d), d};
}

Mat2 quadratic_form_matrix(double mu, double v) {
  const double off = 0.75 * v * std::sqrt(4.0 - v * v) * (1.0 - 2.0 * mu);
  return {{{0.75 * v * v, off}, {off, 0.75 * (4.0 - v * v)}}};
}

RotationFrame build_rotation(double mu, double v) {
  const auto eig = rotation_eigenvalues(mu, v);
  if (!(eig.lambda2 > eig.lambda1)) {
    throw Error(Errc::degenerate_eigenpair, "lambda1 == lambda2, rotation undefined");
  }
  const Mat2 m = quadratic_form_matrix(mu, v);

  RotationFrame f;
  f.lambda1 = eig.lambda1;
  f.lambda2 = eig.lambda2;
  f.d = eig.d;

  // Principal axis angle of the larger eigenvalue. At mu = 1/2 M is diagonal
  // with M22 > M11, so the lambda2 axis is the shifted y axis (theta = pi/2).
  const double theta = 0.5 * std::atan2(2.0 * m[0][1], m[0][0] - m[1][1]);
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  f.v2 = {cs, sn};
  f.v1 = {-sn, cs};

  const double dd = 1.5 * (2.0 - v * v);
  auto delta = [&](double lam) {
    return std::sqrt(std::max(0.0, 2.0 * m[0][1] * m[0][1] + dd * (m[1][1] - lam)));
  };
  f.delta1 = delta(f.lambda1);
  f.delta2 = delta(f.lambda2);
  return f;
}

namespace {

Vec3 apply(const Mat2& a, const Vec3& w, bool transpose) {
  if (transpose) {
    return {a[0][0] * w[0] + a[1][0] * w[1], a[0][1] * w[0] + a[1][1] * w[1], w[2]};
  }
  return {a[0][0] * w[0] + a[0][1] * w[1], a[1][0] * w[0] + a[1][1] * w[1], w[2]};
}

}  // namespace

PhaseState shifted_to_rotated(const RotationFrame& frame, const PhaseState& s) {
  if (s.frame != Frame::hill_shifted) {
    throw Error(Errc::frame_mismatch, "shifted_to_rotated expects a hill-shifted state, got " +
                                          std::string(frame_name(s.frame)));
  }
  const Mat2 c = frame.matrix();
  return {Frame::hill_rotated, s.rep, apply(c, s.position, true), apply(c, s.motion, true)};
}

PhaseState rotated_to_shifted(const RotationFrame& frame, const PhaseState& s) {
  if (s.frame != Frame::hill_rotated) {
    throw Error(Errc::frame_mismatch, "rotated_to_shifted expects a hill-rotated state, got " +
                                          std::string(frame_name(s.frame)));
  }
  const Mat2 c = frame.matrix();
  return {Frame::hill_shifted, s.rep, apply(c, s.position, false), apply(c, s.motion, false)};
}

namespace {

double radius_or_throw(const Vec3& q) {
  const double r = norm(q);
  if (r == 0.0) throw Error(Errc::singular_origin, "Hill model evaluated at the tertiary");
  return r;
}

}  // namespace

double hamiltonian_shifted(const State6& s, double mu, double v, double c) {
  const double x = s[0], y = s[1], z = s[2];
  const double px = s[3], py = s[4], pz = s[5];
  const double r = radius_or_throw({x, y, z});
  const double r2 = r * r;
  const double v2 = v * v;
  const double kinetic = 0.5 * (px * px + py * py + pz * pz) + y * px - x * py;
  const double tidal = (4.0 - 3.0 * v2) / 8.0 * x * x + (3.0 * v2 - 8.0) / 8.0 * y * y +
                       0.5 * z * z -
                       0.75 * v * std::sqrt(4.0 - v2) * (1.0 - 2.0 * mu) * x * y;
  return kinetic + tidal - 1.0 / r - c / (r2 * r) * (3.0 * z * z / r2 - 1.0);
}

double hamiltonian_shifted(const PhaseState& s, double mu, double v, double c) {
  require(s, Frame::hill_shifted, Representation::canonical_momentum, "hamiltonian_shifted");
  return hamiltonian_shifted(s.packed(), mu, v, c);
}

double potential(const Vec3& q, double lambda1, double lambda2, double c) {
  const double x = q[0], y = q[1], z = q[2];
  const double r = radius_or_throw(q);
  const double r2 = r * r;
  const double r3 = r2 * r;
  return 0.5 * (lambda2 * x * x + lambda1 * y * y - z * z) + 1.0 / r - c / r3 +
         3.0 * c * z * z / (r3 * r2);
}

Vec3 gradient(const Vec3& q, double lambda1, double lambda2, double c) {
  const double x = q[0], y = q[1], z = q[2];
  const double r = radius_or_throw(q);
  const double r2 = r * r;
  const double i3 = 1.0 / (r2 * r);
  const double i5 = i3 / r2;
  const double i7 = i5 / r2;
  // Common radial factor of the planar components.
  const double k = -i3 + 3.0 * c * i5 - 15.0 * c * z * z * i7;
  return {lambda2 * x + k * x, lambda1 * y + k * y,
          -z - z * i3 + 9.0 * c * z * i5 - 15.0 * c * z * z * z * i7};
}

Mat3 hessian(const Vec3& q, double lambda1, double lambda2, double c) {
  const double x = q[0], y = q[1], z = q[2];
  const double r = radius_or_throw(q);
  const double r2 = r * r;
  const double i3 = 1.0 / (r2 * r);
  const double i5 = i3 / r2;
  const double i7 = i5 / r2;
  const double i9 = i7 / r2;
  const double z2 = z * z;

  const double diag_common = -i3 + 3.0 * c * i5 - 15.0 * c * z2 * i7;
  // d/dq_j of the radial factor, times q_i, for the planar rows.
  const double mix = 3.0 * i5 - 15.0 * c * i7 + 105.0 * c * z2 * i9;

  Mat3 h{};
  h[0][0] = lambda2 + diag_common + mix * x * x;
  h[1][1] = lambda1 + diag_common + mix * y * y;
  h[2][2] = -1.0 - i3 + 3.0 * z2 * i5 + 9.0 * c * i5 - 90.0 * c * z2 * i7 +
            105.0 * c * z2 * z2 * i9;
  h[0][1] = h[1][0] = mix * x * y;
  const double mix_z = 3.0 * i5 - 45.0 * c * i7 + 105.0 * c * z2 * i9;
  h[0][2] = h[2][0] = mix_z * x * z;
  h[1][2] = h[2][1] = mix_z * y * z;
  return h;
}

double hamiltonian_rotated(const State6& s, double lambda1, double lambda2, double c) {
  const double x = s[0], y = s[1];
  const double px = s[3], py = s[4], pz = s[5];
  return 0.5 * (px * px + py * py + pz * pz) + y * px - x * py + 0.5 * (x * x + y * y) -
         potential({s[0], s[1], s[2]}, lambda1, lambda2, c);
}

double hamiltonian_rotated(const PhaseState& s, double lambda1, double lambda2, double c) {
  require(s, Frame::hill_rotated, Representation::canonical_momentum, "hamiltonian_rotated");
  return hamiltonian_rotated(s.packed(), lambda1, lambda2, c);
}

State6 eom(const State6& s, double lambda1, double lambda2, double c) {
  const Vec3 g = gradient({s[0], s[1], s[2]}, lambda1, lambda2, c);
  return {s[3], s[4], s[5], 2.0 * s[4] + g[0], -2.0 * s[3] + g[1], g[2]};
}

State6 eom(const PhaseState& s, double lambda1, double lambda2, double c) {
  require(s, Frame::hill_rotated, Representation::velocity, "eom_hill");
  return eom(s.packed(), lambda1, lambda2, c);
}

double energy(const State6& s, double lambda1, double lambda2, double c) {
  return 0.5 * (s[3] * s[3] + s[4] * s[4] + s[5] * s[5]) -
         potential({s[0], s[1], s[2]}, lambda1, lambda2, c);
}

State6 mirror(const State6& s) { return {s[0], -s[1], s[2], -s[3], s[4], -s[5]}; }

}  // namespace hill4::hill
