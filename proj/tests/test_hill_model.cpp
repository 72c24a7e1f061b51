#include <doctest.h>

#include <cmath>
#include <limits>

#include "hill4/core_types.hpp"
#include "hill4/equilibria.hpp"
#include "hill4/error.hpp"
#include "hill4/hill_model.hpp"
#include "hill4/propagate.hpp"
#include "oracles.hpp"

using namespace hill4;
using namespace hill4::hill;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// The Hill model only ever sees mu, v and c.
[[maybe_unused]] constexpr double (*kShiftedSignature)(const State6&, double, double, double) =
    &hamiltonian_shifted;

double off_diagonal_after(const RotationFrame& f, const Mat2& m, double* d2, double* d1) {
  const auto c = f.matrix();
  double r[2][2];
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      double s = 0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) s += c[a][i] * m[a][b] * c[b][k];
      r[i][k] = s;
    }
  *d2 = r[0][0];
  *d1 = r[1][1];
  return std::max(std::fabs(r[0][1]), std::fabs(r[1][0]));
}

double symplectic_residual(const RotationFrame& f) {
  // R = diag(C, C) on (x, y, px, py), J = [[0, I], [-I, 0]]
  const auto c = f.matrix();
  double r[4][4] = {};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      r[i][k] = c[i][k];
      r[i + 2][k + 2] = c[i][k];
    }
  const double j[4][4] = {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
  double worst = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0;
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) s += r[p][a] * j[p][q] * r[q][b];
      worst = std::max(worst, std::fabs(s - j[a][b]));
    }
  return worst;
}

}  // namespace

TEST_SUITE("hill_model") {

TEST_CASE("hektor curvature eigenvalues") {
  const auto p = normalize_system(hektor_inputs());
  const auto e = rotation_eigenvalues(p.mu, p.v);
  CHECK(oracle::rel(e.lambda1, 0.0021444999866622183) < 1e-12);
  CHECK(oracle::rel(e.lambda2, 2.997855500013338) < 1e-12);
  CHECK(oracle::rel(e.lambda1, oracle::hp::lambda1) < 1e-14);
  CHECK(oracle::rel(e.lambda2, oracle::hp::lambda2) < 1e-15);
  CHECK(std::fabs(e.lambda1 + e.lambda2 - 3) <= 2 * kEps);
}

TEST_CASE("curvature limits") {
  const auto hill = rotation_eigenvalues(0.0, 1.0);
  CHECK(hill.lambda1 == 0.0);
  CHECK(hill.lambda2 == 3.0);
  const auto half = rotation_eigenvalues(0.5, 1.0);
  CHECK(std::fabs(half.lambda1 - 0.75) <= kEps);
  CHECK(std::fabs(half.lambda2 - 2.25) <= 2 * kEps);
  const auto m = quadratic_form_matrix(0.5, 1.0);
  CHECK(m[0][1] == 0.0);
  CHECK(m[1][0] == 0.0);
}

TEST_CASE("tidal form is the L4 Hessian of the three-body potential") {
  for (double mu : {0.001, 0.0123, 0.2, 0.5}) {
    const Vec3 l4{0.5 - mu, std::sqrt(3.0) / 2, 0.0};
    const auto hess = oracle::fd_jacobian(
        [&](const Vec3& q) {
          return oracle::fd_gradient([&](const Vec3& p) { return oracle::cr3bp_omega(p, mu); }, q,
                                     1e-5);
        },
        l4, 1e-4);
    const auto m = quadratic_form_matrix(mu, 1.0);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) CHECK(std::fabs(m[i][k] - hess[i][k]) < 1e-5);
  }
}

TEST_CASE("rotation diagonalizes the tidal form") {
  const auto p = normalize_system(hektor_inputs());
  const auto f = build_rotation(p.mu, p.v);
  const auto m = quadratic_form_matrix(p.mu, p.v);
  double d2 = 0, d1 = 0;
  CHECK(off_diagonal_after(f, m, &d2, &d1) < 1e-13);
  CHECK(std::fabs(d2 - f.lambda2) < 1e-13);
  CHECK(std::fabs(d1 - f.lambda1) < 1e-13);
  // M v = lambda v
  for (const auto& [vec, lam] : {std::pair{f.v2, f.lambda2}, std::pair{f.v1, f.lambda1}}) {
    CHECK(std::fabs(m[0][0] * vec[0] + m[0][1] * vec[1] - lam * vec[0]) <= 1e-13);
    CHECK(std::fabs(m[1][0] * vec[0] + m[1][1] * vec[1] - lam * vec[1]) <= 1e-13);
  }
  // orthonormal, proper, and the orientation identity
  CHECK(std::fabs(f.v1[0] * f.v1[0] + f.v1[1] * f.v1[1] - 1) <= 2 * kEps);
  CHECK(std::fabs(f.v2[0] * f.v2[0] + f.v2[1] * f.v2[1] - 1) <= 2 * kEps);
  CHECK(std::fabs(f.v1[0] * f.v2[0] + f.v1[1] * f.v2[1]) <= 2 * kEps);
  const auto c = f.matrix();
  CHECK(std::fabs(c[0][0] * c[1][1] - c[0][1] * c[1][0] - 1) <= 2 * kEps);
  CHECK(std::fabs(f.v1[1] * f.v2[0] - f.v1[0] * f.v2[1] - 1) <= 2 * kEps);
}

TEST_CASE("eigenvectors are parallel to the explicit form") {
  const auto p = normalize_system(hektor_inputs());
  const auto f = build_rotation(p.mu, p.v);
  const auto m = quadratic_form_matrix(p.mu, p.v);
  CHECK(f.delta1 > 0);
  CHECK(f.delta2 > 0);
  for (const auto& [vec, lam, delta] :
       {std::tuple{f.v1, f.lambda1, f.delta1}, std::tuple{f.v2, f.lambda2, f.delta2}}) {
    const double ex = (m[1][1] - lam) / delta, ey = -m[0][1] / delta;
    const double len = std::hypot(ex, ey);
    CHECK(std::fabs(vec[0] * ey - vec[1] * ex) / len < 1e-12);
  }
}

TEST_CASE("symplectic on a parameter grid") {
  for (double mu = 0.001; mu < 0.5; mu += 0.0337) {
    for (double v = 0.2; v <= 1.0; v += 0.1) {
      CHECK(symplectic_residual(build_rotation(mu, v)) < 1e-13);
    }
  }
}

TEST_CASE("equal masses: the frame still diagonalizes") {
  const auto f = build_rotation(0.5, 1.0);
  const auto m = quadratic_form_matrix(0.5, 1.0);
  double d2 = 0, d1 = 0;
  CHECK(off_diagonal_after(f, m, &d2, &d1) < 1e-15);
  CHECK(std::fabs(d2 - 2.25) < 1e-15);
  CHECK(std::fabs(d1 - 0.75) < 1e-15);
  // lambda2 belongs to the shifted y axis here, so the frame is a quarter turn
  CHECK(std::fabs(std::fabs(f.v2[1]) - 1) < 1e-15);
}

TEST_CASE("shifted and rotated Hamiltonians agree") {
  const auto p = normalize_system(hektor_inputs());
  const auto f = build_rotation(p.mu, p.v);
  auto g = oracle::rng(23);
  for (int k = 0; k < 100; ++k) {
    const Vec3 q = oracle::random_point(g, 0.1, 2.0);
    const Vec3 mom{oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1)};
    const PhaseState s{Frame::hill_shifted, Representation::canonical_momentum, q, mom};
    const auto r = shifted_to_rotated(f, s);
    CHECK(std::fabs(hamiltonian_shifted(s, p.mu, p.v, p.little_c) -
                    hamiltonian_rotated(r, p.lambda1, p.lambda2, p.little_c)) < 1e-13);
    // and back
    const auto back = rotated_to_shifted(f, r);
    CHECK(oracle::max_abs_diff(back.packed(), s.packed()) < 1e-15);

    // quadratic forms: w^T M w = lambda2 x^2 + lambda1 y^2
    const auto m = quadratic_form_matrix(p.mu, p.v);
    const double wmw = m[0][0] * q[0] * q[0] + 2 * m[0][1] * q[0] * q[1] + m[1][1] * q[1] * q[1];
    const double rot = p.lambda2 * r.position[0] * r.position[0] +
                       p.lambda1 * r.position[1] * r.position[1];
    CHECK(std::fabs(wmw - rot) < 1e-13);
  }
  CHECK_THROWS_AS(shifted_to_rotated(f, PhaseState{}), Error);
}

TEST_CASE("non-oblate shifted Hamiltonian is the L4 expansion") {
  const double mu = 0.0123;
  const Vec3 l4{0.5 - mu, std::sqrt(3.0) / 2, 0.0};
  const auto hess = oracle::fd_jacobian(
      [&](const Vec3& q) {
        return oracle::fd_gradient([&](const Vec3& p) { return oracle::cr3bp_omega(p, mu); }, q,
                                   1e-5);
      },
      l4, 1e-4);
  auto g = oracle::rng(29);
  for (int k = 0; k < 20; ++k) {
    const Vec3 q = oracle::random_point(g, 0.2, 1.0);
    const State6 s{q[0], q[1], q[2], oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1),
                   oracle::uniform(g, -1, 1)};
    const double x = s[0], y = s[1], z = s[2];
    const double wmw = hess[0][0] * x * x + 2 * hess[0][1] * x * y + hess[1][1] * y * y;
    const double want = 0.5 * (s[3] * s[3] + s[4] * s[4] + s[5] * s[5]) + y * s[3] - x * s[4] +
                        0.5 * (x * x + y * y) - 0.5 * wmw + 0.5 * z * z - 1 / hill4::norm(q);
    CHECK(std::fabs(hamiltonian_shifted(s, mu, 1.0, 0.0) - want) < 1e-5);
  }
}

TEST_CASE("classical lunar Hill problem at mu = 0") {
  const auto f = build_rotation(1e-300, 1.0);  // mu -> 0 keeps the generic branch
  CHECK(f.lambda1 < 1e-290);
  auto g = oracle::rng(31);
  for (int k = 0; k < 50; ++k) {
    const Vec3 q = oracle::random_point(g, 0.1, 2.0);
    const State6 s{q[0], q[1], q[2], oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1),
                   oracle::uniform(g, -1, 1)};
    const double x = s[0], y = s[1], z = s[2];
    const double lunar = 0.5 * (s[3] * s[3] + s[4] * s[4] + s[5] * s[5]) + y * s[3] - x * s[4] -
                         x * x + 0.5 * y * y + 0.5 * z * z - 1 / hill4::norm(q);
    CHECK(std::fabs(hamiltonian_rotated(s, 0.0, 3.0, 0.0) - lunar) < 1e-13);
  }
}

TEST_CASE("potential restricted to the x axis") {
  const double l1 = 0.3, l2 = 2.7, c = -1e-3;
  for (double x : {0.2, 0.9, -1.7}) {
    const double ax = std::fabs(x);
    CHECK(oracle::rel(potential({x, 0, 0}, l1, l2, c),
                      l2 * x * x / 2 + 1 / ax - c / (ax * ax * ax)) < 1e-15);
  }
  try {
    potential({0, 0, 0}, l1, l2, c);
    FAIL("origin accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::singular_origin);
  }
}

TEST_CASE("gradient and Hessian: closed forms and finite differences") {
  const auto p = normalize_system(hektor_inputs());
  struct Case {
    double l1, l2, c, rmin, rmax;
  };
  // Hektor values, then an exaggerated c so the oblate terms carry weight.
  for (const Case cs : {Case{p.lambda1, p.lambda2, p.little_c, 0.05, 5.0},
                        Case{0.4, 2.6, -0.01, 0.3, 3.0}}) {
    auto g = oracle::rng(37);
    for (int k = 0; k < 100; ++k) {
      const Vec3 q = oracle::random_point(g, cs.rmin, cs.rmax);
      const double h = 1e-6 * hill4::norm(q);
      const Vec3 grad = gradient(q, cs.l1, cs.l2, cs.c);
      CHECK(oracle::vec_rel_err(grad, oracle::hill_grad(q, cs.l1, cs.l2, cs.c)) < 1e-12);
      const auto fd = oracle::fd_gradient(
          [&](const Vec3& x) { return oracle::hill_omega(x, cs.l1, cs.l2, cs.c); }, q, h);
      CHECK(oracle::vec_rel_err(grad, fd) < 1e-7);

      const Mat3 hess = hessian(q, cs.l1, cs.l2, cs.c);
      CHECK(oracle::mat_rel_err(hess, oracle::hill_hess(q, cs.l1, cs.l2, cs.c)) < 1e-12);
      const auto fdh = oracle::fd_jacobian(
          [&](const Vec3& x) { return oracle::hill_grad(x, cs.l1, cs.l2, cs.c); }, q, h);
      CHECK(oracle::mat_rel_err(hess, fdh) < 1e-7);
    }
  }
}

TEST_CASE("equations of motion vanish at the equilibria") {
  const auto p = normalize_system(hektor_inputs());
  for (auto axis : {eq::Axis::x, eq::Axis::y}) {
    const auto e = eq::find_equilibrium(axis, p.lambda1, p.lambda2, p.little_c);
    for (double sign : {1.0, -1.0}) {
      const Vec3 q = sign * e.location;
      const auto d = eom({q[0], q[1], q[2], 0, 0, 0}, p.lambda1, p.lambda2, p.little_c);
      for (double di : d) CHECK(std::fabs(di) <= 1e-12);
    }
  }
  // On the z axis the force balance is between terms of size 1/r^2 ~ 1e6,
  // so the check is made in units of that scale.
  const auto ez = eq::find_equilibrium(eq::Axis::z, p.lambda1, p.lambda2, p.little_c);
  const double scale = 1 / (ez.r_star * ez.r_star);
  const auto d = eom({0, 0, ez.r_star, 0, 0, 0}, p.lambda1, p.lambda2, p.little_c);
  for (double di : d) CHECK(std::fabs(di) <= 1e-12 * scale);
}

TEST_CASE("mirror symmetry of the planar flow") {
  const auto p = normalize_system(hektor_inputs());
  const State6 s0{0.3, 0.1, 0, 0.2, 1.5, 0};
  IntegrateOptions fwd, bwd;
  for (int i = 0; i <= 10; ++i) {
    fwd.sample_times.push_back(0.5 * i);
    bwd.sample_times.push_back(-0.5 * i);
  }
  const auto a = integrate_hill(PhaseState::unpack(Frame::hill_rotated, Representation::velocity, s0),
                                0, 5, fwd, p.lambda1, p.lambda2, p.little_c);
  const auto b = integrate_hill(
      PhaseState::unpack(Frame::hill_rotated, Representation::velocity, mirror(s0)), 0, -5, bwd,
      p.lambda1, p.lambda2, p.little_c);
  REQUIRE(a.states.size() == b.states.size());
  for (std::size_t i = 0; i < a.states.size(); ++i) {
    CHECK(oracle::max_abs_diff(mirror(a.states[i].packed()), b.states[i].packed()) < 1e-9);
  }
}

TEST_CASE("energy drift over ten time units") {
  const auto p = normalize_system(hektor_inputs());
  const double r = 0.1;
  const State6 circular{r, 0, 0, 0, std::sqrt(1 / r) - r, 0};
  const auto run = integrate_hill(
      PhaseState::unpack(Frame::hill_rotated, Representation::velocity, circular), 0, 10,
      IntegrateOptions{}, p.lambda1, p.lambda2, p.little_c);
  CHECK(run.max_energy_drift < 1e-10);
  CHECK(std::fabs(energy(circular, p.lambda1, p.lambda2, p.little_c) - run.energy[0]) == 0.0);
}

}
