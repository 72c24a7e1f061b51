#include "hill4/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "hill4/error.hpp"
#include "hill4/hill_model.hpp"
#include "hill4/roots.hpp"
#include "hill4/sweep.hpp"

namespace hill4::eq {

std::string_view axis_name(Axis a) noexcept {
  switch (a) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

std::string_view class_name(StabilityClass s) noexcept {
  switch (s) {
    case StabilityClass::center_center_center: return "center x center x center";
    case StabilityClass::center_center_saddle: return "center x center x saddle";
    case StabilityClass::center_complex_saddle: return "center x complex-saddle";
    case StabilityClass::other: return "other";
  }
  return "?";
}

double h_axis(Axis axis, double r, double lambda1, double lambda2, double c) {
  const double r2 = r * r;
  if (axis == Axis::z) return -r2 * r2 * r - r2 - 6.0 * c;
  const double lam = axis == Axis::x ? lambda2 : lambda1;
  const double i3 = 1.0 / (r2 * r);
  return lam - i3 + 3.0 * c * i3 / r2;
}

double h_axis_derivative(Axis axis, double r, double lambda1, double lambda2, double c) {
  (void)lambda1;
  (void)lambda2;
  const double r2 = r * r;
  if (axis == Axis::z) return -5.0 * r2 * r2 - 2.0 * r;
  return 3.0 / (r2 * r2) - 15.0 * c / (r2 * r2 * r2);
}

EquilibriumReport find_equilibrium(Axis axis, double lambda1, double lambda2, double c) {
  if (!(c <= 0.0)) throw Error(Errc::invalid_argument, "c must be <= 0 (oblate or spherical)");
  if (axis == Axis::z && c == 0.0) {
    throw Error(Errc::no_z_equilibrium, "the vertical axis has no equilibrium when c = 0");
  }

  roots::Bracket b{};
  if (axis == Axis::z) {
    const double s = std::sqrt(-6.0 * c);
    b = {s * (1.0 - 1e-3), s * (1.0 + 1e-3)};
  } else {
    const double lam = axis == Axis::x ? lambda2 : lambda1;
    if (!(lam > 0.0)) {
      throw Error(Errc::no_bracket, "curvature along the " + std::string(axis_name(axis)) +
                                        " axis is not positive");
    }
    b = {std::cbrt(1.0 / (2.0 * lam)) / 16.0, std::cbrt(2.0 / lam) * 16.0};
  }

  auto h = [&](double r) { return h_axis(axis, r, lambda1, lambda2, c); };
  auto dh = [&](double r) { return h_axis_derivative(axis, r, lambda1, lambda2, c); };
  b = roots::widen(h, b);
  const double r = roots::bisect(h, b, 1e-15, dh, 2);

  EquilibriumReport rep;
  rep.axis = axis;
  rep.r_star = r;
  rep.location = {0.0, 0.0, 0.0};
  rep.location[static_cast<int>(axis)] = r;
  return rep;
}

double scaled_gradient_residual(const Vec3& q, double lambda1, double lambda2, double c) {
  const Vec3 g = hill::gradient(q, lambda1, lambda2, c);
  const double x = q[0], y = q[1], z = q[2];
  const double r = norm(q);
  const double r2 = r * r;
  const double i3 = 1.0 / (r2 * r);
  const double i5 = i3 / r2;
  const double i7 = i5 / r2;
  const double ac = std::fabs(c);
  const double planar = i3 + 3.0 * ac * i5 + 15.0 * ac * z * z * i7;
  const Vec3 scale = {std::fabs(x) * (lambda2 + planar), std::fabs(y) * (lambda1 + planar),
                      std::fabs(z) * (1.0 + i3 + 9.0 * ac * i5 + 15.0 * ac * z * z * i7)};
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    if (g[k] == 0.0) continue;
    worst = std::max(worst, std::fabs(g[k]) / scale[k]);
  }
  return worst;
}

double approx_z_distance(double r3, double c20) {
  if (!(c20 <= 0.0)) throw Error(Errc::invalid_argument, "c20 must be <= 0");
  return r3 * std::sqrt(-3.0 * c20);
}

std::array<std::complex<double>, 2> quartet_roots(double a_coef, double b_coef, double disc) {
  using cd = std::complex<double>;
  if (disc >= 0.0) {
    auto root_of_real = [](double s) {
      return s >= 0.0 ? cd(std::sqrt(s), 0.0) : cd(0.0, std::sqrt(-s));
    };
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (a_coef + (a_coef >= 0.0 ? sq : -sq));
    if (q == 0.0) return {cd(0.0, 0.0), cd(0.0, 0.0)};
    return {root_of_real(q), root_of_real(b_coef / q)};
  }
  // s = alpha +- i beta; sqrt(alpha + i beta) = a + ib by half-angle formulas.
  const double alpha = -0.5 * a_coef;
  const double beta = 0.5 * std::sqrt(-disc);
  const double m = std::hypot(alpha, beta);
  double a = 0.0, b = 0.0;
  if (alpha >= 0.0) {
    a = std::sqrt(0.5 * (m + alpha));
    b = beta / (2.0 * a);
  } else {
    b = std::copysign(std::sqrt(0.5 * (m - alpha)), beta);
    a = beta / (2.0 * b);
  }
  return {cd(a, b), cd(a, -b)};
}

StabilityClass classify(const std::array<std::complex<double>, 6>& ev) {
  int imaginary = 0, real = 0, complex = 0;
  for (const auto& z : ev) {
    const double re = std::fabs(z.real());
    const double im = std::fabs(z.imag());
    if (re <= 1e-9 * (1.0 + im)) {
      ++imaginary;
    } else if (im <= 1e-9 * (1.0 + re)) {
      ++real;
    } else {
      ++complex;
    }
  }
  if (imaginary == 6) return StabilityClass::center_center_center;
  if (imaginary == 4 && real == 2) return StabilityClass::center_center_saddle;
  if (imaginary == 2 && complex == 4) return StabilityClass::center_complex_saddle;
  return StabilityClass::other;
}

EquilibriumReport stability_spectrum(EquilibriumReport rep, double lambda1, double lambda2,
                                     double c) {
  const int k = static_cast<int>(rep.axis);
  for (int j = 0; j < 3; ++j) {
    if (j != k && rep.location[j] != 0.0) {
      throw Error(Errc::not_an_equilibrium, "location is off the " +
                                                std::string(axis_name(rep.axis)) + " axis");
    }
  }
  const double resid = scaled_gradient_residual(rep.location, lambda1, lambda2, c);
  if (!(resid <= 1e-10)) {
    throw Error(Errc::not_an_equilibrium,
                "scaled gradient residual " + std::to_string(resid) + " exceeds 1e-10");
  }

  const Mat3 h = hill::hessian(rep.location, lambda1, lambda2, c);
  const double oxx = h[0][0], oyy = h[1][1], ozz = h[2][2];
  rep.hessian_diag = {oxx, oyy, ozz};
  rep.a_coef = 4.0 - oxx - oyy;
  rep.b_coef = oxx * oyy;
  const double dd = oxx - oyy;
  rep.disc = dd * dd - 8.0 * (oxx + oyy) + 16.0;

  const auto q = quartet_roots(rep.a_coef, rep.b_coef, rep.disc);
  const std::complex<double> vz =
      ozz >= 0.0 ? std::complex<double>(std::sqrt(ozz), 0.0) : std::complex<double>(0.0, std::sqrt(-ozz));
  rep.eigenvalues = {q[0], -q[0], q[1], -q[1], vz, -vz};
  rep.stability = classify(rep.eigenvalues);
  rep.completed = true;
  return rep;
}

std::array<std::complex<double>, 6> dense_eigenvalues(const EquilibriumReport& rep) {
  // Axis points have no mixed second derivatives, so the diagonal is the Hessian.
  Eigen::Matrix<double, 6, 6> j = Eigen::Matrix<double, 6, 6>::Zero();
  j.topRightCorner<3, 3>().setIdentity();
  for (int k = 0; k < 3; ++k) j(3 + k, k) = rep.hessian_diag[k];
  j(3, 4) = 2.0;
  j(4, 3) = -2.0;
  Eigen::EigenSolver<Eigen::Matrix<double, 6, 6>> solver(j, false);
  std::array<std::complex<double>, 6> out{};
  for (int k = 0; k < 6; ++k) out[k] = solver.eigenvalues()[k];
  return out;
}

namespace {

double directed(const std::array<std::complex<double>, 6>& from,
                const std::array<std::complex<double>, 6>& to) {
  double worst = 0.0;
  for (const auto& a : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& b : to) best = std::min(best, std::abs(a - b) / std::max(1.0, std::abs(a)));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double eigensolver_cross_check(const EquilibriumReport& rep) {
  if (!rep.completed) throw Error(Errc::invalid_argument, "report has no spectrum yet");
  const auto dense = dense_eigenvalues(rep);
  return std::max(directed(rep.eigenvalues, dense), directed(dense, rep.eigenvalues));
}

SeriesCoefficients series_coefficients(double mu, double m3) {
  if (!(mu > 0.0 && mu <= 0.5)) throw Error(Errc::invalid_argument, "mu must lie in (0, 1/2]");
  SeriesCoefficients s{};
  const double g = mu - mu * mu;
  s.d0 = std::sqrt(1.0 - 3.0 * g);
  s.d1 = -2.0 * g * std::cbrt(m3 * m3) / s.d0;
  s.lambda10 = 1.5 * (1.0 - s.d0);
  s.lambda20 = 1.5 * (1.0 + s.d0);

  s.r_y0 = std::cbrt(1.0 / s.lambda10);
  s.r_y1 = (-1.0 + s.d1 * std::pow(s.r_y0, 5) / 2.0) / s.r_y0;
  s.alpha = 1.0 / (s.r_y0 * s.r_y0 * s.r_y0);
  s.beta = -3.0 * s.r_y1 / std::pow(s.r_y0, 4);

  s.r_x0 = std::cbrt(1.0 / s.lambda20);
  s.r_x1 = (-1.0 - s.d1 * std::pow(s.r_x0, 5) / 2.0) / s.r_x0;
  s.alpha_prime = 1.0 / (s.r_x0 * s.r_x0 * s.r_x0);
  s.beta_prime = -3.0 * s.r_x1 / std::pow(s.r_x0, 4);
  return s;
}

HillParams hill_params_for(double mu, double m3, double c) {
  HillParams p{};
  p.mu = mu;
  p.m3 = m3;
  p.c = c;
  // 1 + 3C with C = -m3^(2/3) c.
  const double three_c = -3.0 * std::cbrt(m3 * m3) * c;
  p.v = 1.0 + std::expm1(-std::log1p(three_c) / 3.0);
  const auto eig = hill::rotation_eigenvalues(mu, p.v);
  p.lambda1 = eig.lambda1;
  p.lambda2 = eig.lambda2;
  return p;
}

namespace {

EquilibriumReport solve_at(Axis axis, double mu, double c, double m3) {
  const auto hp = hill_params_for(mu, m3, c);
  auto rep = find_equilibrium(axis, hp.lambda1, hp.lambda2, c);
  return stability_spectrum(rep, hp.lambda1, hp.lambda2, c);
}

bool expected_pattern(Axis axis, const EquilibriumReport& r) {
  switch (axis) {
    case Axis::x: return r.a_coef < 0.0 && r.b_coef < 0.0 && r.disc > 0.0;
    case Axis::y: return r.a_coef > 0.0 && r.b_coef > 0.0;
    case Axis::z: return r.a_coef < 0.0 && r.disc < 0.0 && r.hessian_diag[2] < 0.0;
  }
  return false;
}

ClassificationTable classify_impl(Axis axis, const std::vector<double>& mu_grid, double c,
                                  double m3, bool parallel) {
  for (double mu : mu_grid) {
    if (!(mu > 0.0 && mu <= 0.5)) throw Error(Errc::invalid_argument, "mu grid must lie in (0, 1/2]");
  }
  ClassificationTable t;
  t.axis = axis;
  t.c = c;
  t.rows = index_map<ClassificationRow>(
      mu_grid.size(),
      [&](std::size_t i) {
        const auto r = solve_at(axis, mu_grid[i], c, m3);
        return ClassificationRow{mu_grid[i], r.r_star, r.a_coef, r.b_coef, r.disc, r.stability,
                                 expected_pattern(axis, r)};
      },
      parallel);

  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
    if ((t.rows[i].disc > 0.0) != (t.rows[i + 1].disc > 0.0)) {
      if (t.sign_changes == 0) t.mu_star_bracket = std::array<double, 2>{t.rows[i].mu, t.rows[i + 1].mu};
      ++t.sign_changes;
    }
  }
  if (axis == Axis::y && t.mu_star_bracket) {
    auto disc = [&](double mu) { return solve_at(axis, mu, c, m3).disc; };
    const auto [lo, hi] = *t.mu_star_bracket;
    t.mu_star = roots::bisect(disc, {std::min(lo, hi), std::max(lo, hi)},
                              1e-10 / std::max(lo, hi));
  }
  return t;
}

KreinTable krein_impl(const std::vector<double>& r_grid, double lambda1, double lambda2,
                      bool parallel) {
  KreinTable t;
  t.rows = index_map<KreinRow>(
      r_grid.size(),
      [&](std::size_t i) {
        const double r = r_grid[i];
        if (!(r > 0.0)) throw Error(Errc::invalid_argument, "r_z must be positive");
        const double c = (-r * r - std::pow(r, 5)) / 6.0;
        EquilibriumReport rep;
        rep.axis = Axis::z;
        rep.r_star = r;
        rep.location = {0.0, 0.0, r};
        rep = stability_spectrum(rep, lambda1, lambda2, c);
        return KreinRow{r, c, rep.eigenvalues[0].real(), rep.eigenvalues[0].imag()};
      },
      parallel);

  if (t.rows.empty()) return t;
  const double sign0 = std::copysign(1.0, t.rows.front().a);
  std::vector<std::pair<double, double>> by_r;
  for (const auto& row : t.rows) {
    const double dev = std::fabs(std::fabs(row.b) - 1.0);
    t.max_b_deviation = std::max(t.max_b_deviation, dev);
    if (row.a == 0.0) t.a_nonzero = false;
    if (std::copysign(1.0, row.a) != sign0) t.a_sign_constant = false;
    by_r.emplace_back(row.r_z, dev);
  }
  std::sort(by_r.begin(), by_r.end());
  const double slack = 4.0 * std::numeric_limits<double>::epsilon();
  for (std::size_t i = 0; i + 1 < by_r.size(); ++i) {
    if (by_r[i + 1].second < by_r[i].second - slack) t.deviation_monotone = false;
  }
  return t;
}

}  // namespace

ClassificationTable classify_over_parameters(Axis axis, const std::vector<double>& mu_grid,
                                             double c, double m3) {
  return classify_impl(axis, mu_grid, c, m3, true);
}

ClassificationTable classify_over_parameters_serial(Axis axis, const std::vector<double>& mu_grid,
                                                    double c, double m3) {
  return classify_impl(axis, mu_grid, c, m3, false);
}

KreinTable krein_limit_check(const std::vector<double>& r_grid, double lambda1, double lambda2) {
  return krein_impl(r_grid, lambda1, lambda2, true);
}

KreinTable krein_limit_check_serial(const std::vector<double>& r_grid, double lambda1,
                                    double lambda2) {
  return krein_impl(r_grid, lambda1, lambda2, false);
}

}  // namespace hill4::eq
