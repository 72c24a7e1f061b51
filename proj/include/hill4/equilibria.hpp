#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "hill4/vec.hpp"

namespace hill4::eq {

enum class Axis { x, y, z };

enum class StabilityClass {
  center_center_center,
  center_center_saddle,
  center_complex_saddle,
  other,
};

std::string_view axis_name(Axis a) noexcept;
std::string_view class_name(StabilityClass s) noexcept;

struct EquilibriumReport {
  Axis axis = Axis::x;
  double r_star = 0.0;
  Vec3 location{};  // on the positive half-axis; the mirror point is -location
  bool completed = false;

  // Filled by stability_spectrum.
  Vec3 hessian_diag{};  // (Oxx, Oyy, Ozz)
  double a_coef = 0.0;  // A = 4 - Oxx - Oyy
  double b_coef = 0.0;  // B = Oxx Oyy
  double disc = 0.0;    // D = A^2 - 4B
  // Two +- pairs from the planar quartic, then the vertical pair.
  std::array<std::complex<double>, 6> eigenvalues{};
  StabilityClass stability = StabilityClass::other;
};

// h_A, h_B (planar axes, increasing) and h_C (vertical axis, decreasing).
double h_axis(Axis axis, double r, double lambda1, double lambda2, double c);
double h_axis_derivative(Axis axis, double r, double lambda1, double lambda2, double c);

// Unique positive root of the axis equation. Requires c <= 0; the z axis needs
// c < 0 and throws Error(no_z_equilibrium) otherwise.
EquilibriumReport find_equilibrium(Axis axis, double lambda1, double lambda2, double c);

// max_i |grad_i| / (sum of |terms| of grad_i): gradient residual in units of the
// rounding scale of each component.
double scaled_gradient_residual(const Vec3& q, double lambda1, double lambda2, double c);

// r3 sqrt(-3 c20), in whatever unit r3 is given.
double approx_z_distance(double r3, double c20);

// Hessian, quartic coefficients, eigenvalues and class. Throws
// Error(not_an_equilibrium) when the location is not critical.
EquilibriumReport stability_spectrum(EquilibriumReport report, double lambda1, double lambda2,
                                     double c);

// Square roots of the two roots of s^2 + A s + B = 0, one per pair, written
// out without cancellation. D = A^2 - 4B must be supplied by the caller: at
// the vertical equilibria A^2 and 4B agree to eight digits, so it has to come
// from (Oxx - Oyy)^2 - 8(Oxx + Oyy) + 16 instead. When D < 0 the roots are
// a + ib and a - ib.
std::array<std::complex<double>, 2> quartet_roots(double a_coef, double b_coef, double disc);

StabilityClass classify(const std::array<std::complex<double>, 6>& eigenvalues);

// Dense eigen-solve of the 6x6 linearization; returns the Hausdorff distance
// between the two root sets, each distance scaled by max(1, |root|).
double eigensolver_cross_check(const EquilibriumReport& report);
std::array<std::complex<double>, 6> dense_eigenvalues(const EquilibriumReport& report);

struct SeriesCoefficients {
  double d0, d1;
  double lambda10, lambda20;
  double r_y0, r_y1;
  double r_x0, r_x1;
  double alpha, beta;              // 1/r_y^3 = alpha + beta c + O(c^2)
  double alpha_prime, beta_prime;  // 1/r_x^3 likewise
};

SeriesCoefficients series_coefficients(double mu, double m3);

// lambda1, lambda2 consistent with c: v = (1 - 3 m3^(2/3) c)^(-1/3).
struct HillParams {
  double mu, m3, c, v, lambda1, lambda2;
};
HillParams hill_params_for(double mu, double m3, double c);

struct ClassificationRow {
  double mu;
  double r_star;
  double a_coef, b_coef, disc;
  StabilityClass stability;
  bool pattern_ok;  // the axis' expected signs of A, B, D (D unconstrained on y)
};

struct ClassificationTable {
  Axis axis;
  double c;
  std::vector<ClassificationRow> rows;
  int sign_changes = 0;  // of D across consecutive grid points
  // y axis only: bisected root of D(mu) inside the first sign-change bracket.
  std::optional<double> mu_star;
  std::optional<std::array<double, 2>> mu_star_bracket;
};

// Rows are emitted in grid order; the parallel version must match the serial one.
ClassificationTable classify_over_parameters(Axis axis, const std::vector<double>& mu_grid,
                                             double c, double m3);
ClassificationTable classify_over_parameters_serial(Axis axis, const std::vector<double>& mu_grid,
                                                    double c, double m3);

struct KreinRow {
  double r_z;
  double c;  // (-r^2 - r^5)/6
  double a;  // real part of the quartet
  double b;  // imaginary part
};

struct KreinTable {
  std::vector<KreinRow> rows;
  double max_b_deviation = 0.0;  // max | |b| - 1 |
  bool a_sign_constant = true;
  bool a_nonzero = true;
  bool deviation_monotone = true;  // | |b| - 1 | non-increasing as r_z decreases
};

KreinTable krein_limit_check(const std::vector<double>& r_grid, double lambda1, double lambda2);
KreinTable krein_limit_check_serial(const std::vector<double>& r_grid, double lambda1,
                                    double lambda2);

}  // namespace hill4::eq
