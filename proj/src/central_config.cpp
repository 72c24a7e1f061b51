#include "hill4/central_config.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hill4/error.hpp"
#include "hill4/roots.hpp"

namespace hill4::cc {

UnitShape solve_shape_unit_u(double big_c) {
  if (!(big_c >= 0.0) || !std::isfinite(big_c)) {
    throw Error(Errc::invalid_argument, "big_c must be finite and non-negative");
  }
  UnitShape s;
  s.v_defect = std::expm1(-std::log1p(3.0 * big_c) / 3.0);
  s.v = 1.0 + s.v_defect;
  s.omega_sq = 1.0 + 3.0 * big_c;
  s.omega = std::sqrt(s.omega_sq);
  return s;
}

std::array<double, 3> stationarity_residuals(double big_c, double u, double v, double omega_sq) {
  const double long_side = -1.0 / (u * u) - 3.0 * big_c / (u * u * u * u) + omega_sq * u;
  return {-1.0 / (v * v) + omega_sq * v, long_side, long_side};
}

InertiaShape solve_shape_fixed_inertia(double m1, double m2, double m3, double big_c,
                                       double inertia_bar) {
  if (!(inertia_bar > 0.0) || !std::isfinite(inertia_bar)) {
    throw Error(Errc::no_bracket, "moment of inertia must be positive");
  }
  if (!(m1 > 0.0 && m2 > 0.0 && m3 > 0.0) || !(big_c >= 0.0)) {
    throw Error(Errc::invalid_argument, "masses must be positive and big_c non-negative");
  }
  const double a = m1 * m1 * m1 * m2 * m2 * m2;
  const double b = 3.0 * big_c;
  const double cc = m1 * m3 + m2 * m3;

  auto diff = [&](double z) {
    const double l = inertia_bar - cc * z;
    return a * std::pow(z, 5) / ((z + b) * (z + b)) - l * l * l;
  };
  auto slope = [&](double z) {
    const double zb = z + b;
    const double l = inertia_bar - cc * z;
    return a * (3.0 * std::pow(z, 6) + 8.0 * b * std::pow(z, 5) + 5.0 * b * b * std::pow(z, 4)) /
               (zb * zb * zb * zb) +
           3.0 * cc * l * l;
  };

  // k(z) ~ a z^3 once z >> b and ~ a z^5 / b^2 below; both against l ~ I^3.
  const double upper = inertia_bar / cc;
  double lower = std::cbrt(inertia_bar * inertia_bar * inertia_bar / a);
  if (b > 0.0) lower = std::min(lower, std::pow(std::pow(inertia_bar, 3) * b * b / a, 0.2));
  lower = std::min(lower, upper) * 1e-3;

  const int per_decade = 64;
  const int n = std::max(2, static_cast<int>(std::ceil(std::log10(upper / lower) * per_decade)));
  const double ratio = std::pow(upper / lower, 1.0 / n);

  int changes = 0;
  roots::Bracket first{0.0, 0.0};
  double z_prev = lower;
  double f_prev = diff(z_prev);
  for (int i = 1; i <= n; ++i) {
    const double z = (i == n) ? upper : lower * std::pow(ratio, i);
    const double f = diff(z);
    if ((f > 0.0) != (f_prev > 0.0)) {
      if (changes == 0) first = {z_prev, z};
      ++changes;
    }
    z_prev = z;
    f_prev = f;
  }
  if (changes == 0) throw Error(Errc::no_bracket, "k(z) - l(z) has no sign change on the scan");

  InertiaShape out;
  out.z = roots::bisect(diff, first, 1e-15, slope, 2);
  out.u = std::sqrt(out.z);
  out.v = std::cbrt(std::pow(out.u, 5) / (out.z + b));
  out.sign_changes = changes;
  return out;
}

Vertices vertex_positions(double m2, double m3, double v) {
  const double v2 = v * v;
  const double s = std::sqrt(v2 * m2 * m2 + v2 * m2 * m3 + m3 * m3);
  const double w = v * std::sqrt(4.0 - v2);
  const double shared = 2.0 * v2 * m2 * m2 + 2.0 * v2 * m2 * m3 + 2.0 * m3 * m3;
  Vertices p;
  p[0] = {-s, 0.0};
  p[1] = {(2.0 * v2 * m2 + v2 * m3 - shared) / (2.0 * s), -w * m3 / (2.0 * s)};
  p[2] = {(v2 * m2 + 2.0 * m3 - shared) / (2.0 * s), w * m2 / (2.0 * s)};
  return p;
}

Vertices baltagiannis_positions(double m1, double m2, double m3) {
  const double k = m2 * (m3 - m2) + m1 * (m2 + 2.0 * m3);
  if (k == 0.0) throw Error(Errc::degenerate_k, "K = m2(m3 - m2) + m1(m2 + 2 m3) is zero");
  const double t = std::sqrt(m2 * m2 + m2 * m3 + m3 * m3);
  const double ak = std::fabs(k);
  const double root3 = std::sqrt(3.0);
  const double shape = std::sqrt(m2 * m2 * m2 / (t * t));
  Vertices p;
  p[0] = {-ak * t / k, 0.0};
  p[1] = {ak * ((m2 - m3) * m3 + m1 * (2.0 * m2 + m3)) / (2.0 * k * t),
          -root3 * m3 / (2.0 * std::pow(m2, 1.5)) * shape};
  p[2] = {ak / (2.0 * t), root3 / (2.0 * std::sqrt(m2)) * shape};
  return p;
}

TriangleConfig build_triangle(const SystemParams& params) {
  TriangleConfig t;
  t.u = 1.0;
  t.v = params.v;
  t.omega = params.omega;
  t.masses = {params.m1, params.m2, params.m3};
  t.vertices = vertex_positions(params.m2, params.m3, params.v);
  return t;
}

double ConstraintResiduals::max_abs() const {
  return std::max({std::fabs(d12), std::fabs(d13), std::fabs(d23), std::fabs(bary_x),
                   std::fabs(bary_y), std::fabs(mass_sum), std::fabs(y1)});
}

ConstraintResiduals constraint_residuals(const TriangleConfig& t) {
  const auto& p = t.vertices;
  const auto& m = t.masses;
  auto dist = [&](int i, int j) { return std::hypot(p[i][0] - p[j][0], p[i][1] - p[j][1]); };
  ConstraintResiduals r;
  r.d12 = dist(0, 1) - t.v;
  r.d13 = dist(0, 2) - t.u;
  r.d23 = dist(1, 2) - t.u;
  r.bary_x = m[0] * p[0][0] + m[1] * p[1][0] + m[2] * p[2][0];
  r.bary_y = m[0] * p[0][1] + m[1] * p[1][1] + m[2] * p[2][1];
  r.mass_sum = m[0] + m[1] + m[2] - 1.0;
  r.y1 = p[0][1];
  return r;
}

}  // namespace hill4::cc
