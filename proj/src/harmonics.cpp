#include "hill4/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hill4/error.hpp"

namespace hill4::harmonics {

EllipsoidShape hektor_ellipsoid() { return {208.0, 65.5, 60.0, 92.0}; }

HarmonicSet::HarmonicSet(int max_degree, std::vector<Entry> entries)
    : max_degree_(max_degree), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& x, const Entry& y) {
    return x.n != y.n ? x.n < y.n : x.m < y.m;
  });
}

double HarmonicSet::coefficient(int n, int m) const {
  if (n < 0 || m < 0 || m > n || n > max_degree_ || n % 2 != 0 || m % 2 != 0) return 0.0;
  const auto it = std::find_if(entries_.begin(), entries_.end(),
                               [&](const Entry& e) { return e.n == n && e.m == m; });
  return it == entries_.end() ? 0.0 : it->value;
}

namespace {

void validate(const EllipsoidShape& s) {
  if (!(s.c > 0.0 && s.b >= s.c && s.a >= s.b && std::isfinite(s.a))) {
    throw Error(Errc::invalid_argument, "ellipsoid must satisfy a >= b >= c > 0");
  }
  if (!(s.reference_radius > 0.0 && std::isfinite(s.reference_radius))) {
    throw Error(Errc::invalid_argument, "reference radius must be positive");
  }
}

// lo! / hi! for lo <= hi as a running product of reciprocals.
double factorial_ratio(int lo, int hi) {
  double r = 1.0;
  for (int k = lo + 1; k <= hi; ++k) r /= k;
  return r;
}

double factorial(int n) { return 1.0 / factorial_ratio(0, n); }

}  // namespace

HarmonicSet ellipsoid_coefficients(const EllipsoidShape& shape, int max_degree) {
  validate(shape);
  if (max_degree < 2 || max_degree % 2 != 0) {
    throw Error(Errc::invalid_argument,
                "max_degree must be even and >= 2, got " + std::to_string(max_degree));
  }

  // Work in units of the reference radius so every power is dimensionless.
  const double r2 = shape.reference_radius * shape.reference_radius;
  const double split = (shape.a * shape.a - shape.b * shape.b) / r2;
  const double flat = (shape.c * shape.c - 0.5 * (shape.a * shape.a + shape.b * shape.b)) / r2;

  std::vector<HarmonicSet::Entry> entries;
  entries.push_back({0, 0, 1.0});
  for (int p = 1; 2 * p <= max_degree; ++p) {
    for (int q = 0; q <= p; ++q) {
      // 3 p! (2p-2q)! / (4^q (2p+3) (2p+1)!) (2 - delta_0q)
      double prefactor = 3.0 * factorial_ratio(p, 2 * p + 1) * factorial(2 * p - 2 * q) /
                         (std::pow(4.0, q) * (2 * p + 3));
      if (q != 0) prefactor *= 2.0;

      double sum = 0.0;
      for (int i = 0; 2 * i <= p - q; ++i) {
        const double num = std::pow(split, q + 2 * i) * std::pow(flat, p - q - 2 * i);
        const double den = std::pow(16.0, i) * factorial(p - q - 2 * i) * factorial(q + i) *
                           factorial(i);
        sum += num / den;
      }
      entries.push_back({2 * p, 2 * q, prefactor * sum});
    }
  }
  return HarmonicSet(max_degree, std::move(entries));
}

std::pair<double, double> c20_c22(const EllipsoidShape& shape) {
  validate(shape);
  const double a2 = shape.a * shape.a;
  const double b2 = shape.b * shape.b;
  const double c2 = shape.c * shape.c;
  const double denom = 5.0 * shape.reference_radius * shape.reference_radius;
  return {(c2 - a2 / 2.0 - b2 / 2.0) / denom, (a2 / 4.0 - b2 / 4.0) / denom};
}

double j2_potential(const Vec3& point, double gm, double radius, double c20) {
  const double r = norm(point);
  if (r == 0.0) throw Error(Errc::singular_origin, "J2 potential evaluated at the origin");
  const double s = point[2] / r;
  const double q = radius / r;
  return gm / r * (1.0 + q * q * (c20 / 2.0) * (3.0 * s * s - 1.0));
}

Vec3 j2_gradient(const Vec3& point, double gm, double radius, double c20) {
  const double r2 = dot(point, point);
  if (r2 == 0.0) throw Error(Errc::singular_origin, "J2 gradient evaluated at the origin");
  const double r = std::sqrt(r2);
  const double r3 = r2 * r;
  const double r5 = r3 * r2;
  const double r7 = r5 * r2;
  const double k = gm * radius * radius * c20 / 2.0;
  const double z = point[2];
  const double radial = -gm / r3 + k * (3.0 / r5 - 15.0 * z * z / r7);
  Vec3 g = radial * point;
  g[2] += k * 6.0 * z / r5;
  return g;
}

}  // namespace hill4::harmonics
