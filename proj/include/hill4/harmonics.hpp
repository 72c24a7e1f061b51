#pragma once

#include <utility>
#include <vector>

#include "hill4/vec.hpp"

namespace hill4::harmonics {

// Homogeneous triaxial ellipsoid, a >= b >= c > 0, plus the reference radius
// that normalizes the coefficients. All lengths in the same unit.
struct EllipsoidShape {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double reference_radius = 0.0;
};

EllipsoidShape hektor_ellipsoid();

// Fully-unnormalized C_nm of the ellipsoid. Only even (n, m) are stored; every
// S_nm and every odd-index C_nm vanishes identically.
class HarmonicSet {
 public:
  struct Entry {
    int n;
    int m;
    double value;
  };

  HarmonicSet(int max_degree, std::vector<Entry> entries);

  int max_degree() const { return max_degree_; }
  const std::vector<Entry>& entries() const { return entries_; }

  // Returns 0 for odd indices, for m > n and for n above max_degree.
  double coefficient(int n, int m) const;

 private:
  int max_degree_;
  std::vector<Entry> entries_;  // ordered by (n, m)
};

// Closed-form sum for every C_{2p,2q} with 2p <= max_degree. max_degree must be
// even and >= 2; the shape must satisfy a >= b >= c > 0.
HarmonicSet ellipsoid_coefficients(const EllipsoidShape& shape, int max_degree);

// Degree-2 closed forms (C20, C22).
std::pair<double, double> c20_c22(const EllipsoidShape& shape);

// Gravitational potential truncated at the zonal J2 term, body-centred frame
// with the symmetry axis along z. Throws Error(singular_origin) at r = 0.
double j2_potential(const Vec3& point, double gm, double radius, double c20);
Vec3 j2_gradient(const Vec3& point, double gm, double radius, double c20);

}  // namespace hill4::harmonics
