#pragma once

#include <array>

#include "hill4/core_types.hpp"
#include "hill4/vec.hpp"

namespace hill4::cc {

// Unit-u solution of the isosceles configuration: r13 = r23 = 1.
struct UnitShape {
  double v;
  double v_defect;  // v - 1 without cancellation
  double omega;
  double omega_sq;
};

UnitShape solve_shape_unit_u(double big_c);

// The three distance-stationarity equations at (u, v, omega):
// -1/v^2 + omega^2 v and, twice, -1/u^2 - 3C/u^4 + omega^2 u.
std::array<double, 3> stationarity_residuals(double big_c, double u, double v, double omega_sq);

struct InertiaShape {
  double u;
  double v;
  double z;            // u^2, the root of k(z) = l(z)
  int sign_changes;    // of k - l over the scan grid; always 1 in theory
};

// Fixed moment of inertia m1 m2 v^2 + (m1 m3 + m2 m3) u^2 = inertia_bar.
// Throws Error(no_bracket) if inertia_bar <= 0 or no sign change is seen.
InertiaShape solve_shape_fixed_inertia(double m1, double m2, double m3, double big_c,
                                       double inertia_bar);

using Vertices = std::array<Vec2, 3>;

// Closed-form vertices with r13 = r23 = 1, r12 = v, barycentre at the origin,
// y1 = 0, x1 < 0 and the tertiary above the axis. m1 = 1 - m2 - m3.
Vertices vertex_positions(double m2, double m3, double v);

// Equivalent form for v = 1 (equilateral), used as a cross-check.
// Throws Error(degenerate_k) when K = m2(m3 - m2) + m1(m2 + 2 m3) vanishes.
Vertices baltagiannis_positions(double m1, double m2, double m3);

struct TriangleConfig {
  double u = 1.0;
  double v = 1.0;
  double omega = 1.0;
  std::array<double, 3> masses{};
  Vertices vertices{};
};

TriangleConfig build_triangle(const SystemParams& params);

struct ConstraintResiduals {
  double d12;     // |P1 P2| - v
  double d13;     // |P1 P3| - u
  double d23;     // |P2 P3| - u
  double bary_x;
  double bary_y;
  double mass_sum;
  double y1;

  double max_abs() const;
};

ConstraintResiduals constraint_residuals(const TriangleConfig& t);

}  // namespace hill4::cc
