#pragma once

#include <array>
#include <cmath>

namespace hill4 {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using State6 = std::array<double, 6>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3 operator*(double s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

// Symmetric 3x3 matrix stored in full.
using Mat3 = std::array<std::array<double, 3>, 3>;

}  // namespace hill4
