#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>

namespace jetres::lattice {

using Vec3 = std::array<std::int64_t, 3>;

inline std::int64_t det(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline std::int64_t dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline bool is_zero(const Vec3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

inline std::int64_t content(const Vec3& a) {
  return std::gcd(std::gcd(a[0], a[1]), a[2]);
}

inline Vec3 primitive(const Vec3& a) {
  std::int64_t g = content(a);
  if (g <= 1) return a;
  return {a[0] / g, a[1] / g, a[2] / g};
}

inline bool in_closed_octant(const Vec3& a) {
  return a[0] >= 0 && a[1] >= 0 && a[2] >= 0 && !is_zero(a);
}

inline std::string to_string(const Vec3& a) {
  return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) +
         ")";
}

inline constexpr Vec3 e1{1, 0, 0};
inline constexpr Vec3 e2{0, 1, 0};
inline constexpr Vec3 e3{0, 0, 1};

}  // namespace jetres::lattice
