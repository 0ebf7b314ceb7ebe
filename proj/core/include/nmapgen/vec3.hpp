#pragma once

#include <cmath>

namespace nmapgen {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return {a.x * s, a.y * s, a.z * s}; }
  friend constexpr bool operator==(Vec3 a, Vec3 b) = default;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline double length(Vec3 v) { return std::sqrt(dot(v, v)); }

/// Unit vector along v, or `fallback` when |v| < min_length.
inline Vec3 normalized_or(Vec3 v, Vec3 fallback, double min_length = 1e-12) {
  const double len = length(v);
  if (!(len >= min_length)) return fallback;
  return v * (1.0 / len);
}

inline constexpr Vec3 kUpNormal{0.0, 0.0, 1.0};

}  // namespace nmapgen
