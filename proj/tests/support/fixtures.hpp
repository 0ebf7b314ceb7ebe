#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// implementation paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "nmapgen/gradient.hpp"
#include "nmapgen/raster.hpp"

namespace nmapgen::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline int uniform_int(std::mt19937_64& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline ScalarField random_field(std::mt19937_64& g, int w, int h, double lo = 0.0,
                                double hi = 1.0) {
  ScalarField f(w, h);
  for (double& v : f.values()) v = uniform(g, lo, hi);
  return f;
}

inline BinaryMask random_mask(std::mt19937_64& g, int w, int h, double p_true) {
  BinaryMask m(w, h, false);
  std::bernoulli_distribution d(p_true);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) m(x, y) = d(g);
  return m;
}

inline RasterImage random_image(std::mt19937_64& g, int w, int h) {
  RasterImage img(w, h);
  for (auto& b : img.bytes()) b = static_cast<std::uint8_t>(uniform_int(g, 0, 255));
  return img;
}

inline Rgba random_opaque_color(std::mt19937_64& g) {
  return {static_cast<std::uint8_t>(uniform_int(g, 0, 255)),
          static_cast<std::uint8_t>(uniform_int(g, 0, 255)),
          static_cast<std::uint8_t>(uniform_int(g, 0, 255)), 255};
}

// Filled circle of `color` on a transparent black background.
inline RasterImage circle_sprite(int size, double cx, double cy, double radius, Rgba color) {
  RasterImage img(size, size, Rgba{0, 0, 0, 0});
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x)
      if (std::hypot(x - cx, y - cy) <= radius) img.set_pixel(x, y, color);
  return img;
}

// A few overlapping ellipses and rectangles in random colours on a
// transparent background, with a transparent margin of at least `margin`.
inline RasterImage random_sprite(std::mt19937_64& g, int size, int margin = 2) {
  RasterImage img(size, size, Rgba{0, 0, 0, 0});
  const int shapes = uniform_int(g, 2, 5);
  for (int s = 0; s < shapes; ++s) {
    const Rgba c = random_opaque_color(g);
    const double cx = uniform(g, margin + 3, size - margin - 4);
    const double cy = uniform(g, margin + 3, size - margin - 4);
    const double rx = uniform(g, 2.0, size / 3.0);
    const double ry = uniform(g, 2.0, size / 3.0);
    const bool ellipse = uniform_int(g, 0, 1) == 1;
    for (int y = margin; y < size - margin; ++y) {
      for (int x = margin; x < size - margin; ++x) {
        const double dx = (x - cx) / rx;
        const double dy = (y - cy) / ry;
        const bool inside = ellipse ? dx * dx + dy * dy <= 1.0
                                    : std::abs(dx) <= 1.0 && std::abs(dy) <= 1.0;
        if (inside) img.set_pixel(x, y, c);
      }
    }
  }
  return img;
}

inline RasterImage mirror_horizontal(const RasterImage& img) {
  RasterImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) out.set_pixel(img.width() - 1 - x, y, img.pixel(x, y));
  return out;
}

template <typename T>
Grid<T> mirror_horizontal(const Grid<T>& f) {
  Grid<T> out(f.width(), f.height());
  for (int y = 0; y < f.height(); ++y)
    for (int x = 0; x < f.width(); ++x) out(f.width() - 1 - x, y) = f(x, y);
  return out;
}

template <typename T>
Grid<T> transpose(const Grid<T>& f) {
  Grid<T> out(f.height(), f.width());
  for (int y = 0; y < f.height(); ++y)
    for (int x = 0; x < f.width(); ++x) out(y, x) = f(x, y);
  return out;
}

// Straight nested-loop correlation with explicit index clamping.
inline ScalarField brute_force_convolve(const ScalarField& src, const Kernel3x3& k) {
  const int w = src.width();
  const int h = src.height();
  ScalarField out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const int sx = std::min(std::max(x + j - 1, 0), w - 1);
          const int sy = std::min(std::max(y + i - 1, 0), h - 1);
          acc += k[i][j] * src.values()[static_cast<std::size_t>(sy) * w + sx];
        }
      }
      out(x, y) = acc;
    }
  }
  return out;
}

// All-pairs nearest-false-pixel search.
inline ScalarField brute_force_edt(const BinaryMask& m) {
  const int w = m.width();
  const int h = m.height();
  ScalarField out(w, h);
  bool any_false = false;
  for (bool b : m.values()) any_false = any_false || !b;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double best = std::numeric_limits<double>::infinity();
      for (int v = 0; v < h; ++v)
        for (int u = 0; u < w; ++u)
          if (!m(u, v)) best = std::min(best, std::hypot(double(x - u), double(y - v)));
      out(x, y) = any_false ? best : std::hypot(double(w), double(h));
    }
  }
  return out;
}

inline double angle_deg(Vec3 a, Vec3 b) {
  const double c = std::clamp(dot(a, b) / (length(a) * length(b)), -1.0, 1.0);
  return std::acos(c) * 180.0 / std::numbers::pi;
}

inline Vec3 random_upper_hemisphere(std::mt19937_64& g) {
  for (;;) {
    const Vec3 v{uniform(g, -1, 1), uniform(g, -1, 1), uniform(g, 0, 1)};
    const double len = length(v);
    if (len > 1e-3 && len <= 1.0) return v * (1.0 / len);
  }
}

// Analytic hemisphere h = sqrt(R^2 - r^2) / R centred at (cx, cy), 0 outside.
inline ScalarField hemisphere_heights(int size, double cx, double cy, double radius) {
  ScalarField h(size, size, 0.0);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
      if (r2 < radius * radius) h(x, y) = std::sqrt(radius * radius - r2) / radius;
    }
  }
  return h;
}

// Outward sphere normal at image pixel (x,y), +Y up.
inline Vec3 hemisphere_normal(int x, int y, double cx, double cy, double radius) {
  const double dx = x - cx;
  const double dy = y - cy;
  const double z = std::sqrt(std::max(0.0, radius * radius - dx * dx - dy * dy));
  return Vec3{dx, -dy, z} * (1.0 / radius);
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("nmapgen-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace nmapgen::testing
