#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nmapgen/grid.hpp"
#include "nmapgen/vec3.hpp"

namespace nmapgen {

struct Rgba {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  std::uint8_t a = 255;

  friend constexpr bool operator==(Rgba, Rgba) = default;
};

/// 8-bit RGBA image, row-major, four bytes per pixel.
class RasterImage {
 public:
  static constexpr int kChannels = 4;

  RasterImage(int width, int height, Rgba fill = Rgba{0, 0, 0, 0});
  RasterImage(int width, int height, std::vector<std::uint8_t> rgba_bytes);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  Rgba pixel(int x, int y) const noexcept {
    const std::uint8_t* p = &bytes_[offset(x, y)];
    return {p[0], p[1], p[2], p[3]};
  }
  void set_pixel(int x, int y, Rgba c) noexcept {
    std::uint8_t* p = &bytes_[offset(x, y)];
    p[0] = c.r;
    p[1] = c.g;
    p[2] = c.b;
    p[3] = c.a;
  }

  std::span<const std::uint8_t> bytes() const& noexcept { return bytes_; }
  std::span<std::uint8_t> bytes() & noexcept { return bytes_; }
  std::span<const std::uint8_t> bytes() const&& = delete;

  template <typename U>
  bool same_size(const Grid<U>& g) const noexcept {
    return width_ == g.width() && height_ == g.height();
  }
  bool same_size(const RasterImage& o) const noexcept {
    return width_ == o.width_ && height_ == o.height_;
  }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t offset(int x, int y) const noexcept {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)) *
           kChannels;
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> bytes_;
};

// Grayscale values and heights live in [0,1]; distance fields are >= 0.
using ScalarField = Grid<double>;
// Unit vectors, +X right, +Y up, +Z toward the viewer.
using NormalField = Grid<Vec3>;
using BinaryMask = Grid<bool>;

}  // namespace nmapgen
