#include "nmapgen/normal_codec.hpp"

#include <algorithm>
#include <cmath>

namespace nmapgen {
namespace {

// A decoded vector shorter than one quantisation step carries no direction.
constexpr double kDegenerateLength = 1.0 / 127.5;

}  // namespace

std::uint8_t encode_component(double c) noexcept {
  const double scaled = std::floor(255.0 * (c + 1.0) / 2.0 + 0.5);
  return static_cast<std::uint8_t>(std::clamp(scaled, 0.0, 255.0));
}

double decode_component(std::uint8_t byte) noexcept { return byte / 127.5 - 1.0; }

Rgba encode_normal(Vec3 n) noexcept {
  return {encode_component(n.x), encode_component(n.y), encode_component(n.z), 255};
}

Vec3 decode_normal(Rgba c) noexcept {
  const Vec3 raw{decode_component(c.r), decode_component(c.g), decode_component(c.b)};
  return normalized_or(raw, kUpNormal, kDegenerateLength);
}

RasterImage encode_normals(const NormalField& normals) {
  RasterImage out(normals.width(), normals.height());
  for (int y = 0; y < normals.height(); ++y) {
    for (int x = 0; x < normals.width(); ++x) {
      out.set_pixel(x, y, encode_normal(normals(x, y)));
    }
  }
  return out;
}

NormalField decode_normals(const RasterImage& img) {
  NormalField out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      out(x, y) = decode_normal(img.pixel(x, y));
    }
  }
  return out;
}

}  // namespace nmapgen
