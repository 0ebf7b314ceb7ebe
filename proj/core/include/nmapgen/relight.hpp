#pragma once

#include "nmapgen/raster.hpp"

namespace nmapgen {

struct Attenuation {
  double constant = 1.0;
  double linear = 0.0;
  double quadratic = 0.0;
};

struct LightConfig {
  // Pixel units: x right, y down (image coordinates), z toward the viewer.
  Vec3 position{0.0, 0.0, 1.0};
  Vec3 color{1.0, 1.0, 1.0};
  double ambient = 0.2;
  Attenuation attenuation{};
};

void validate(const LightConfig& light);

/// White light at the image's upper-right corner, raised by the larger image
/// dimension, ambient 0.2, no attenuation.
LightConfig standard_validation_light(int width, int height);

// Lambert term and attenuation for a pixel centre, without albedo.
struct LightSample {
  double n_dot_l;
  double attenuation;
};
LightSample sample_light(int x, int y, Vec3 normal, const LightConfig& light) noexcept;

/// Shades one channel value (0..255) given the light sample.
std::uint8_t shade_channel(std::uint8_t albedo, double ambient, double diffuse,
                           double light_channel) noexcept;

/// Per-pixel Lambertian point light. Pixel centres sit at (x+0.5, y+0.5, 0).
/// Pixels with alpha 0 are copied unchanged; alpha is always preserved.
RasterImage shade(const RasterImage& sprite, const NormalField& normals,
                  const LightConfig& light);

}  // namespace nmapgen
