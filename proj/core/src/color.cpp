#include "nmapgen/color.hpp"

#include <algorithm>
#include <cmath>

namespace nmapgen {

double luma(Rgba c) noexcept {
  return (0.299 * c.r + 0.587 * c.g + 0.114 * c.b) / 255.0;
}

ScalarField to_grayscale(const RasterImage& img) {
  ScalarField out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      out(x, y) = luma(img.pixel(x, y));
    }
  }
  return out;
}

BinaryMask alpha_mask(const RasterImage& img, std::uint8_t threshold) {
  BinaryMask out(img.width(), img.height(), false);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      out(x, y) = img.pixel(x, y).a >= threshold;
    }
  }
  return out;
}

RasterImage mask_to_image(const BinaryMask& mask) {
  RasterImage out(mask.width(), mask.height());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      const std::uint8_t v = mask(x, y) ? 255 : 0;
      out.set_pixel(x, y, {v, v, v, 255});
    }
  }
  return out;
}

RasterImage scalar_to_image(const ScalarField& field, bool normalize) {
  double scale = 1.0;
  if (normalize) {
    const double peak = *std::max_element(field.values().begin(), field.values().end());
    scale = peak > 0.0 ? 1.0 / peak : 0.0;
  }
  RasterImage out(field.width(), field.height());
  for (int y = 0; y < field.height(); ++y) {
    for (int x = 0; x < field.width(); ++x) {
      const double v = std::clamp(field(x, y) * scale, 0.0, 1.0);
      const auto byte = static_cast<std::uint8_t>(std::floor(v * 255.0 + 0.5));
      out.set_pixel(x, y, {byte, byte, byte, 255});
    }
  }
  return out;
}

}  // namespace nmapgen
