#include "nmapgen/gradient.hpp"

#include <cmath>
#include <string>

#include "nmapgen/color.hpp"

namespace nmapgen {

void validate(const SobelParams& p) {
  if (!(p.strength > 0.0) || !std::isfinite(p.strength)) {
    throw Error(ErrorCode::kInvalidArgument,
                "strength must be a positive finite number, got " + std::to_string(p.strength));
  }
}

ScalarField convolve3x3(const ScalarField& src, const Kernel3x3& kernel) {
  ScalarField out(src.width(), src.height());
  for (int y = 0; y < src.height(); ++y) {
    for (int x = 0; x < src.width(); ++x) {
      double acc = 0.0;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          acc += kernel[i][j] * src.clamped(x + j - 1, y + i - 1);
        }
      }
      out(x, y) = acc;
    }
  }
  return out;
}

GradientField sobel_gradients(const ScalarField& src) {
  // Same weights as kSobelX/kSobelY, summed as differences so flat regions
  // give exactly zero and mirrored inputs give exactly negated gradients.
  GradientField out(src.width(), src.height());
  for (int y = 0; y < src.height(); ++y) {
    for (int x = 0; x < src.width(); ++x) {
      auto at = [&](int dx, int dy) { return src.clamped(x + dx, y + dy); };
      const double gx = (at(1, -1) - at(-1, -1)) + 2.0 * (at(1, 0) - at(-1, 0)) +
                        (at(1, 1) - at(-1, 1));
      const double gy = (at(-1, 1) - at(-1, -1)) + 2.0 * (at(0, 1) - at(0, -1)) +
                        (at(1, 1) - at(1, -1));
      out(x, y) = {gx / 8.0, gy / 8.0};
    }
  }
  return out;
}

NormalField gradients_to_normals(const GradientField& g, const SobelParams& p) {
  validate(p);
  NormalField out(g.width(), g.height());
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      const Gradient d = g(x, y);
      out(x, y) = normalized_or({-d.gx * p.strength, d.gy * p.strength, 1.0}, kUpNormal);
    }
  }
  return out;
}

NormalField normal_from_height_map(const ScalarField& heights, const SobelParams& p) {
  validate(p);
  return gradients_to_normals(sobel_gradients(heights), p);
}

NormalField normal_from_color_map(const RasterImage& img, const SobelParams& p) {
  NormalField out = normal_from_height_map(to_grayscale(img), p);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (img.pixel(x, y).a < 128) out(x, y) = kUpNormal;
    }
  }
  return out;
}

ScalarField height_map_from_image(const RasterImage& img) {
  ScalarField out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      out(x, y) = img.pixel(x, y).r / 255.0;
    }
  }
  return out;
}

}  // namespace nmapgen
