#include "nmapgen/gaussian_blur.hpp"

#include <cmath>
#include <string>

namespace nmapgen {

std::vector<double> gaussian_kernel(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::kInvalidArgument,
                "gaussian sigma must be finite and >= 0, got " + std::to_string(sigma));
  }
  if (sigma == 0.0) return {1.0};

  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-(double(i) * i) / (2.0 * sigma * sigma));
    k[i + radius] = w;
    sum += w;
  }
  for (double& w : k) w /= sum;
  return k;
}

ScalarField gaussian_blur(const ScalarField& src, double sigma) {
  const std::vector<double> k = gaussian_kernel(sigma);
  if (k.size() == 1) return src;
  const int radius = static_cast<int>(k.size() / 2);

  ScalarField horizontal(src.width(), src.height());
  for (int y = 0; y < src.height(); ++y) {
    for (int x = 0; x < src.width(); ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) acc += k[i + radius] * src.clamped(x + i, y);
      horizontal(x, y) = acc;
    }
  }
  ScalarField out(src.width(), src.height());
  for (int y = 0; y < src.height(); ++y) {
    for (int x = 0; x < src.width(); ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) acc += k[i + radius] * horizontal.clamped(x, y + i);
      out(x, y) = acc;
    }
  }
  return out;
}

}  // namespace nmapgen
