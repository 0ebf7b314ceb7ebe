#include "nmapgen/relight.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nmapgen {

void validate(const LightConfig& light) {
  const Attenuation& a = light.attenuation;
  if (a.constant < 0.0 || a.linear < 0.0 || a.quadratic < 0.0 ||
      !(a.constant + a.linear + a.quadratic > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "attenuation coefficients must be >= 0 with a positive sum");
  }
  if (!(light.ambient >= 0.0 && light.ambient <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "ambient must lie in [0,1]");
  }
  for (double c : {light.color.x, light.color.y, light.color.z}) {
    if (!(c >= 0.0 && c <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "light color channels must lie in [0,1]");
    }
  }
  for (double c : {light.position.x, light.position.y, light.position.z}) {
    if (!std::isfinite(c)) {
      throw Error(ErrorCode::kInvalidArgument, "light position must be finite");
    }
  }
}

LightConfig standard_validation_light(int width, int height) {
  LightConfig light;
  light.position = {double(width), 0.0, double(std::max(width, height))};
  light.color = {1.0, 1.0, 1.0};
  light.ambient = 0.2;
  light.attenuation = {};
  return light;
}

LightSample sample_light(int x, int y, Vec3 normal, const LightConfig& light) noexcept {
  const Vec3 pixel{x + 0.5, y + 0.5, 0.0};
  const Vec3 offset = light.position - pixel;
  const double d = length(offset);
  // Image y grows downward; normals use +Y up.
  const Vec3 to_light = normalized_or({offset.x, -offset.y, offset.z}, Vec3{}, 1e-12);
  const Attenuation& a = light.attenuation;
  return {dot(normal, to_light), 1.0 / (a.constant + a.linear * d + a.quadratic * d * d)};
}

std::uint8_t shade_channel(std::uint8_t albedo, double ambient, double diffuse,
                           double light_channel) noexcept {
  const double v = (albedo / 255.0) * (ambient + diffuse * light_channel);
  return static_cast<std::uint8_t>(std::floor(std::clamp(v, 0.0, 1.0) * 255.0 + 0.5));
}

RasterImage shade(const RasterImage& sprite, const NormalField& normals,
                  const LightConfig& light) {
  if (!sprite.same_size(normals)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "sprite is " + std::to_string(sprite.width()) + "x" +
                    std::to_string(sprite.height()) + " but normal map is " +
                    std::to_string(normals.width()) + "x" + std::to_string(normals.height()));
  }
  validate(light);

  RasterImage out = sprite;
  for (int y = 0; y < sprite.height(); ++y) {
    for (int x = 0; x < sprite.width(); ++x) {
      const Rgba albedo = sprite.pixel(x, y);
      if (albedo.a == 0) continue;
      const LightSample s = sample_light(x, y, normals(x, y), light);
      const double diffuse = std::max(0.0, s.n_dot_l) * s.attenuation;
      out.set_pixel(x, y,
                    {shade_channel(albedo.r, light.ambient, diffuse, light.color.x),
                     shade_channel(albedo.g, light.ambient, diffuse, light.color.y),
                     shade_channel(albedo.b, light.ambient, diffuse, light.color.z), albedo.a});
    }
  }
  return out;
}

}  // namespace nmapgen
