#include "nmapgen/techniques.hpp"

#include <cmath>
#include <string>

#include "nmapgen/color.hpp"

namespace nmapgen {
namespace {

constexpr unsigned bit(Method m) { return 1u << static_cast<unsigned>(m); }

constexpr unsigned kSobelMethods = bit(Method::kSobelColor) | bit(Method::kSobelHeight);

// "strength" is shared by name; for bevel it drives the final Sobel stage.
const ParamSpec kSpecs[] = {
    {"strength", "gradient multiplier before normalisation (higher = steeper normals)", 1e-6,
     1e6, false, kSobelMethods | bit(Method::kBevel),
     [](const TechniqueParams& p, Method m) {
       return m == Method::kBevel ? p.bevel.sobel.strength : p.sobel.strength;
     },
     [](TechniqueParams& p, double v) {
       p.sobel.strength = v;
       p.bevel.sobel.strength = v;
     }},
    {"alpha_threshold", "minimum alpha counted as inside the silhouette", 0, 255, true,
     bit(Method::kBevel),
     [](const TechniqueParams& p, Method) { return double(p.bevel.alpha_threshold); },
     [](TechniqueParams& p, double v) { p.bevel.alpha_threshold = static_cast<std::uint8_t>(v); }},
    {"edge_low", "lower clip of the normalised edge magnitude", 0, 1, false, bit(Method::kBevel),
     [](const TechniqueParams& p, Method) { return p.bevel.edge_low; },
     [](TechniqueParams& p, double v) { p.bevel.edge_low = v; }},
    {"edge_high", "upper clip of the normalised edge magnitude", 0, 1, false, bit(Method::kBevel),
     [](const TechniqueParams& p, Method) { return p.bevel.edge_high; },
     [](TechniqueParams& p, double v) { p.bevel.edge_high = v; }},
    {"external_strength", "intensity of the silhouette distance field", 1e-3, 1e3, false,
     bit(Method::kBevel),
     [](const TechniqueParams& p, Method) { return p.bevel.external_strength; },
     [](TechniqueParams& p, double v) { p.bevel.external_strength = v; }},
    {"internal_strength", "intensity of the internal-edge distance field", 1e-3, 1e3, false,
     bit(Method::kBevel),
     [](const TechniqueParams& p, Method) { return p.bevel.internal_strength; },
     [](TechniqueParams& p, double v) { p.bevel.internal_strength = v; }},
    {"blend_weight", "weight of the internal distance field in the merge", 0, 1, false,
     bit(Method::kBevel),
     [](const TechniqueParams& p, Method) { return p.bevel.blend_weight; },
     [](TechniqueParams& p, double v) { p.bevel.blend_weight = v; }},
    {"gaussian_sigma", "gaussian smoothing of the merged height, in pixels", 0, 64, false,
     bit(Method::kBevel),
     [](const TechniqueParams& p, Method) { return p.bevel.gaussian_sigma; },
     [](TechniqueParams& p, double v) { p.bevel.gaussian_sigma = v; }},
    {"blue_level", "z weight before normalisation (higher = flatter)", 1, 255, true,
     bit(Method::kFourAngle),
     [](const TechniqueParams& p, Method) { return double(p.four_angle.blue_level); },
     [](TechniqueParams& p, double v) { p.four_angle.blue_level = static_cast<std::uint8_t>(v); }},
};

ScalarField red_channel(const RasterImage& img) { return height_map_from_image(img); }

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::kSobelColor:
      return "sobel-color";
    case Method::kSobelHeight:
      return "sobel-height";
    case Method::kBevel:
      return "bevel";
    case Method::kFourAngle:
      return "four-angle";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view to_string(MergeMode m) noexcept {
  return m == MergeMode::kOverlay ? "overlay" : "difference";
}

std::optional<MergeMode> parse_merge_mode(std::string_view name) noexcept {
  if (name == "difference") return MergeMode::kDifference;
  if (name == "overlay") return MergeMode::kOverlay;
  return std::nullopt;
}

int input_count(Method m) noexcept { return m == Method::kFourAngle ? 4 : 1; }

std::span<const ParamSpec> param_specs() noexcept { return kSpecs; }

const ParamSpec* find_param(std::string_view key) noexcept {
  for (const ParamSpec& s : kSpecs) {
    if (s.key == key) return &s;
  }
  return nullptr;
}

void set_param(TechniqueParams& params, const ParamSpec& spec, double value) {
  const std::string name(spec.key);
  if (!std::isfinite(value) || value < spec.min || value > spec.max) {
    throw Error(ErrorCode::kInvalidArgument, name + " must lie in [" + std::to_string(spec.min) +
                                                 ", " + std::to_string(spec.max) + "], got " +
                                                 std::to_string(value));
  }
  if (spec.integral && value != std::floor(value)) {
    throw Error(ErrorCode::kInvalidArgument, name + " must be an integer");
  }
  spec.set(params, value);
}

void validate(Method m, const TechniqueParams& params) {
  switch (m) {
    case Method::kSobelColor:
    case Method::kSobelHeight:
      validate(params.sobel);
      break;
    case Method::kBevel:
      validate(params.bevel);
      break;
    case Method::kFourAngle:
      validate(params.four_angle);
      break;
  }
}

NormalField generate_normals(Method m, std::span<const RasterImage> inputs,
                             const TechniqueParams& params) {
  if (static_cast<int>(inputs.size()) != input_count(m)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(to_string(m)) + " expects " + std::to_string(input_count(m)) +
                    " image(s), got " + std::to_string(inputs.size()));
  }
  validate(m, params);
  switch (m) {
    case Method::kSobelColor:
      return normal_from_color_map(inputs[0], params.sobel);
    case Method::kSobelHeight:
      return normal_from_height_map(red_channel(inputs[0]), params.sobel);
    case Method::kBevel:
      return bevel_normal_map(inputs[0], params.bevel);
    case Method::kFourAngle:
      return merge_four_angles({to_grayscale(inputs[0]), to_grayscale(inputs[1]),
                                to_grayscale(inputs[2]), to_grayscale(inputs[3])},
                               params.four_angle);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown method");
}

}  // namespace nmapgen
