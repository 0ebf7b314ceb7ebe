#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "nmapgen/bevel.hpp"
#include "nmapgen/four_angle.hpp"
#include "nmapgen/gradient.hpp"
#include "nmapgen/raster.hpp"

namespace nmapgen {

enum class Method {
  kSobelColor,
  kSobelHeight,
  kBevel,
  kFourAngle,
};

inline constexpr Method kAllMethods[] = {Method::kSobelColor, Method::kSobelHeight,
                                         Method::kBevel, Method::kFourAngle};

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;
std::string_view to_string(MergeMode m) noexcept;
std::optional<MergeMode> parse_merge_mode(std::string_view name) noexcept;

// Number of input images the method consumes (4 for four-angle: top,
// bottom, left, right).
int input_count(Method m) noexcept;

struct TechniqueParams {
  SobelParams sobel{};
  BevelParams bevel{};
  FourAngleParams four_angle{};
};

// One tunable numeric parameter. `key` is the snake_case name used in API
// requests; the CLI flag is the same name with dashes.
struct ParamSpec {
  std::string_view key;
  std::string_view help;
  double min;
  double max;
  bool integral;
  unsigned method_mask;  // bit (1 << Method)
  double (*get)(const TechniqueParams&, Method);
  void (*set)(TechniqueParams&, double);

  bool applies_to(Method m) const noexcept {
    return (method_mask & (1u << static_cast<unsigned>(m))) != 0;
  }
};

std::span<const ParamSpec> param_specs() noexcept;
const ParamSpec* find_param(std::string_view key) noexcept;

// Range- and integrality-checked assignment. Throws kInvalidArgument.
void set_param(TechniqueParams& params, const ParamSpec& spec, double value);

void validate(Method m, const TechniqueParams& params);

/// Runs the chosen technique. `inputs` holds input_count(m) images; the
/// four-angle inputs are reduced to grayscale, the height map uses its red
/// channel.
NormalField generate_normals(Method m, std::span<const RasterImage> inputs,
                             const TechniqueParams& params);

}  // namespace nmapgen
