#pragma once

#include <cstdint>

#include "nmapgen/raster.hpp"

namespace nmapgen {

enum class MergeMode {
  kDifference,
  kOverlay,
};

// Four shadings of the same sprite, grayscale in [0,1].
struct FourAngleInputs {
  ScalarField top;
  ScalarField bottom;
  ScalarField left;
  ScalarField right;
};

struct FourAngleParams {
  // z weight before normalisation; higher values flatten the map.
  std::uint8_t blue_level = 255;
  MergeMode merge_mode = MergeMode::kDifference;
};

void validate(const FourAngleParams& p);

/// Overlay blend: multiply below mid-gray, screen above.
std::uint8_t overlay_blend(std::uint8_t a, std::uint8_t b) noexcept;

// Raw (red, green) bytes for one pixel before the blue weight is applied.
struct RawChannels {
  std::uint8_t red;
  std::uint8_t green;
};

RawChannels merge_pixel(double top, double bottom, double left, double right, MergeMode mode);

/// Left/right lights drive red, top/bottom drive green.
///
/// kDifference: red = 128 + round(127 * (right - left)),
///              green = 128 + round(127 * (top - bottom)).
/// kOverlay: the first image of each pair (left, top) is mapped to [0,127],
///           the second (right, bottom) to [128,255], and the pair is
///           combined with overlay_blend(first, second).
///
/// The raw channels are centred on 128 and combined with z = blue_level/255
/// before normalisation.
NormalField merge_four_angles(const FourAngleInputs& in, const FourAngleParams& p);

}  // namespace nmapgen
