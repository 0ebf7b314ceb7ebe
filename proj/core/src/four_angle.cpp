#include "nmapgen/four_angle.hpp"

#include <algorithm>
#include <cmath>

namespace nmapgen {
namespace {

std::uint8_t to_byte(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

// [0,1] -> [0,127] and [0,1] -> [128,255].
std::uint8_t lower_half(double v) { return to_byte(127.0 * std::clamp(v, 0.0, 1.0)); }
std::uint8_t upper_half(double v) { return to_byte(128.0 + 127.0 * std::clamp(v, 0.0, 1.0)); }

std::uint8_t difference_channel(double positive, double negative) {
  return to_byte(128.0 + 127.0 * (std::clamp(positive, 0.0, 1.0) - std::clamp(negative, 0.0, 1.0)));
}

}  // namespace

void validate(const FourAngleParams& p) {
  if (p.blue_level < 1) {
    throw Error(ErrorCode::kInvalidArgument, "blue_level must be at least 1");
  }
}

std::uint8_t overlay_blend(std::uint8_t a, std::uint8_t b) noexcept {
  // round(x / 255) for non-negative integer x is (2x + 255) / 510.
  if (a < 128) {
    const int prod = 2 * a * b;
    return static_cast<std::uint8_t>((2 * prod + 255) / 510);
  }
  const int prod = 2 * (255 - a) * (255 - b);
  return static_cast<std::uint8_t>(255 - (2 * prod + 255) / 510);
}

RawChannels merge_pixel(double top, double bottom, double left, double right, MergeMode mode) {
  if (mode == MergeMode::kOverlay) {
    return {overlay_blend(lower_half(left), upper_half(right)),
            overlay_blend(lower_half(top), upper_half(bottom))};
  }
  return {difference_channel(right, left), difference_channel(top, bottom)};
}

NormalField merge_four_angles(const FourAngleInputs& in, const FourAngleParams& p) {
  validate(p);
  require_same_size(in.top, in.bottom, "four-angle top/bottom");
  require_same_size(in.top, in.left, "four-angle top/left");
  require_same_size(in.top, in.right, "four-angle top/right");

  const double z = p.blue_level / 255.0;
  NormalField out(in.top.width(), in.top.height());
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const RawChannels raw =
          merge_pixel(in.top(x, y), in.bottom(x, y), in.left(x, y), in.right(x, y), p.merge_mode);
      const Vec3 v{(raw.red - 128) / 127.0, (raw.green - 128) / 127.0, z};
      out(x, y) = normalized_or(v, kUpNormal);
    }
  }
  return out;
}

}  // namespace nmapgen
