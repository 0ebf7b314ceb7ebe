#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "nmapgen/raster.hpp"

namespace nmapgen {

// Palette, grayscale and RGB inputs are expanded to RGBA; a missing alpha
// channel reads as 255. Files with 16-bit channels are rejected with
// ErrorCode::kUnsupportedFormat.
RasterImage load_image(const std::filesystem::path& path);
RasterImage decode_png(std::span<const std::uint8_t> png);

struct ImageSize {
  int width;
  int height;
};
// Reads only the PNG header.
ImageSize peek_png_size(std::span<const std::uint8_t> png);

// Output is always 8-bit RGBA, so a save/load round trip is bit-exact.
void save_image(const RasterImage& img, const std::filesystem::path& path);
std::vector<std::uint8_t> encode_png(const RasterImage& img);

}  // namespace nmapgen
