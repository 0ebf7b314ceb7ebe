#include "nmapgen/raster.hpp"

#include <string>

#include "nmapgen/error.hpp"

namespace nmapgen {

RasterImage::RasterImage(int width, int height, Rgba fill) : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::kInvalidArgument, "image dimensions must be at least 1x1, got " +
                                                 std::to_string(width) + "x" +
                                                 std::to_string(height));
  }
  bytes_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * kChannels);
  for (std::size_t i = 0; i < bytes_.size(); i += kChannels) {
    bytes_[i] = fill.r;
    bytes_[i + 1] = fill.g;
    bytes_[i + 2] = fill.b;
    bytes_[i + 3] = fill.a;
  }
}

RasterImage::RasterImage(int width, int height, std::vector<std::uint8_t> rgba_bytes)
    : width_(width), height_(height), bytes_(std::move(rgba_bytes)) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::kInvalidArgument, "image dimensions must be at least 1x1, got " +
                                                 std::to_string(width) + "x" +
                                                 std::to_string(height));
  }
  const std::size_t expected =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * kChannels;
  if (bytes_.size() != expected) {
    throw Error(ErrorCode::kDimensionMismatch, "RGBA buffer holds " +
                                                   std::to_string(bytes_.size()) +
                                                   " bytes, expected " + std::to_string(expected));
  }
}

}  // namespace nmapgen
