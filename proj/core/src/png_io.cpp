#include "nmapgen/png_io.hpp"

#include <png.h>

#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <memory>
#include <string>

#include "nmapgen/error.hpp"

namespace nmapgen {
namespace {

// Releases the libpng simplified-API state on every exit path.
struct PngImage {
  png_image image;
  PngImage() {
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
  }
  ~PngImage() { png_image_free(&image); }
  PngImage(const PngImage&) = delete;
  PngImage& operator=(const PngImage&) = delete;
};

std::string png_message(const png_image& image) { return std::string(image.message); }

constexpr std::size_t kMaxPixels = std::size_t{1} << 28;

}  // namespace

RasterImage decode_png(std::span<const std::uint8_t> png) {
  if (png.empty()) {
    throw Error(ErrorCode::kMalformedImage, "empty PNG buffer");
  }
  PngImage reader;
  if (png_image_begin_read_from_memory(&reader.image, png.data(), png.size()) == 0) {
    throw Error(ErrorCode::kMalformedImage, "cannot read PNG header: " + png_message(reader.image));
  }
  if ((reader.image.format & PNG_FORMAT_FLAG_LINEAR) != 0) {
    throw Error(ErrorCode::kUnsupportedFormat, "PNG has 16 bits per channel; only 8-bit is supported");
  }
  const auto width = static_cast<std::size_t>(reader.image.width);
  const auto height = static_cast<std::size_t>(reader.image.height);
  if (width == 0 || height == 0 || width > std::numeric_limits<int>::max() ||
      height > std::numeric_limits<int>::max() || width * height > kMaxPixels) {
    throw Error(ErrorCode::kMalformedImage, "PNG dimensions out of range");
  }

  reader.image.format = PNG_FORMAT_RGBA;
  std::vector<std::uint8_t> bytes(PNG_IMAGE_SIZE(reader.image));
  if (png_image_finish_read(&reader.image, nullptr, bytes.data(), 0, nullptr) == 0) {
    throw Error(ErrorCode::kMalformedImage, "cannot decode PNG: " + png_message(reader.image));
  }
  return RasterImage(static_cast<int>(width), static_cast<int>(height), std::move(bytes));
}

ImageSize peek_png_size(std::span<const std::uint8_t> png) {
  PngImage reader;
  if (png.empty() ||
      png_image_begin_read_from_memory(&reader.image, png.data(), png.size()) == 0) {
    throw Error(ErrorCode::kMalformedImage, "cannot read PNG header: " + png_message(reader.image));
  }
  if (reader.image.width > std::numeric_limits<int>::max() ||
      reader.image.height > std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::kMalformedImage, "PNG dimensions out of range");
  }
  return {static_cast<int>(reader.image.width), static_cast<int>(reader.image.height)};
}

RasterImage load_image(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kFileNotFound, "no such file: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  try {
    return decode_png(data);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encode_png(const RasterImage& img) {
  PngImage writer;
  writer.image.width = static_cast<png_uint_32>(img.width());
  writer.image.height = static_cast<png_uint_32>(img.height());
  writer.image.format = PNG_FORMAT_RGBA;

  png_alloc_size_t size = 0;
  const auto pixels = img.bytes();
  if (png_image_write_get_memory_size(writer.image, size, 0, pixels.data(), 0, nullptr) == 0) {
    throw Error(ErrorCode::kIo, "cannot encode PNG: " + png_message(writer.image));
  }
  std::vector<std::uint8_t> out(size);
  if (png_image_write_to_memory(&writer.image, out.data(), &size, 0, pixels.data(), 0,
                                nullptr) == 0) {
    throw Error(ErrorCode::kIo, "cannot encode PNG: " + png_message(writer.image));
  }
  out.resize(size);
  return out;
}

void save_image(const RasterImage& img, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> png = encode_png(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(png.data()), static_cast<std::streamsize>(png.size()));
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed: " + path.string());
  }
}

}  // namespace nmapgen
