#include <gtest/gtest.h>

#include <cstdlib>
#include <png.h>

#include <cstring>
#include <fstream>

#include "fixtures.hpp"
#include "nmapgen/color.hpp"
#include "nmapgen/normal_codec.hpp"
#include "nmapgen/png_io.hpp"

namespace nmapgen {
namespace {

using testing::TempDir;

std::vector<std::uint8_t> write_png_with_format(std::uint32_t format, int w, int h,
                                                const std::vector<std::uint8_t>& pixels) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = w;
  image.height = h;
  image.format = format;
  png_alloc_size_t size = 0;
  EXPECT_NE(png_image_write_get_memory_size(image, size, 0, pixels.data(), 0, nullptr), 0);
  std::vector<std::uint8_t> out(size);
  EXPECT_NE(png_image_write_to_memory(&image, out.data(), &size, 0, pixels.data(), 0, nullptr), 0);
  out.resize(size);
  return out;
}

void write_file(const std::filesystem::path& p, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

TEST(RasterImage, BufferHoldsFourBytesPerPixel) {
  RasterImage img(3, 5);
  EXPECT_EQ(img.bytes().size(), 3u * 5u * 4u);
  img.set_pixel(2, 4, {1, 2, 3, 4});
  EXPECT_EQ(img.pixel(2, 4), (Rgba{1, 2, 3, 4}));
}

TEST(RasterImage, RejectsBadDimensionsAndBuffers) {
  EXPECT_THROW(RasterImage(0, 4), Error);
  EXPECT_THROW(RasterImage(4, -1), Error);
  try {
    RasterImage(2, 2, std::vector<std::uint8_t>(15));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(Grid, ClampedAccessReplicatesBorders) {
  ScalarField f(2, 2, std::vector<double>{1, 2, 3, 4});
  EXPECT_EQ(f.clamped(-5, -5), 1);
  EXPECT_EQ(f.clamped(9, 0), 2);
  EXPECT_EQ(f.clamped(0, 9), 3);
  EXPECT_EQ(f.clamped(9, 9), 4);
  EXPECT_THROW(ScalarField(2, 2, std::vector<double>{1, 2, 3}), Error);
}

TEST(PngIo, OpaqueRedFixtureLoadsExactly) {
  TempDir dir;
  save_image(RasterImage(2, 2, Rgba{255, 0, 0, 255}), dir / "red.png");
  const RasterImage img = load_image(dir / "red.png");
  ASSERT_EQ(img.width(), 2);
  ASSERT_EQ(img.height(), 2);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) EXPECT_EQ(img.pixel(x, y), (Rgba{255, 0, 0, 255}));
}

TEST(PngIo, GrayscaleExpandsToOpaqueRgba) {
  TempDir dir;
  write_file(dir / "gray.png", write_png_with_format(PNG_FORMAT_GRAY, 3, 2,
                                                     std::vector<std::uint8_t>(6, 100)));
  const RasterImage img = load_image(dir / "gray.png");
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 3; ++x) EXPECT_EQ(img.pixel(x, y), (Rgba{100, 100, 100, 255}));
}

TEST(PngIo, RgbWithoutAlphaReadsAlpha255) {
  const auto png = write_png_with_format(PNG_FORMAT_RGB, 1, 1, {10, 20, 30});
  EXPECT_EQ(decode_png(png).pixel(0, 0), (Rgba{10, 20, 30, 255}));
}

TEST(PngIo, PaletteExpandsToRgba) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = 2;
  image.height = 1;
  image.format = PNG_FORMAT_RGBA_COLORMAP;
  image.colormap_entries = 2;
  const std::vector<std::uint8_t> colormap{10, 20, 30, 255, 200, 100, 50, 0};
  const std::vector<std::uint8_t> indices{0, 1};
  png_alloc_size_t size = 0;
  ASSERT_NE(png_image_write_get_memory_size(image, size, 0, indices.data(), 0, colormap.data()), 0);
  std::vector<std::uint8_t> png(size);
  ASSERT_NE(png_image_write_to_memory(&image, png.data(), &size, 0, indices.data(), 0,
                                      colormap.data()),
            0);
  png.resize(size);
  const RasterImage img = decode_png(png);
  EXPECT_EQ(img.pixel(0, 0), (Rgba{10, 20, 30, 255}));
  EXPECT_EQ(img.pixel(1, 0).a, 0);
}

TEST(PngIo, SixteenBitIsUnsupported) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = 2;
  image.height = 2;
  image.format = PNG_FORMAT_LINEAR_RGB_ALPHA;
  std::vector<std::uint16_t> pixels(16, 40000);
  png_alloc_size_t size = 0;
  ASSERT_NE(png_image_write_get_memory_size(image, size, 0, pixels.data(), 0, nullptr), 0);
  std::vector<std::uint8_t> png(size);
  ASSERT_NE(png_image_write_to_memory(&image, png.data(), &size, 0, pixels.data(), 0, nullptr), 0);
  png.resize(size);
  try {
    decode_png(png);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedFormat);
  }
}

TEST(PngIo, TruncatedFileIsMalformed) {
  TempDir dir;
  auto png = encode_png(RasterImage(8, 8, Rgba{1, 2, 3, 4}));
  png.resize(png.size() / 2);
  write_file(dir / "cut.png", png);
  try {
    load_image(dir / "cut.png");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedImage);
  }
  EXPECT_THROW(decode_png(std::vector<std::uint8_t>{'n', 'o', 'p', 'e'}), Error);
}

TEST(PngIo, MissingFileAndDirectory) {
  TempDir dir;
  try {
    load_image(dir / "absent.png");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFileNotFound);
  }
  try {
    save_image(RasterImage(1, 1), dir / "no" / "such" / "dir.png");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(PngIo, RoundTripIsBitExact) {
  TempDir dir;
  auto g = testing::rng(7);
  for (auto [w, h] : {std::pair{16, 16}, std::pair{1, 1}, std::pair{5, 3}}) {
    const RasterImage img = testing::random_image(g, w, h);
    save_image(img, dir / "rt.png");
    EXPECT_EQ(load_image(dir / "rt.png"), img);
  }
}

TEST(PngIo, PeekReadsHeaderOnly) {
  const auto png = encode_png(RasterImage(7, 3));
  const ImageSize s = peek_png_size(png);
  EXPECT_EQ(s.width, 7);
  EXPECT_EQ(s.height, 3);
}

TEST(Grayscale, LumaWeights) {
  RasterImage img(3, 1);
  img.set_pixel(0, 0, {255, 255, 255, 255});
  img.set_pixel(1, 0, {0, 0, 0, 255});
  img.set_pixel(2, 0, {255, 0, 0, 255});
  const ScalarField g = to_grayscale(img);
  EXPECT_NEAR(g(0, 0), 1.0, 1e-12);
  EXPECT_EQ(g(1, 0), 0.0);
  EXPECT_NEAR(g(2, 0), 0.299, 1e-12);
}

TEST(Grayscale, IgnoresAlpha) {
  auto g = testing::rng(11);
  RasterImage img = testing::random_image(g, 9, 9);
  const ScalarField before = to_grayscale(img);
  for (std::size_t i = 3; i < img.bytes().size(); i += 4) img.bytes()[i] = 17;
  EXPECT_EQ(to_grayscale(img), before);
}

TEST(AlphaMask, Thresholds) {
  EXPECT_TRUE(std::ranges::all_of(alpha_mask(RasterImage(4, 4, Rgba{0, 0, 0, 255}), 128).values(),
                                  [](bool b) { return b; }));
  EXPECT_TRUE(std::ranges::none_of(alpha_mask(RasterImage(4, 4, Rgba{9, 9, 9, 0}), 1).values(),
                                   [](bool b) { return b; }));
  RasterImage checker(4, 4);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x)
      checker.set_pixel(x, y, {0, 0, 0, static_cast<std::uint8_t>((x + y) % 2 ? 255 : 0)});
  const BinaryMask m = alpha_mask(checker, 128);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) EXPECT_EQ(m(x, y), (x + y) % 2 == 1);
}

TEST(NormalCodec, EncodesReferenceVectors) {
  EXPECT_EQ(encode_normal({0, 0, 1}), (Rgba{128, 128, 255, 255}));
  EXPECT_EQ(encode_normal({1, 0, 0}), (Rgba{255, 128, 128, 255}));
  EXPECT_EQ(encode_normal({-1, 0, 0}), (Rgba{0, 128, 128, 255}));
}

TEST(NormalCodec, DecodesUpAndDegenerate) {
  EXPECT_LT(testing::angle_deg(decode_normal({128, 128, 255, 255}), {0, 0, 1}), 0.5);
  EXPECT_EQ(decode_normal({128, 128, 128, 255}), kUpNormal);
  EXPECT_EQ(decode_normal({127, 128, 127, 255}), kUpNormal);
  const Vec3 v = decode_normal({129, 128, 140, 255});
  EXPECT_NEAR(length(v), 1.0, 1e-12);
}

TEST(NormalCodec, DecodedFieldIsUnitLength) {
  auto g = testing::rng(3);
  const NormalField f = decode_normals(testing::random_image(g, 32, 32));
  for (const Vec3& v : f.values()) EXPECT_NEAR(length(v), 1.0, 1e-6);
}

TEST(NormalCodec, QuantisationErrorBelowHalfDegree) {
  auto g = testing::rng(42);
  for (int i = 0; i < 10000; ++i) {
    const Vec3 v = testing::random_upper_hemisphere(g);
    ASSERT_LT(testing::angle_deg(v, decode_normal(encode_normal(v))), 0.5) << v.x << "," << v.y;
  }
}

// Renormalising a quantised vector can push one component across a rounding
// boundary, so re-encoding may move a channel by one level. It then settles.
TEST(NormalCodec, ReencodeDriftsAtMostOneLevelThenSettles) {
  auto g = testing::rng(43);
  NormalField f(40, 40);
  for (Vec3& v : f.values()) v = testing::random_upper_hemisphere(g);
  const RasterImage once = encode_normals(f);
  const RasterImage twice = encode_normals(decode_normals(once));
  for (int y = 0; y < 40; ++y)
    for (int x = 0; x < 40; ++x) {
      const Rgba a = once.pixel(x, y), b = twice.pixel(x, y);
      EXPECT_LE(std::abs(a.r - b.r), 1);
      EXPECT_LE(std::abs(a.g - b.g), 1);
      EXPECT_LE(std::abs(a.b - b.b), 1);
    }
  EXPECT_EQ(encode_normals(decode_normals(twice)), twice);
}

TEST(NormalCodec, ReencodeIsExactForAxisCodes) {
  for (const Rgba c : {Rgba{128, 128, 255, 255}, Rgba{255, 128, 128, 255}, Rgba{0, 128, 128, 255}})
    EXPECT_EQ(encode_normal(decode_normal(c)), c);
}

}  // namespace
}  // namespace nmapgen
