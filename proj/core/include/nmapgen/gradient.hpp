#pragma once

#include <array>

#include "nmapgen/raster.hpp"

namespace nmapgen {

struct SobelParams {
  // Multiplier applied to the gradients before the z=1 normalisation. Larger
  // values tilt normals further (the blue channel drops).
  double strength = 1.0;
};

struct Gradient {
  double gx = 0.0;  // d/dx, x grows to the right
  double gy = 0.0;  // d/drow, rows grow downward
  friend constexpr bool operator==(Gradient, Gradient) = default;
};
using GradientField = Grid<Gradient>;

// kernel[row][col], applied as correlation centred on the pixel.
using Kernel3x3 = std::array<std::array<double, 3>, 3>;

inline constexpr Kernel3x3 kSobelX{{{-1.0 / 8, 0.0, 1.0 / 8},
                                    {-2.0 / 8, 0.0, 2.0 / 8},
                                    {-1.0 / 8, 0.0, 1.0 / 8}}};
inline constexpr Kernel3x3 kSobelY{{{-1.0 / 8, -2.0 / 8, -1.0 / 8},
                                    {0.0, 0.0, 0.0},
                                    {1.0 / 8, 2.0 / 8, 1.0 / 8}}};

/// out(x,y) = sum_ij kernel[i][j] * src(x+j-1, y+i-1) with clamp-replicate
/// borders.
ScalarField convolve3x3(const ScalarField& src, const Kernel3x3& kernel);

/// Sobel derivatives scaled so a unit-slope ramp yields gradient 1.
GradientField sobel_gradients(const ScalarField& src);

/// n = normalize(-gx*s, +gy*s, 1). The sign flip on y converts the
/// downward-growing row derivative into the +Y-up normal convention.
NormalField gradients_to_normals(const GradientField& g, const SobelParams& p);

/// Grayscale -> Sobel -> normals. Pixels with alpha < 128 get (0,0,1).
NormalField normal_from_color_map(const RasterImage& img, const SobelParams& p);

NormalField normal_from_height_map(const ScalarField& heights, const SobelParams& p);

// Height maps arrive as grayscale PNGs; the red channel / 255 is the height.
ScalarField height_map_from_image(const RasterImage& img);

void validate(const SobelParams& p);

}  // namespace nmapgen
