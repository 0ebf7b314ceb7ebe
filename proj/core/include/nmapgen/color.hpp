#pragma once

#include <cstdint>

#include "nmapgen/raster.hpp"

namespace nmapgen {

/// Rec. 601 luma in [0,1]. Alpha does not participate.
double luma(Rgba c) noexcept;
ScalarField to_grayscale(const RasterImage& img);

BinaryMask alpha_mask(const RasterImage& img, std::uint8_t threshold);

// Visualisation helpers used for debug dumps and height-map inputs.
RasterImage mask_to_image(const BinaryMask& mask);
// Values are divided by the field maximum when `normalize` is set, otherwise
// clamped to [0,1], then written as opaque gray.
RasterImage scalar_to_image(const ScalarField& field, bool normalize);

}  // namespace nmapgen
