#pragma once

#include <cstdint>

#include "nmapgen/raster.hpp"

namespace nmapgen {

// Per channel byte = round_half_up(255 * (c + 1) / 2), so (0,0,1) encodes
// to (128,128,255).
std::uint8_t encode_component(double c) noexcept;
double decode_component(std::uint8_t byte) noexcept;

Rgba encode_normal(Vec3 n) noexcept;
// Decoded vectors are renormalised. Anything within one quantisation step of
// the zero vector (e.g. (128,128,128)) decodes to (0,0,1).
Vec3 decode_normal(Rgba c) noexcept;

RasterImage encode_normals(const NormalField& normals);
NormalField decode_normals(const RasterImage& img);

}  // namespace nmapgen
