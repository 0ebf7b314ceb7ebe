#pragma once

#include "nmapgen/raster.hpp"

namespace nmapgen {

/// Exact euclidean distance from each pixel centre to the nearest false
/// pixel (0 on false pixels). Computed with the separable lower-envelope
/// method: one 1-D squared-distance pass per row, then one per column.
///
/// A mask with no false pixel has no finite distance anywhere; every value
/// is then the image diagonal, sqrt(w^2 + h^2).
ScalarField distance_transform(const BinaryMask& mask);

}  // namespace nmapgen
