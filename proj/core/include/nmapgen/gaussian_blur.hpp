#pragma once

#include <vector>

#include "nmapgen/raster.hpp"

namespace nmapgen {

// Normalised 1-D kernel of radius ceil(3*sigma). sigma == 0 gives {1}.
std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian with clamp-replicate borders. sigma == 0 is identity.
ScalarField gaussian_blur(const ScalarField& src, double sigma);

}  // namespace nmapgen
