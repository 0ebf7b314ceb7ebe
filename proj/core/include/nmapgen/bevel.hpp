#pragma once

#include <cstdint>

#include "nmapgen/gradient.hpp"
#include "nmapgen/raster.hpp"

namespace nmapgen {

struct BevelParams {
  std::uint8_t alpha_threshold = 128;
  // Normalised Sobel magnitude window that counts as an internal edge.
  double edge_low = 0.25;
  double edge_high = 1.0;
  // Distance fields are raised to 1/strength after normalisation.
  double external_strength = 1.0;
  double internal_strength = 1.0;
  // 0 = silhouette distance only, 1 = internal-edge distance only.
  double blend_weight = 0.5;
  double gaussian_sigma = 1.0;
  SobelParams sobel{4.0};
};

void validate(const BevelParams& p);

/// Pixels inside the alpha mask whose normalised grayscale Sobel magnitude
/// falls in [edge_low, edge_high]. The magnitude is normalised by its
/// maximum over the silhouette; a zero maximum yields an all-false mask.
BinaryMask edge_mask(const RasterImage& img, const BevelParams& p);

/// Weighted merge of the external (silhouette) and internal (edge) distance
/// fields. Each is normalised by its own maximum and raised to
/// 1/strength; the result is (1-w)*ext' + w*int', clamped to [0,1]. Both
/// fields grow away from their contours, so internal edges become creases.
ScalarField combine_heights(const ScalarField& external, const ScalarField& internal,
                            const BevelParams& p);

// Every intermediate of the bevel pipeline, in order.
struct BevelStages {
  BinaryMask silhouette;
  BinaryMask edges;
  ScalarField external_distance;  // restricted to the silhouette
  ScalarField internal_distance;  // restricted to the silhouette
  ScalarField merged_height;
  ScalarField blurred_height;
  NormalField normals;
};

BevelStages bevel_stages(const RasterImage& img, const BevelParams& p);

/// Throws ErrorCode::kInvalidArgument when no pixel reaches alpha_threshold.
NormalField bevel_normal_map(const RasterImage& img, const BevelParams& p);

}  // namespace nmapgen
