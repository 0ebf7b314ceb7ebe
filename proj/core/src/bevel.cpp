#include "nmapgen/bevel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nmapgen/color.hpp"
#include "nmapgen/distance_transform.hpp"
#include "nmapgen/gaussian_blur.hpp"

namespace nmapgen {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

bool in_unit_range(double v) { return v >= 0.0 && v <= 1.0; }

double field_max(const ScalarField& f) {
  return *std::max_element(f.values().begin(), f.values().end());
}

// Normalise by the field maximum, then apply the 1/strength exponent.
ScalarField shape_distance(const ScalarField& f, double strength) {
  ScalarField out(f.width(), f.height(), 0.0);
  const double peak = field_max(f);
  if (!(peak > 0.0)) return out;
  const double exponent = 1.0 / strength;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.values()[i] = std::pow(std::clamp(f.values()[i] / peak, 0.0, 1.0), exponent);
  }
  return out;
}

ScalarField restrict_to(const ScalarField& f, const BinaryMask& mask) {
  ScalarField out = f;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!mask.values()[i]) out.values()[i] = 0.0;
  }
  return out;
}

}  // namespace

void validate(const BevelParams& p) {
  require(in_unit_range(p.edge_low) && in_unit_range(p.edge_high),
          "edge_low and edge_high must lie in [0,1]");
  require(p.edge_low <= p.edge_high, "edge_low must not exceed edge_high");
  require(p.external_strength > 0.0 && std::isfinite(p.external_strength),
          "external_strength must be positive");
  require(p.internal_strength > 0.0 && std::isfinite(p.internal_strength),
          "internal_strength must be positive");
  require(in_unit_range(p.blend_weight), "blend_weight must lie in [0,1]");
  require(p.gaussian_sigma >= 0.0 && std::isfinite(p.gaussian_sigma),
          "gaussian_sigma must be >= 0");
  validate(p.sobel);
}

BinaryMask edge_mask(const RasterImage& img, const BevelParams& p) {
  validate(p);
  const BinaryMask inside = alpha_mask(img, p.alpha_threshold);
  const GradientField g = sobel_gradients(to_grayscale(img));

  ScalarField magnitude(img.width(), img.height(), 0.0);
  double peak = 0.0;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const Gradient d = g(x, y);
      const double m = std::hypot(d.gx, d.gy);
      magnitude(x, y) = m;
      if (inside(x, y)) peak = std::max(peak, m);
    }
  }

  BinaryMask edges(img.width(), img.height(), false);
  if (!(peak > 0.0)) return edges;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const double m = magnitude(x, y) / peak;
      edges(x, y) = inside(x, y) && m >= p.edge_low && m <= p.edge_high;
    }
  }
  return edges;
}

ScalarField combine_heights(const ScalarField& external, const ScalarField& internal,
                            const BevelParams& p) {
  require_same_size(external, internal, "combine_heights");
  validate(p);
  const ScalarField ext = shape_distance(external, p.external_strength);
  const ScalarField in = shape_distance(internal, p.internal_strength);
  ScalarField out(external.width(), external.height());
  const double w = p.blend_weight;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.values()[i] = std::clamp((1.0 - w) * ext.values()[i] + w * in.values()[i], 0.0, 1.0);
  }
  return out;
}

BevelStages bevel_stages(const RasterImage& img, const BevelParams& p) {
  validate(p);
  BinaryMask silhouette = alpha_mask(img, p.alpha_threshold);
  if (std::none_of(silhouette.values().begin(), silhouette.values().end(),
                   [](bool b) { return b; })) {
    throw Error(ErrorCode::kInvalidArgument,
                "bevel input has no pixel with alpha >= " + std::to_string(p.alpha_threshold));
  }
  BinaryMask edges = edge_mask(img, p);

  BinaryMask not_edges(img.width(), img.height(), true);
  for (std::size_t i = 0; i < edges.size(); ++i) not_edges.values()[i] = !edges.values()[i];

  ScalarField external = distance_transform(silhouette);
  ScalarField internal = restrict_to(distance_transform(not_edges), silhouette);
  ScalarField merged = combine_heights(external, internal, p);
  ScalarField blurred = gaussian_blur(merged, p.gaussian_sigma);

  NormalField normals = normal_from_height_map(blurred, p.sobel);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (!silhouette.values()[i]) normals.values()[i] = kUpNormal;
  }

  return {std::move(silhouette), std::move(edges),  std::move(external), std::move(internal),
          std::move(merged),     std::move(blurred), std::move(normals)};
}

NormalField bevel_normal_map(const RasterImage& img, const BevelParams& p) {
  return bevel_stages(img, p).normals;
}

}  // namespace nmapgen
