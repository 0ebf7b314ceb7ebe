#include "nmapgen/distance_transform.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace nmapgen {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Squared distance transform of a 1-D sampled function: for each q,
// out[q] = min_p (q - p)^2 + f[p]. Lower envelope of parabolas rooted at the
// finite samples. `v` and `z` are scratch buffers of size n and n+1.
void squared_distance_1d(const std::vector<double>& f, std::vector<double>& out,
                         std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (f[q] == kInf) continue;
    if (k < 0) {
      k = 0;
      v[0] = q;
      z[0] = -kInf;
      z[1] = kInf;
      continue;
    }
    auto intersect = [&](int p) {
      return ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * (q - p));
    };
    double s = intersect(v[k]);
    while (s <= z[k]) {
      --k;
      s = intersect(v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }

  if (k < 0) {
    out.assign(n, kInf);
    return;
  }
  int j = 0;
  for (int q = 0; q < n; ++q) {
    while (z[j + 1] < q) ++j;
    const double d = q - v[j];
    out[q] = d * d + f[v[j]];
  }
}

}  // namespace

ScalarField distance_transform(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  ScalarField sq(w, h);

  bool any_false = false;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const bool inside = mask(x, y);
      sq(x, y) = inside ? kInf : 0.0;
      any_false = any_false || !inside;
    }
  }
  if (!any_false) {
    return ScalarField(w, h, std::sqrt(double(w) * w + double(h) * h));
  }

  const int n = std::max(w, h);
  std::vector<double> f;
  std::vector<double> out(n);
  std::vector<int> v(n);
  std::vector<double> z(n + 1);

  for (int y = 0; y < h; ++y) {
    f.assign(w, 0.0);
    for (int x = 0; x < w; ++x) f[x] = sq(x, y);
    out.resize(w);
    squared_distance_1d(f, out, v, z);
    for (int x = 0; x < w; ++x) sq(x, y) = out[x];
  }
  for (int x = 0; x < w; ++x) {
    f.assign(h, 0.0);
    for (int y = 0; y < h; ++y) f[y] = sq(x, y);
    out.resize(h);
    squared_distance_1d(f, out, v, z);
    for (int y = 0; y < h; ++y) sq(x, y) = std::sqrt(out[y]);
  }
  return sq;
}

}  // namespace nmapgen
