#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nmapgen/error.hpp"

namespace nmapgen {

/// Row-major width x height grid of values. Dimensions are fixed at
/// construction and always at least 1x1.
template <typename T>
class Grid {
 public:
  using value_type = T;
  using reference = typename std::vector<T>::reference;
  using const_reference = typename std::vector<T>::const_reference;

  Grid(int width, int height, T fill = T{}) : width_(width), height_(height) {
    check_dimensions(width, height);
    values_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
  }

  Grid(int width, int height, std::vector<T> values)
      : width_(width), height_(height), values_(std::move(values)) {
    check_dimensions(width, height);
    if (values_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "grid buffer holds " + std::to_string(values_.size()) + " values, expected " +
                      std::to_string(width) + "x" + std::to_string(height));
    }
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return values_.size(); }

  reference operator()(int x, int y) { return values_[index(x, y)]; }
  const_reference operator()(int x, int y) const { return values_[index(x, y)]; }

  // Clamp-replicate access for neighbourhood operators.
  const_reference clamped(int x, int y) const {
    x = x < 0 ? 0 : (x >= width_ ? width_ - 1 : x);
    y = y < 0 ? 0 : (y >= height_ ? height_ - 1 : y);
    return values_[index(x, y)];
  }

  const std::vector<T>& values() const& noexcept { return values_; }
  std::vector<T>& values() & noexcept { return values_; }
  // By value on temporaries so range-for over f().values() stays valid.
  std::vector<T> values() && noexcept { return std::move(values_); }

  template <typename U>
  bool same_size(const Grid<U>& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  static void check_dimensions(int width, int height) {
    if (width < 1 || height < 1) {
      throw Error(ErrorCode::kInvalidArgument, "grid dimensions must be at least 1x1, got " +
                                                   std::to_string(width) + "x" +
                                                   std::to_string(height));
    }
  }

  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<T> values_;
};

template <typename T, typename U>
void require_same_size(const Grid<T>& a, const Grid<U>& b, const char* what) {
  if (!a.same_size(b)) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": " + std::to_string(a.width()) + "x" +
                    std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                    std::to_string(b.height()));
  }
}

}  // namespace nmapgen
