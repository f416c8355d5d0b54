#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "nobeling/scalar.hpp"

namespace nobeling {

enum class MetricKind { kChebyshev, kEuclideanSquared };

/// A point of R^n with exact rational coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Scalar> coords) : coords_(coords) {}

  /// The origin of R^n.
  static Point zero(std::size_t dim);

  std::size_t dim() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Scalar> coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;
  // Lexicographic; used only to give sample sets a canonical order.
  friend auto operator<=>(const Point& a, const Point& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<Scalar> coords_;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Scalar& s, const Point& p);

/// Chebyshev norm of a vector.
Scalar max_norm(const Point& v);

/// Axis-parallel line {x : x_j = offset_j for every j != free_axis}.
///
/// Offsets are stored in ambient-coordinate order with the free axis skipped,
/// so `offsets().size() == dim() - 1`.
class AxisLine {
 public:
  AxisLine(std::size_t free_axis, std::vector<Scalar> offsets);

  std::size_t dim() const { return offsets_.size() + 1; }
  std::size_t free_axis() const { return free_axis_; }
  std::span<const Scalar> offsets() const { return offsets_; }

  /// Fixed value of ambient coordinate j (j != free_axis).
  const Scalar& fixed(std::size_t j) const;

  /// The point of the line whose free coordinate equals t.
  Point at(const Scalar& t) const;

  bool contains(const Point& p) const;

  friend bool operator==(const AxisLine&, const AxisLine&) = default;

 private:
  std::size_t free_axis_;
  std::vector<Scalar> offsets_;
};

/// Closed axis-aligned box [lo, hi].
struct Box {
  Point lo;
  Point hi;

  bool contains(const Point& p) const;
  Box hull(const Box& other) const;
  friend bool operator==(const Box&, const Box&) = default;
};

/// Exact Chebyshev distance, or exact squared Euclidean distance.
Scalar dist(const Point& p, const Point& q, MetricKind m = MetricKind::kChebyshev);

/// Distance from p to the line, measured over the line's fixed coordinates.
Scalar dist_point_line(const Point& p, const AxisLine& line,
                       MetricKind m = MetricKind::kChebyshev);

/// Maximum pairwise distance; 0 for a singleton. Throws on an empty set.
Scalar diameter(std::span<const Point> points, MetricKind m = MetricKind::kChebyshev);

void require_same_dim(const Point& p, std::size_t dim);

}  // namespace nobeling
