#include "nobeling/geometry.hpp"

#include <string>

#include "nobeling/errors.hpp"

namespace nobeling {

void require_same_dim(const Point& p, std::size_t dim) {
  if (p.dim() != dim) {
    throw DimensionError("dimension mismatch: " + std::to_string(p.dim()) + " vs " +
                         std::to_string(dim));
  }
}

Point Point::zero(std::size_t dim) { return Point(std::vector<Scalar>(dim)); }

Point operator+(const Point& a, const Point& b) {
  require_same_dim(b, a.dim());
  Point r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] += b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(b, a.dim());
  Point r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] -= b[i];
  return r;
}

Point operator*(const Scalar& s, const Point& p) {
  Point r = p;
  for (std::size_t i = 0; i < p.dim(); ++i) r[i] *= s;
  return r;
}

Scalar max_norm(const Point& v) {
  Scalar m;
  for (const Scalar& c : v.coords()) m = max(m, c.abs());
  return m;
}

AxisLine::AxisLine(std::size_t free_axis, std::vector<Scalar> offsets)
    : free_axis_(free_axis), offsets_(std::move(offsets)) {
  if (offsets_.empty()) throw DimensionError("a line needs ambient dimension >= 2");
  if (free_axis_ >= dim()) {
    throw DimensionError("free axis " + std::to_string(free_axis_) + " out of range for dim " +
                         std::to_string(dim()));
  }
}

const Scalar& AxisLine::fixed(std::size_t j) const {
  if (j == free_axis_ || j >= dim()) throw DimensionError("not a fixed coordinate");
  return offsets_[j < free_axis_ ? j : j - 1];
}

Point AxisLine::at(const Scalar& t) const {
  Point p = Point::zero(dim());
  for (std::size_t j = 0; j < dim(); ++j) p[j] = (j == free_axis_) ? t : fixed(j);
  return p;
}

bool AxisLine::contains(const Point& p) const { return dist_point_line(p, *this).is_zero(); }

bool Box::contains(const Point& p) const {
  require_same_dim(p, lo.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] < lo[i] || hi[i] < p[i]) return false;
  }
  return true;
}

Box Box::hull(const Box& other) const {
  Box r = *this;
  for (std::size_t i = 0; i < lo.dim(); ++i) {
    r.lo[i] = min(lo[i], other.lo[i]);
    r.hi[i] = max(hi[i], other.hi[i]);
  }
  return r;
}

Scalar dist(const Point& p, const Point& q, MetricKind m) {
  require_same_dim(q, p.dim());
  Scalar acc;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const Scalar gap = p[i] - q[i];
    if (m == MetricKind::kChebyshev) {
      acc = max(acc, gap.abs());
    } else {
      acc += gap * gap;
    }
  }
  return acc;
}

Scalar dist_point_line(const Point& p, const AxisLine& line, MetricKind m) {
  require_same_dim(p, line.dim());
  Scalar acc;
  for (std::size_t j = 0; j < p.dim(); ++j) {
    if (j == line.free_axis()) continue;
    const Scalar gap = p[j] - line.fixed(j);
    if (m == MetricKind::kChebyshev) {
      acc = max(acc, gap.abs());
    } else {
      acc += gap * gap;
    }
  }
  return acc;
}

Scalar diameter(std::span<const Point> points, MetricKind m) {
  if (points.empty()) throw std::invalid_argument("diameter of an empty set");
  Scalar best;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) best = max(best, dist(points[i], points[j], m));
  }
  return best;
}

}  // namespace nobeling
