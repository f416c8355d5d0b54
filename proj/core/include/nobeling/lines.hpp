#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nobeling/geometry.hpp"

namespace nobeling {

/// Position of a line in the enumeration l_0, l_1, l_2, ...
struct LineIndex {
  mpz_class value;

  LineIndex() = default;
  LineIndex(unsigned long v) : value(v) {}  // NOLINT(google-explicit-constructor)
  explicit LineIndex(mpz_class v);

  std::string str() const { return value.get_str(); }
  friend bool operator==(const LineIndex& a, const LineIndex& b) { return a.value == b.value; }
};

// Rationals are enumerated as 0, then positive Calkin-Wilf terms on odd
// indices and their negatives on even indices:
//   0, 1, -1, 1/2, -1/2, 2, -2, 1/3, ...
Scalar nth_rational(const mpz_class& i);
mpz_class index_of_rational(const Scalar& q);

// Szudzik's pairing N x N -> N and its inverse.
mpz_class pair(const mpz_class& x, const mpz_class& y);
std::pair<mpz_class, mpz_class> unpair(const mpz_class& z);

// Bijection N^k -> N built by right-nesting `pair`.
mpz_class pair_tuple(const std::vector<mpz_class>& xs);
std::vector<mpz_class> unpair_tuple(const mpz_class& z, std::size_t k);

/// The i-th axis-parallel rational line in R^dim.
///
/// The index splits as i = dim * t + free_axis, so consecutive indices cycle
/// through all axes before the offset tuple t advances.
AxisLine nth_line(std::size_t dim, const LineIndex& i);
LineIndex index_of_line(const AxisLine& line);

/// Exclusive index bound: every line in R^dim whose offsets have height <= h
/// has index below this value.
mpz_class line_prefix_bound(unsigned long h, std::size_t dim);

/// A stored point together with a per-coordinate flag recording whether the
/// coordinate is to be treated as rational. Stored values are always exact,
/// so rationality is a fixture property rather than something inferred.
struct FlaggedPoint {
  Point point;
  std::vector<bool> rational;
};

/// Every axis-parallel rational line through p given its flags; empty when
/// fewer than dim-1 coordinates are flagged rational.
std::vector<AxisLine> lines_through(const FlaggedPoint& p);

}  // namespace nobeling
