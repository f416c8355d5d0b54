#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nobeling/geometry.hpp"
#include "nobeling/lines.hpp"

namespace nobeling {

/// Seeded generator for reproducible rational fixtures. Draws are reduced
/// from raw mt19937_64 output, so sequences do not depend on the standard
/// library's distribution implementations.
class FixtureRng {
 public:
  explicit FixtureRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// p/q with |p| <= height and 1 <= q <= height.
  Scalar rational(long height);
  Point point(std::size_t dim, long height);
  /// A point of `line` with a random free coordinate.
  Point point_on(const AxisLine& line, long height);

 private:
  std::mt19937_64 engine_;
};

/// `count` distinct samples of height <= `height`; the first samples sit
/// exactly on lines 1, 2, ... of the enumeration so the game has work to do.
std::vector<Point> game_fixture(std::size_t dim, std::size_t count, std::uint64_t seed,
                                long height = 8);

}  // namespace nobeling
