#include "nobeling/fixtures.hpp"

#include <set>
#include <stdexcept>

namespace nobeling {

long FixtureRng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Scalar FixtureRng::rational(long height) {
  const long num = uniform(-height, height);
  const long den = uniform(1, height);
  return Scalar(num, den);
}

Point FixtureRng::point(std::size_t dim, long height) {
  std::vector<Scalar> c;
  c.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) c.push_back(rational(height));
  return Point(std::move(c));
}

Point FixtureRng::point_on(const AxisLine& line, long height) { return line.at(rational(height)); }

std::vector<Point> game_fixture(std::size_t dim, std::size_t count, std::uint64_t seed, long height) {
  FixtureRng rng(seed);
  std::vector<Point> out;
  std::set<Point> seen;
  const std::size_t on_lines = count / 3;
  std::size_t line = 1;
  while (out.size() < count) {
    Point p = out.size() < on_lines ? rng.point_on(nth_line(dim, LineIndex(line++)), height)
                                    : rng.point(dim, height);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace nobeling
