#include <doctest.h>

#include <random>

#include "nobeling/codim.hpp"
#include "oracles.hpp"

using namespace nobeling;

namespace {

Window full(std::size_t dim, int r) { return Window{Cell(dim, 0), Cell(dim, r)}; }

}  // namespace

TEST_CASE("complement_nonempty examples") {
  VoxelSet v(2, 4);
  CHECK(complement_nonempty(v, full(2, 4)));
  const Window corner{{0, 0}, {2, 2}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) v.insert({i, j});
  }
  CHECK_FALSE(complement_nonempty(v, corner));
  CHECK(complement_nonempty(v, full(2, 4)));

  const VoxelSet slab = slab_fixture(3, 8, 0, 4);
  CHECK(slab.occupied_count() == 64);
  CHECK(complement_nonempty(slab, full(3, 8)));
}

TEST_CASE("complement_connected examples") {
  CHECK(complement_connected(VoxelSet(3, 4), full(3, 4)));
  CHECK_FALSE(complement_connected(slab_fixture(3, 8, 1, 4), full(3, 8)));
  CHECK(complement_components(slab_fixture(3, 8, 1, 4), full(3, 8)) == 2);
  // Complement of a line in a 3-box.
  const VoxelSet line = line_fixture(3, 8, 2);
  CHECK(complement_connected(line, full(3, 8)));
  CHECK(oracle::bfs_components(line, full(3, 8)) == 1);
}

TEST_CASE("empty windows are rejected") {
  const VoxelSet v(2, 4);
  const Window empty{{1, 1}, {1, 3}};
  CHECK_THROWS_AS(complement_nonempty(v, empty), std::invalid_argument);
  CHECK_THROWS_AS(complement_connected(v, empty), std::invalid_argument);
  CHECK_THROWS_AS(classify(v, {}), std::invalid_argument);
}

TEST_CASE("VoxelSet validation") {
  CHECK_THROWS(VoxelSet(1, 4));
  CHECK_THROWS(VoxelSet(2, 1));
  VoxelSet v(2, 4);
  CHECK_THROWS(v.insert({4, 0}));
  CHECK_THROWS(v.insert({0, 0, 0}));
  v.insert({3, 1});
  CHECK(v.contains({3, 1}));
  CHECK(v.unlinear(v.linear({3, 1})) == Cell{3, 1});
}

TEST_CASE("classify examples") {
  CHECK(classify(VoxelSet(3, 4), octant_windows(3, 4)).verdict == Verdict::kCodimAtLeast2);
  CHECK(classify(slab_fixture(3, 8, 0, 4), octant_windows(3, 8)).verdict == Verdict::kCodimAtLeast1Only);
  CHECK(classify(line_fixture(4, 8, 0), octant_windows(4, 8)).verdict == Verdict::kCodimAtLeast2);

  VoxelSet solid(2, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) solid.insert({i, j});
  }
  CHECK(classify(solid, octant_windows(2, 4)).verdict == Verdict::kFullDimensional);

  VoxelSet open = line_fixture(3, 4, 0);
  open.set_compact(false);
  const CodimReport r = classify(open, octant_windows(3, 4));
  CHECK(r.verdict == Verdict::kRefusedNonCompact);
  CHECK(r.summary().find("resolution 4") != std::string::npos);
}

TEST_CASE("octant windows") {
  const auto ws = octant_windows(3, 8);
  CHECK(ws.size() == 9);
  std::size_t cells = 0;
  for (std::size_t i = 1; i < ws.size(); ++i) cells += ws[i].size();
  CHECK(cells == 512);
}

TEST_CASE("slab and line fixtures across resolutions") {
  for (std::size_t n : {3u, 4u}) {
    for (int r : {4, 8, 16}) {
      if (n == 4 && r == 16) continue;  // covered by the acceptance run
      const VoxelSet line = line_fixture(n, r, 0);
      for (const Window& w : octant_windows(n, r)) {
        CHECK(complement_connected(line, w));
        CHECK(complement_components(line, w) == oracle::bfs_components(line, w));
      }
      const VoxelSet slab = slab_fixture(n, r, 1, r / 2);
      for (const Window& w : octant_windows(n, r)) {
        const bool straddles = w.lo[1] < r / 2 && r / 2 + 1 < w.hi[1];
        if (straddles) CHECK_FALSE(complement_connected(slab, w));
        CHECK(complement_components(slab, w) == oracle::bfs_components(slab, w));
      }
    }
  }
}

TEST_CASE("union-find agrees with BFS and nonempty is monotone on random sets") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 2 + it % 3;
    const int r = 3 + it % 5;
    VoxelSet v(n, r);
    const auto windows = octant_windows(n, r);
    std::vector<bool> had_complement(windows.size(), true);
    const std::size_t total = v.cell_count();
    for (int step = 0; step < 6; ++step) {
      for (std::size_t add = 0; add < total / 8 + 1; ++add) v.insert(v.unlinear(rng() % total));
      for (std::size_t wi = 0; wi < windows.size(); ++wi) {
        const Window& w = windows[wi];
        const std::size_t uf = complement_components(v, w);
        CHECK(uf == oracle::bfs_components(v, w));
        const bool ne = complement_nonempty(v, w);
        CHECK(ne == (uf > 0));
        if (complement_connected(v, w)) CHECK(ne);
        if (!had_complement[wi]) CHECK_FALSE(ne);
        had_complement[wi] = ne;
      }
    }
  }
}
