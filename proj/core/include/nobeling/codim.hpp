#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace nobeling {

using Cell = std::vector<int>;

/// Occupied cells of the grid [0, resolution)^dim.
class VoxelSet {
 public:
  VoxelSet(std::size_t dim, int resolution);

  std::size_t dim() const { return dim_; }
  int resolution() const { return resolution_; }
  std::size_t cell_count() const { return occupied_.size(); }

  /// Whether the voxelised set is flagged as a compactum. Verdicts are refused
  /// for non-compact sets, where connected complements prove nothing.
  bool compact() const { return compact_; }
  void set_compact(bool c) { compact_ = c; }

  void insert(const Cell& c);
  bool contains(const Cell& c) const;
  std::size_t occupied_count() const;
  /// Occupied cells in row-major order.
  std::vector<Cell> occupied() const;

  std::size_t linear(const Cell& c) const;
  Cell unlinear(std::size_t idx) const;
  bool contains_linear(std::size_t idx) const { return occupied_[idx] != 0; }

 private:
  std::size_t dim_;
  int resolution_;
  bool compact_ = true;
  std::vector<std::uint8_t> occupied_;
};

/// Half-open box of cells lo <= c < hi.
struct Window {
  Cell lo;
  Cell hi;

  bool empty() const;
  bool contains(const Cell& c) const;
  std::size_t size() const;
};

/// The full grid plus its 2^dim half-size octants.
std::vector<Window> octant_windows(std::size_t dim, int resolution);

/// Disjoint-set forest with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

bool complement_nonempty(const VoxelSet& v, const Window& w);

/// Face-adjacency components of the unoccupied cells of the window.
std::size_t complement_components(const VoxelSet& v, const Window& w);

/// True iff the unoccupied cells of the window are non-empty and form one
/// face-adjacency component.
bool complement_connected(const VoxelSet& v, const Window& w);

enum class Verdict { kCodimAtLeast2, kCodimAtLeast1Only, kFullDimensional, kRefusedNonCompact };

const char* to_string(Verdict v);

struct WindowResult {
  Window window;
  bool nonempty;
  bool connected;
};

struct CodimReport {
  std::size_t dim;
  int resolution;
  std::vector<WindowResult> windows;
  Verdict verdict;
  /// Human-readable verdict, qualified by the grid resolution.
  std::string summary() const;
};

CodimReport classify(const VoxelSet& v, const std::vector<Window>& windows);

/// Slab {c : c[axis] == index}.
VoxelSet slab_fixture(std::size_t dim, int resolution, std::size_t axis, int index);
/// Axis line {c : c[j] == resolution/2 for all j != free_axis}.
VoxelSet line_fixture(std::size_t dim, int resolution, std::size_t free_axis);

}  // namespace nobeling
