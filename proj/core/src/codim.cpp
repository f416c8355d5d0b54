#include "nobeling/codim.hpp"

#include <numeric>
#include <stdexcept>

#include "nobeling/errors.hpp"

namespace nobeling {

VoxelSet::VoxelSet(std::size_t dim, int resolution) : dim_(dim), resolution_(resolution) {
  if (dim < 2) throw std::invalid_argument("voxel grids need dim >= 2");
  if (resolution < 2) throw std::invalid_argument("voxel grids need resolution >= 2");
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= static_cast<std::size_t>(resolution);
  occupied_.assign(total, 0);
}

std::size_t VoxelSet::linear(const Cell& c) const {
  if (c.size() != dim_) throw DimensionError("cell dimension mismatch");
  std::size_t idx = 0;
  for (int x : c) {
    if (x < 0 || x >= resolution_) throw std::out_of_range("cell outside the grid");
    idx = idx * static_cast<std::size_t>(resolution_) + static_cast<std::size_t>(x);
  }
  return idx;
}

Cell VoxelSet::unlinear(std::size_t idx) const {
  Cell c(dim_);
  for (std::size_t i = dim_; i-- > 0;) {
    c[i] = static_cast<int>(idx % static_cast<std::size_t>(resolution_));
    idx /= static_cast<std::size_t>(resolution_);
  }
  return c;
}

void VoxelSet::insert(const Cell& c) { occupied_[linear(c)] = 1; }

bool VoxelSet::contains(const Cell& c) const { return occupied_[linear(c)] != 0; }

std::size_t VoxelSet::occupied_count() const {
  return static_cast<std::size_t>(std::accumulate(occupied_.begin(), occupied_.end(), std::size_t{0}));
}

std::vector<Cell> VoxelSet::occupied() const {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < occupied_.size(); ++i) {
    if (occupied_[i]) out.push_back(unlinear(i));
  }
  return out;
}

bool Window::empty() const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] >= hi[i]) return true;
  }
  return lo.empty();
}

bool Window::contains(const Cell& c) const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (c[i] < lo[i] || c[i] >= hi[i]) return false;
  }
  return true;
}

std::size_t Window::size() const {
  if (empty()) return 0;
  std::size_t s = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) s *= static_cast<std::size_t>(hi[i] - lo[i]);
  return s;
}

std::vector<Window> octant_windows(std::size_t dim, int resolution) {
  std::vector<Window> out;
  out.push_back({Cell(dim, 0), Cell(dim, resolution)});
  const int half = resolution / 2;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    Window w{Cell(dim), Cell(dim)};
    for (std::size_t i = 0; i < dim; ++i) {
      const bool upper = (mask >> i) & 1U;
      w.lo[i] = upper ? half : 0;
      w.hi[i] = upper ? resolution : half;
    }
    out.push_back(std::move(w));
  }
  return out;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

namespace {

void check_window(const VoxelSet& v, const Window& w) {
  if (w.lo.size() != v.dim() || w.hi.size() != v.dim()) throw DimensionError("window dimension mismatch");
  if (w.empty()) throw std::invalid_argument("empty window");
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (w.lo[i] < 0 || w.hi[i] > v.resolution()) throw std::out_of_range("window outside the grid");
  }
}

// Visit every cell of the window in row-major order.
template <typename F>
void for_each_cell(const Window& w, F&& f) {
  Cell c = w.lo;
  const std::size_t n = c.size();
  while (true) {
    f(c);
    std::size_t i = n;
    while (i-- > 0) {
      if (++c[i] < w.hi[i]) break;
      c[i] = w.lo[i];
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace

bool complement_nonempty(const VoxelSet& v, const Window& w) {
  check_window(v, w);
  bool found = false;
  for_each_cell(w, [&](const Cell& c) { found = found || !v.contains(c); });
  return found;
}

std::size_t complement_components(const VoxelSet& v, const Window& w) {
  check_window(v, w);
  // Index cells local to the window so the forest stays window-sized.
  const std::size_t n = v.dim();
  std::vector<std::size_t> extent(n);
  for (std::size_t i = 0; i < n; ++i) extent[i] = static_cast<std::size_t>(w.hi[i] - w.lo[i]);
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = n - 1; i-- > 0;) stride[i] = stride[i + 1] * extent[i + 1];

  DisjointSets sets(w.size());
  std::vector<std::uint8_t> free(w.size(), 0);
  std::size_t occupied = 0;
  std::size_t local = 0;
  for_each_cell(w, [&](const Cell& c) {
    if (v.contains(c)) {
      ++occupied;
    } else {
      free[local] = 1;
      // Join with the already-visited neighbour one step back along each axis.
      for (std::size_t i = 0; i < n; ++i) {
        if (c[i] > w.lo[i] && free[local - stride[i]]) sets.unite(local, local - stride[i]);
      }
    }
    ++local;
  });
  return sets.components() - occupied;
}

bool complement_connected(const VoxelSet& v, const Window& w) { return complement_components(v, w) == 1; }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kCodimAtLeast2:
      return "consistent with codim ≥ 2";
    case Verdict::kCodimAtLeast1Only:
      return "codim ≥ 1 only";
    case Verdict::kFullDimensional:
      return "full-dimensional evidence";
    case Verdict::kRefusedNonCompact:
      return "refused: set is not flagged compact";
  }
  return "?";
}

std::string CodimReport::summary() const {
  return std::string(to_string(verdict)) + " (at resolution " + std::to_string(resolution) + ")";
}

CodimReport classify(const VoxelSet& v, const std::vector<Window>& windows) {
  if (windows.empty()) throw std::invalid_argument("no windows to classify");
  CodimReport report{v.dim(), v.resolution(), {}, Verdict::kCodimAtLeast2};
  bool any_full = false;
  bool any_split = false;
  for (const Window& w : windows) {
    WindowResult r{w, complement_nonempty(v, w), false};
    r.connected = r.nonempty && complement_connected(v, w);
    any_full = any_full || !r.nonempty;
    any_split = any_split || !r.connected;
    report.windows.push_back(std::move(r));
  }
  if (!v.compact()) {
    report.verdict = Verdict::kRefusedNonCompact;
  } else if (any_full) {
    report.verdict = Verdict::kFullDimensional;
  } else if (any_split) {
    report.verdict = Verdict::kCodimAtLeast1Only;
  }
  return report;
}

VoxelSet slab_fixture(std::size_t dim, int resolution, std::size_t axis, int index) {
  VoxelSet v(dim, resolution);
  const Window all{Cell(dim, 0), Cell(dim, resolution)};
  for_each_cell(all, [&](const Cell& c) {
    if (c[axis] == index) v.insert(c);
  });
  return v;
}

VoxelSet line_fixture(std::size_t dim, int resolution, std::size_t free_axis) {
  VoxelSet v(dim, resolution);
  Cell c(dim, resolution / 2);
  for (int t = 0; t < resolution; ++t) {
    c[free_axis] = t;
    v.insert(c);
  }
  return v;
}

}  // namespace nobeling
