#include "dgap/object.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "dgap/detail/enumerate.hpp"
#include "dgap/errors.hpp"

namespace dgap {
namespace {

void check_dim(const DigitalObject& d, const Cell& e) {
  if (e.ambient() != d.ambient()) {
    throw DimensionMismatch("cell " + e.to_string() + " is not in C_" + std::to_string(d.ambient()));
  }
}

void require_cell_of(const DigitalObject& d, const Cell& e) {
  if (!is_cell_of(d, e)) throw NotACell(e.to_string() + " is not a cell of the object");
}

}  // namespace

DigitalObject::DigitalObject(int n, std::vector<Cell> voxels) : n_(n), voxels_(std::move(voxels)) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("object dimension n=" + std::to_string(n) + " unsupported");
  index_.reserve(voxels_.size());
  for (const Cell& v : voxels_) {
    if (v.ambient() != n) {
      throw DimensionMismatch("voxel " + v.to_string() + " does not have " + std::to_string(n) + " coordinates");
    }
    if (!v.is_voxel()) throw NotACell(v.to_string() + " is not a voxel");
    if (!index_.insert(v).second) throw std::invalid_argument("duplicate voxel " + v.to_string());
  }
  std::sort(voxels_.begin(), voxels_.end());
}

DigitalObject DigitalObject::from_centers(int n, const std::vector<std::vector<std::int64_t>>& centers) {
  std::vector<Cell> voxels;
  voxels.reserve(centers.size());
  for (const auto& c : centers) {
    if (static_cast<int>(c.size()) != n) {
      throw DimensionMismatch("voxel center has " + std::to_string(c.size()) + " coordinates, expected " +
                              std::to_string(n));
    }
    voxels.push_back(Cell::voxel(c));
  }
  return DigitalObject(n, std::move(voxels));
}

bool DigitalObject::contains(const Cell& voxel) const { return index_.count(voxel) != 0; }

DigitalObject DigitalObject::translated(std::span<const std::int64_t> offset) const {
  if (static_cast<int>(offset.size()) != n_) throw DimensionMismatch("translation vector has wrong length");
  std::vector<Cell> out;
  out.reserve(voxels_.size());
  std::vector<std::int64_t> c(static_cast<std::size_t>(n_));
  for (const Cell& v : voxels_) {
    for (int j = 0; j < n_; ++j) c[static_cast<std::size_t>(j)] = v[j] / 2 + offset[static_cast<std::size_t>(j)];
    out.push_back(Cell::voxel(c));
  }
  return DigitalObject(n_, std::move(out));
}

DigitalObject DigitalObject::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DimensionMismatch("permutation has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[static_cast<std::size_t>(p)]) throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Cell> out;
  out.reserve(voxels_.size());
  std::vector<std::int64_t> c(static_cast<std::size_t>(n_));
  for (const Cell& v : voxels_) {
    for (int a = 0; a < n_; ++a) c[static_cast<std::size_t>(a)] = v[perm[static_cast<std::size_t>(a)]];
    out.emplace_back(std::span<const std::int64_t>(c));
  }
  return DigitalObject(n_, std::move(out));
}

int block_occupancy(const DigitalObject& d, const Cell& e) {
  check_dim(d, e);
  int k = 0;
  detail::for_each_coface(e, d.ambient(), [&](const Cell& v) { k += d.contains(v) ? 1 : 0; });
  return k;
}

std::vector<Cell> block_voxels(const DigitalObject& d, const Cell& e) {
  check_dim(d, e);
  std::vector<Cell> out;
  for (Cell& v : block(e))
    if (d.contains(v)) out.push_back(std::move(v));
  return out;
}

bool is_cell_of(const DigitalObject& d, const Cell& e) { return block_occupancy(d, e) > 0; }

std::vector<Cell> cells(const DigitalObject& d, int i) {
  if (i < 0 || i > d.ambient()) {
    throw std::out_of_range("cell dimension " + std::to_string(i) + " outside [0, " + std::to_string(d.ambient()) + "]");
  }
  std::unordered_set<Cell, CellHash> seen;
  std::vector<Cell> out;
  for (const Cell& v : d.voxels()) {
    for (Cell& f : faces(v, i))
      if (seen.insert(f).second) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_free(const DigitalObject& d, const Cell& e) {
  check_dim(d, e);
  if (e.dimension() >= d.ambient()) {
    throw std::out_of_range("free/non-free is defined only for cells of dimension < n");
  }
  const int k = block_occupancy(d, e);
  if (k == 0) throw NotACell(e.to_string() + " is not a cell of the object");
  return k < (1 << (d.ambient() - e.dimension()));
}

std::vector<Cell> border(const DigitalObject& d, int i) {
  if (i < 0 || i >= d.ambient()) {
    throw std::out_of_range("border dimension " + std::to_string(i) + " outside [0, " +
                            std::to_string(d.ambient() - 1) + "]");
  }
  std::vector<Cell> out;
  for (Cell& e : cells(d, i))
    if (is_free(d, e)) out.push_back(std::move(e));
  return out;
}

std::int64_t b_boundary(const DigitalObject& d, const Cell& e, int j) {
  check_dim(d, e);
  if (j <= e.dimension() || j > d.ambient() - 1) {
    throw std::out_of_range("b_boundary: need dim(e) < j <= n-1, got dim(e)=" + std::to_string(e.dimension()) +
                            " j=" + std::to_string(j));
  }
  require_cell_of(d, e);
  const int full = 1 << (d.ambient() - j);
  std::int64_t count = 0;
  detail::for_each_coface(e, j, [&](const Cell& f) {
    const int k = block_occupancy(d, f);
    if (k > 0 && k < full) ++count;
  });
  if (count != 0 && !is_free(d, e)) {
    throw std::logic_error("non-free cell " + e.to_string() + " bounds a free cell");
  }
  return count;
}

std::vector<Cell> adjacent_in(const DigitalObject& d, const Cell& v, int i) {
  check_dim(d, v);
  if (!v.is_voxel()) throw NotACell(v.to_string() + " is not a voxel");
  if (i < 0 || i > d.ambient() - 1) throw std::out_of_range("adjacency order out of range");
  // Neighbors differ by at most one lattice step per axis, in at most n-i axes.
  std::vector<Cell> out;
  const int n = d.ambient();
  std::vector<int> offset(static_cast<std::size_t>(n), -1);
  while (true) {
    int moved = 0;
    for (int o : offset) moved += o != 0 ? 1 : 0;
    if (moved > 0 && moved <= n - i) {
      CellBuilder b(v);
      for (int a = 0; a < n; ++a) b.shift(a, 2 * offset[static_cast<std::size_t>(a)]);
      if (d.contains(b.get())) out.push_back(b.get());
    }
    int a = 0;
    while (a < n && offset[static_cast<std::size_t>(a)] == 1) offset[static_cast<std::size_t>(a++)] = -1;
    if (a == n) break;
    ++offset[static_cast<std::size_t>(a)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> CellCensus::free_cells(int i) const {
  std::vector<Cell> out;
  if (i >= n_) return out;
  const auto cs = cells(i);
  const auto occ = occupancy(i);
  const int full = 1 << (n_ - i);
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (occ[k] < full) out.push_back(cs[k]);
  return out;
}

CellCensus census(const DigitalObject& d) {
  const int n = d.ambient();
  CellCensus out;
  out.n_ = n;
  out.counts_.assign(static_cast<std::size_t>(n + 1), {});
  out.cells_.assign(static_cast<std::size_t>(n + 1), {});
  out.occupancy_.assign(static_cast<std::size_t>(n + 1), {});

  // Every cell of D with the number of voxels of D containing it.
  std::unordered_map<Cell, int, CellHash> occ;
  for (const Cell& v : d.voxels()) {
    for (int i = 0; i <= n; ++i) detail::for_each_face(v, i, [&](const Cell& f) { ++occ[f]; });
  }

  std::vector<std::pair<Cell, int>> sorted(occ.begin(), occ.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  for (auto& [cell, k] : sorted) {
    const int i = cell.dimension();
    const auto idx = static_cast<std::size_t>(i);
    auto& counts = out.counts_[idx];
    ++counts.total;
    if (i == n || k == (1 << (n - i))) {
      ++counts.non_free;
    } else {
      ++counts.free;
    }
    out.cells_[idx].push_back(cell);
    out.occupancy_[idx].push_back(k);
  }
  return out;
}

}  // namespace dgap
