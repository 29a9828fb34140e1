#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "dgap/cell.hpp"

namespace dgap {

// A finite set of n-voxels. Immutable once built; voxels are kept sorted.
class DigitalObject {
 public:
  // Throws std::invalid_argument for n outside [1, kMaxDim] or a duplicate
  // voxel, NotACell for a non-voxel, DimensionMismatch for a voxel of another n.
  DigitalObject(int n, std::vector<Cell> voxels);

  // Voxels given by their integer centers.
  static DigitalObject from_centers(int n, const std::vector<std::vector<std::int64_t>>& centers);

  int ambient() const noexcept { return n_; }
  std::size_t size() const noexcept { return voxels_.size(); }
  bool empty() const noexcept { return voxels_.empty(); }
  std::span<const Cell> voxels() const noexcept { return voxels_; }
  bool contains(const Cell& voxel) const;

  DigitalObject translated(std::span<const std::int64_t> offset) const;
  // Axis a of the result is axis perm[a] of this object.
  DigitalObject permuted(std::span<const int> perm) const;

  friend bool operator==(const DigitalObject& a, const DigitalObject& b) {
    return a.n_ == b.n_ && a.voxels_ == b.voxels_;
  }

 private:
  int n_;
  std::vector<Cell> voxels_;
  std::unordered_set<Cell, CellHash> index_;
};

// Number of voxels of D in block(e): |D ∩ B(e)|. Zero means e is not a cell of D.
int block_occupancy(const DigitalObject& d, const Cell& e);

// The voxels of D bounded by e, sorted.
std::vector<Cell> block_voxels(const DigitalObject& d, const Cell& e);

bool is_cell_of(const DigitalObject& d, const Cell& e);

// All i-cells of D, sorted. Throws std::out_of_range unless 0 <= i <= n.
std::vector<Cell> cells(const DigitalObject& d, int i);

// Requires dim(e) < n and e a cell of D (NotACell otherwise).
bool is_free(const DigitalObject& d, const Cell& e);

// Free i-cells of D, sorted. 0 <= i <= n-1.
std::vector<Cell> border(const DigitalObject& d, int i);

// Number of free j-cells of D bounded by e. Requires dim(e) < j <= n-1.
std::int64_t b_boundary(const DigitalObject& d, const Cell& e, int j);

// Voxels of D that are i-adjacent to v (A_i(v) ∩ D), sorted. v need not be in D.
std::vector<Cell> adjacent_in(const DigitalObject& d, const Cell& v, int i);

struct DimensionCounts {
  std::int64_t total = 0;     // c_i
  std::int64_t free = 0;      // c*_i
  std::int64_t non_free = 0;  // c'_i, equal to beta_i (i-blocks inside D)
};

// Per-dimension cell counts with the cell lists they were derived from.
// For i = n the convention is c'_n = c_n and c*_n = 0.
class CellCensus {
 public:
  int ambient() const noexcept { return n_; }

  const DimensionCounts& at(int i) const { return counts_.at(static_cast<std::size_t>(i)); }
  std::int64_t c(int i) const { return at(i).total; }
  std::int64_t c_star(int i) const { return at(i).free; }
  std::int64_t c_prime(int i) const { return at(i).non_free; }
  std::int64_t beta(int i) const { return at(i).non_free; }

  // Sorted i-cells of D and, in parallel, how many voxels of D contain each.
  std::span<const Cell> cells(int i) const { return cells_.at(static_cast<std::size_t>(i)); }
  std::span<const int> occupancy(int i) const { return occupancy_.at(static_cast<std::size_t>(i)); }
  std::vector<Cell> free_cells(int i) const;

  // Test hook: overwrite one count. Leaves the cached cell lists untouched.
  void override_counts(int i, const DimensionCounts& counts) { counts_.at(static_cast<std::size_t>(i)) = counts; }

 private:
  friend CellCensus census(const DigitalObject& d);

  int n_ = 0;
  std::vector<DimensionCounts> counts_;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::vector<int>> occupancy_;
};

CellCensus census(const DigitalObject& d);

}  // namespace dgap
