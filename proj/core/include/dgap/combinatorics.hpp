#pragma once

// Closed-form cell counts for the cubical grid and the incidence-structure
// double-counting identity. All results are exact 64-bit integers; any
// intermediate overflow throws std::overflow_error and any division that would
// leave a remainder throws std::logic_error.

#include <cstdint>
#include <span>
#include <vector>

namespace dgap {

inline constexpr int kMaxCountDim = 32;

// Index triple shared by the counting functions.
struct CountParams {
  int n = 0;
  int i = 0;
  int j = 0;
};

std::int64_t binomial(int n, int k);

// Number of i-faces of a j-cell: 2^(j-i) C(j, i). Defined for 0 <= i <= j
// (i == j gives 1, the cell itself).
std::int64_t c_bounding(int i, int j);

// Number of j-cells of C_n bounded by an i-cell: 2^(j-i) C(n-i, j-i), 0 <= i <= j <= n.
std::int64_t c_bounded(int i, int j, int n);
inline std::int64_t c_bounded(const CountParams& p) { return c_bounded(p.i, p.j, p.n); }

// Number of j-cells of one voxel bounded by one of its i-cells: C(n-i, j-i).
std::int64_t b_in_voxel(int i, int j, int n);

// i-cells of two facet-adjacent voxels: (3n+i) 2^(n-i) C(n,i) / (2n).
std::int64_t block_cell_count(int i, int n);

// i-cells of an L-block: (2n+i) 2^(n-i) C(n,i) / n.
std::int64_t lblock_cell_count(int i, int n);

// Free (n-1)-cells of two facet-adjacent voxels: 2(2n-1).
std::int64_t block_free_facets(int n);

// Free (n-1)-cells of an L-block: 2(3n-2). Requires n >= 2.
std::int64_t lblock_free_facets(int n);

// Degrees of a finite incidence structure (points, blocks, relation).
struct IncidenceDegrees {
  std::vector<std::int64_t> point_degrees;
  std::vector<std::int64_t> block_degrees;
};

template <class Point, class Block, class Relation>
IncidenceDegrees incidence_degrees(std::span<const Point> points, std::span<const Block> blocks,
                                   Relation&& lies_on) {
  IncidenceDegrees d;
  d.point_degrees.assign(points.size(), 0);
  d.block_degrees.assign(blocks.size(), 0);
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (lies_on(points[p], blocks[b])) {
        ++d.point_degrees[p];
        ++d.block_degrees[b];
      }
    }
  }
  return d;
}

// Sum of point degrees equals sum of block degrees.
bool incidence_sum_check(std::span<const std::int64_t> point_degrees,
                         std::span<const std::int64_t> block_degrees);
inline bool incidence_sum_check(const IncidenceDegrees& d) {
  return incidence_sum_check(d.point_degrees, d.block_degrees);
}

}  // namespace dgap
