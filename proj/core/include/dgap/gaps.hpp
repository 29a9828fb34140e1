#pragma once

// (n-2)-gap detection and counting.
//
// An i-cell e is an i-hub of D when D ∩ B_i(e) is exactly two voxels that are
// strictly i-adjacent and meet in e; equivalently the other half of the block
// is the complementary diagonal pair. The number of (n-2)-hubs is computed
// three ways: by direct scan, from free-cell counts, and from total cell
// counts plus the number of (n-2)-blocks inside D.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dgap/cell.hpp"
#include "dgap/object.hpp"

namespace dgap {

// Configuration of the voxels of D around an (n-2)-cell.
enum class HubTag {
  Simple,          // one voxel
  FacetPairBlock,  // two voxels sharing a facet
  GapTandem,       // two voxels meeting only in the cell
  LBlock,          // three voxels
  FullBlock,       // all four voxels; the cell is non-free
};
inline constexpr std::array<HubTag, 5> kAllHubTags = {HubTag::Simple, HubTag::FacetPairBlock, HubTag::GapTandem,
                                                      HubTag::LBlock, HubTag::FullBlock};
std::string_view to_string(HubTag tag) noexcept;

struct HubClass {
  HubTag tag;
  std::vector<Cell> witnesses;  // D ∩ B_{n-2}(e), sorted
};

// Requires n >= 2 and e an (n-2)-cell of D.
HubClass classify_cell(const DigitalObject& d, const Cell& e);

// Tally of classify_cell over every (n-2)-cell of D, indexed by HubTag.
std::array<std::int64_t, 5> classification_histogram(const DigitalObject& d);

// Block-based detector; requires dim(e) == i, 0 <= i <= n-2, e a cell of D.
bool is_gap(const DigitalObject& d, const Cell& e, int i);

// Adjacency-based detector for (n-2)-cells: a pair of voxels of D bounded by e,
// strictly (n-2)-adjacent, with no voxel of D facet-adjacent to both.
bool is_gap_by_adjacency(const DigitalObject& d, const Cell& e);

struct GapReport {
  int dimension = 0;            // i
  std::vector<Cell> hubs;       // sorted
  std::int64_t count = 0;       // g_i = |hubs|
  std::optional<std::int64_t> formula;  // only for i = n-2
  std::optional<std::int64_t> brimkov;  // only for i = n-2
};

// Scans cells(D, i); 0 <= i <= n-2.
GapReport count_gaps_oracle(const DigitalObject& d, int i);

// g_{n-2} = (n-1) c*_{n-1} - c*_{n-2}.
std::int64_t count_gaps_formula(const CellCensus& c);
std::int64_t count_gaps_formula(const DigitalObject& d);

// g_{n-2} = -2n(n-1) c_n + 2(n-1) c_{n-1} - c_{n-2} + beta_{n-2}, beta_{n-2} = c'_{n-2}.
std::int64_t count_gaps_brimkov(const CellCensus& c);
std::int64_t count_gaps_brimkov(const DigitalObject& d);

struct HubNubPartition {
  std::vector<Cell> hubs;
  std::vector<Cell> nubs;
};

// Splits border(D, n-2).
HubNubPartition hub_nub_partition(const DigitalObject& d);

}  // namespace dgap
