#include "dgap/gaps.hpp"

#include <stdexcept>
#include <string>

#include "dgap/errors.hpp"

namespace dgap {
namespace {

void require_gap_dimension(const DigitalObject& d) {
  if (d.ambient() < 2) throw std::out_of_range("(n-2)-cells need n >= 2");
}

void require_cell(const DigitalObject& d, const Cell& e, int i) {
  if (e.ambient() != d.ambient()) throw DimensionMismatch("cell " + e.to_string() + " has wrong ambient dimension");
  if (e.dimension() != i) {
    throw std::out_of_range("expected an " + std::to_string(i) + "-cell, got dimension " +
                            std::to_string(e.dimension()));
  }
  if (!is_cell_of(d, e)) throw NotACell(e.to_string() + " is not a cell of the object");
}

bool is_tandem_over(const std::vector<Cell>& present, const Cell& e) {
  if (present.size() != 2) return false;
  const auto shared = voxel_intersection(present[0], present[1]);
  return shared && *shared == e;
}

}  // namespace

std::string_view to_string(HubTag tag) noexcept {
  switch (tag) {
    case HubTag::Simple: return "Simple";
    case HubTag::FacetPairBlock: return "FacetPairBlock";
    case HubTag::GapTandem: return "GapTandem";
    case HubTag::LBlock: return "LBlock";
    case HubTag::FullBlock: return "FullBlock";
  }
  return "?";
}

HubClass classify_cell(const DigitalObject& d, const Cell& e) {
  require_gap_dimension(d);
  const int n = d.ambient();
  require_cell(d, e, n - 2);
  auto present = block_voxels(d, e);
  HubTag tag = HubTag::Simple;
  switch (present.size()) {
    case 1: tag = HubTag::Simple; break;
    case 2: {
      const auto adj = adjacency(present[0], present[1]);
      if (adj.adjacent_at == n - 1) {
        tag = HubTag::FacetPairBlock;
      } else if (adj.adjacent_at == n - 2 && is_tandem_over(present, e)) {
        tag = HubTag::GapTandem;
      } else {
        throw std::logic_error("two voxels around " + e.to_string() + " are neither facet- nor hub-adjacent");
      }
      break;
    }
    case 3: tag = HubTag::LBlock; break;
    case 4: tag = HubTag::FullBlock; break;
    default:
      throw std::logic_error("(n-2)-block of " + e.to_string() + " has " + std::to_string(present.size()) + " voxels");
  }
  return {tag, std::move(present)};
}

std::array<std::int64_t, 5> classification_histogram(const DigitalObject& d) {
  require_gap_dimension(d);
  std::array<std::int64_t, 5> h{};
  for (const Cell& e : cells(d, d.ambient() - 2)) ++h[static_cast<std::size_t>(classify_cell(d, e).tag)];
  return h;
}

bool is_gap(const DigitalObject& d, const Cell& e, int i) {
  if (i < 0 || i > d.ambient() - 2) {
    throw std::out_of_range("gap dimension " + std::to_string(i) + " outside [0, n-2]");
  }
  require_cell(d, e, i);
  const auto present = block_voxels(d, e);
  if (!is_tandem_over(present, e)) return false;
  const auto adj = adjacency(present[0], present[1]);
  return adj.strict && adj.adjacent_at == i;
}

bool is_gap_by_adjacency(const DigitalObject& d, const Cell& e) {
  require_gap_dimension(d);
  const int n = d.ambient();
  require_cell(d, e, n - 2);
  const auto around = block_voxels(d, e);
  for (std::size_t a = 0; a < around.size(); ++a) {
    for (std::size_t b = a + 1; b < around.size(); ++b) {
      const Cell& v1 = around[a];
      const Cell& v2 = around[b];
      if (!is_adjacent(v1, v2, n - 2) || is_adjacent(v1, v2, n - 1)) continue;
      bool shared_neighbor = false;
      for (const Cell& u : adjacent_in(d, v1, n - 1)) {
        if (u != v2 && is_adjacent(u, v2, n - 1)) {
          shared_neighbor = true;
          break;
        }
      }
      if (!shared_neighbor) return true;
    }
  }
  return false;
}

GapReport count_gaps_oracle(const DigitalObject& d, int i) {
  if (i < 0 || i > d.ambient() - 2) {
    throw std::out_of_range("gap dimension " + std::to_string(i) + " outside [0, n-2]");
  }
  GapReport r;
  r.dimension = i;
  for (const Cell& e : cells(d, i))
    if (is_gap(d, e, i)) r.hubs.push_back(e);
  r.count = static_cast<std::int64_t>(r.hubs.size());
  if (i == d.ambient() - 2) {
    const auto c = census(d);
    r.formula = count_gaps_formula(c);
    r.brimkov = count_gaps_brimkov(c);
  }
  return r;
}

std::int64_t count_gaps_formula(const CellCensus& c) {
  const std::int64_t n = c.ambient();
  if (n < 2) throw std::out_of_range("(n-2)-gaps need n >= 2");
  return (n - 1) * c.c_star(static_cast<int>(n - 1)) - c.c_star(static_cast<int>(n - 2));
}

std::int64_t count_gaps_formula(const DigitalObject& d) { return count_gaps_formula(census(d)); }

std::int64_t count_gaps_brimkov(const CellCensus& c) {
  const std::int64_t n = c.ambient();
  if (n < 2) throw std::out_of_range("(n-2)-gaps need n >= 2");
  const int top = static_cast<int>(n);
  return -2 * n * (n - 1) * c.c(top) + 2 * (n - 1) * c.c(top - 1) - c.c(top - 2) + c.beta(top - 2);
}

std::int64_t count_gaps_brimkov(const DigitalObject& d) { return count_gaps_brimkov(census(d)); }

HubNubPartition hub_nub_partition(const DigitalObject& d) {
  require_gap_dimension(d);
  const int i = d.ambient() - 2;
  HubNubPartition p;
  for (Cell& e : border(d, i)) {
    if (is_gap(d, e, i)) {
      p.hubs.push_back(std::move(e));
    } else {
      p.nubs.push_back(std::move(e));
    }
  }
  return p;
}

}  // namespace dgap
