#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dgap/cell.hpp"
#include "dgap/object.hpp"

namespace dgap::cli {

struct GapCounts {
  int dimension = 0;  // n - 2
  std::int64_t oracle = 0;
  std::int64_t formula = 0;
  std::int64_t brimkov = 0;
  bool agree() const noexcept { return oracle == formula && formula == brimkov; }
};

struct Report {
  int n = 0;
  std::size_t voxels = 0;
  std::vector<DimensionCounts> census;  // indexed by dimension 0..n
  std::optional<GapCounts> gaps;        // absent when n < 2
  std::optional<std::vector<Cell>> hubs;
  std::optional<std::array<std::int64_t, 5>> classification;
};

struct ReportOptions {
  bool hubs = false;
  bool classification = false;
};

Report build_report(const DigitalObject& d, const ReportOptions& opts = {});

// Frozen schema; keys appear in this order:
//   n, voxels, census[{i, c, c_star, c_prime, beta}], gaps{dimension, oracle,
//   formula, brimkov, agree} | null, hubs[[doubled coords]]?, classification{tag: count}?
nlohmann::ordered_json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace dgap::cli
