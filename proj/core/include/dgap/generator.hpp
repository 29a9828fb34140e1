#pragma once

// Named shapes and seeded random objects.
//
// Random objects use std::mt19937_64 (its output sequence is fixed by the C++
// standard) and include each voxel of the extent box, visited in lexicographic
// order, iff  draw % density.den < density.num. No std distribution is used, so
// the result is identical on every conforming platform. This scheme is
// identified as kRandomAlgorithm in written fixture files.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgap/object.hpp"

namespace dgap {

inline constexpr std::string_view kRandomAlgorithm = "mt19937_64-mod/v1";
inline constexpr std::int64_t kMaxEnumerationVolume = 20;

enum class ShapeKind { Single, Box, DiagonalPair, LBlock, FacetBlock, Checkerboard, Random };

std::string_view to_string(ShapeKind kind) noexcept;
// Throws std::invalid_argument for an unknown name.
ShapeKind parse_shape_kind(std::string_view name);

// Non-negative fraction num/den in lowest terms.
struct Density {
  std::uint64_t num = 1;
  std::uint64_t den = 2;

  // Accepts "p/q", a decimal such as "0.25", or "1". Throws std::invalid_argument.
  static Density parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const Density&, const Density&) = default;
};

struct ShapeSpec {
  ShapeKind kind = ShapeKind::Single;
  int n = 3;
  std::vector<std::int64_t> extents;  // Box, Checkerboard, Random
  Density density;                    // Random
  std::uint64_t seed = 0;             // Random
};

// Throws std::invalid_argument for an inconsistent spec.
void validate(const ShapeSpec& spec);

// Canonical placements start at the origin:
//   single        {0}
//   diagonal_pair {0, e1+e2}
//   facet_block   {0, e1}
//   l_block       {0, e1, e2}   (the (n-2)-block at e1/2+e2/2 minus e1+e2)
//   box, checkerboard, random: voxels in [0, extents)
DigitalObject generate(const ShapeSpec& spec);

// Every subset of the extent box, exactly once, in increasing bitmask order
// over the lexicographically ordered box positions.
class ObjectEnumerator {
 public:
  // Throws ResourceLimit when the box volume exceeds kMaxEnumerationVolume.
  ObjectEnumerator(int n, std::vector<std::int64_t> extents);

  std::uint64_t total() const noexcept { return total_; }
  std::optional<DigitalObject> next();

 private:
  int n_;
  std::vector<std::vector<std::int64_t>> positions_;
  std::uint64_t mask_ = 0;
  std::uint64_t total_ = 0;
};

inline ObjectEnumerator enumerate_all_objects(int n, std::vector<std::int64_t> extents) {
  return ObjectEnumerator(n, std::move(extents));
}

// Lattice points of [0, extents) in lexicographic order (last axis fastest).
std::vector<std::vector<std::int64_t>> box_positions(const std::vector<std::int64_t>& extents);

}  // namespace dgap
