#pragma once

// Cells of the cubical grid C_n in doubled coordinates.
//
// A cell is stored as twice its center. Along an axis with an even component
// the cell spans the closed interval [c/2 - 1/2, c/2 + 1/2]; along an axis with
// an odd component it is the single point c/2. The encoding is canonical, so
// equality, hashing and ordering are plain component-wise integer operations.
//
// Dual cells reuse the same vector but swap the role of the parities: on the
// half-shifted lattice odd components extend and even components are flat.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dgap {

inline constexpr int kMaxDim = 16;
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 60;

class Cell {
 public:
  // Doubled coordinates; n = coords.size(). Throws std::invalid_argument when n
  // is outside [1, kMaxDim] or a component exceeds kCoordLimit in magnitude.
  explicit Cell(std::span<const std::int64_t> doubled);
  Cell(std::initializer_list<std::int64_t> doubled);

  // The n-voxel centered at an integer point.
  static Cell voxel(std::span<const std::int64_t> center);
  static Cell voxel(std::initializer_list<std::int64_t> center);

  int ambient() const noexcept { return n_; }
  int dimension() const noexcept;
  bool is_voxel() const noexcept { return dimension() == n_; }

  std::int64_t operator[](int axis) const noexcept { return coords_[static_cast<std::size_t>(axis)]; }
  std::span<const std::int64_t> coords() const noexcept {
    return {coords_.data(), static_cast<std::size_t>(n_)};
  }

  // Voxel center in lattice units. Only meaningful for voxels.
  std::vector<std::int64_t> center() const;

  // Axis j extends iff the doubled component is even.
  bool extends(int axis) const noexcept { return (coords_[static_cast<std::size_t>(axis)] & 1) == 0; }

  std::string to_string() const;

  friend bool operator==(const Cell&, const Cell&) = default;
  // Lexicographic on coords (ambient dimension first, so mixed-n sets still order totally).
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) noexcept;

 private:
  struct Unchecked {};
  Cell(Unchecked, int n) noexcept : n_(n) {}

  int n_ = 0;
  std::array<std::int64_t, kMaxDim> coords_{};

  friend class CellBuilder;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept;
};

// Internal mutable view used by the enumeration routines; skips range checks
// because it only ever shifts validated coordinates by at most 1.
class CellBuilder {
 public:
  explicit CellBuilder(const Cell& seed) noexcept : cell_(seed) {}
  void shift(int axis, std::int64_t delta) noexcept { cell_.coords_[static_cast<std::size_t>(axis)] += delta; }
  void set(int axis, std::int64_t value) noexcept { cell_.coords_[static_cast<std::size_t>(axis)] = value; }
  const Cell& get() const noexcept { return cell_; }

 private:
  Cell cell_;
};

// One (x, theta) representative of a cell, with x in Z^n and theta in {-1,0,1}^n.
// Not unique; for display only. Odd components pick x = (c - 1) / 2, theta = +1.
struct Representative {
  std::vector<std::int64_t> point;
  std::vector<int> direction;
};
Representative representative(const Cell& c);

class DualCell {
 public:
  explicit DualCell(const Cell& source) noexcept : cell_(source) {}

  int ambient() const noexcept { return cell_.ambient(); }
  // Number of odd components.
  int dimension() const noexcept { return cell_.ambient() - cell_.dimension(); }
  std::span<const std::int64_t> coords() const noexcept { return cell_.coords(); }
  const Cell& source() const noexcept { return cell_; }

  friend bool operator==(const DualCell&, const DualCell&) = default;

 private:
  Cell cell_;
};

// e subset-of f as point sets. Throws DimensionMismatch.
bool contains(const Cell& outer, const Cell& inner);
bool incident(const Cell& a, const Cell& b);
// e < f: incident and strictly lower dimension.
bool bounds(const Cell& e, const Cell& f);

// Same relations on the dual lattice.
bool contains(const DualCell& outer, const DualCell& inner);
bool bounds(const DualCell& e, const DualCell& f);

DualCell dual(const Cell& e) noexcept;

// All i-faces of f, sorted. Throws std::out_of_range unless 0 <= i <= dim(f).
std::vector<Cell> faces(const Cell& f, int i);
// The j-flower of e (all j-cells bounded by e), sorted. Throws std::out_of_range
// unless dim(e) <= j <= n. j == dim(e) yields {e}.
std::vector<Cell> cofaces(const Cell& e, int j);
// All voxels bounded by e; cofaces(e, n).
std::vector<Cell> block(const Cell& e);

// Intersection of two voxels, if nonempty. Throws NotACell for non-voxels.
std::optional<Cell> voxel_intersection(const Cell& v1, const Cell& v2);

struct Adjacency {
  std::optional<int> adjacent_at;  // dimension of v1 ∩ v2, empty when disjoint
  bool strict = false;             // v1 ∩ v2 is exactly one cell of that dimension
};

// Throws NotACell when either argument is not a voxel, std::invalid_argument when v1 == v2.
Adjacency adjacency(const Cell& v1, const Cell& v2);

// v1 is i-adjacent to v2 (shares at least an i-cell).
bool is_adjacent(const Cell& v1, const Cell& v2, int i);

// A_i(v) restricted to a candidate voxel set, in candidate order.
std::vector<Cell> adjacent_voxels(const Cell& v, int i, std::span<const Cell> candidates);

}  // namespace dgap
