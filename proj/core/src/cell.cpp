#include "dgap/cell.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dgap/detail/enumerate.hpp"
#include "dgap/errors.hpp"

namespace dgap {
namespace {

bool is_even(std::int64_t v) { return (v & 1) == 0; }

void check_ambient(std::size_t n) {
  if (n < 1 || n > static_cast<std::size_t>(kMaxDim)) {
    throw std::invalid_argument("cell dimension n=" + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxDim) + "]");
  }
}

void check_coord(std::int64_t v) {
  if (v > kCoordLimit || v < -kCoordLimit) {
    throw std::invalid_argument("cell coordinate " + std::to_string(v) + " exceeds 2^60");
  }
}

void require_same_n(const Cell& a, const Cell& b) {
  if (a.ambient() != b.ambient()) {
    throw DimensionMismatch("cells live in C_" + std::to_string(a.ambient()) + " and C_" +
                            std::to_string(b.ambient()));
  }
}

void require_voxel(const Cell& v) {
  if (!v.is_voxel()) throw NotACell("expected a voxel, got " + v.to_string());
}

// Containment where `extends(c)` decides which parity spans an interval.
template <class Extends>
bool contains_impl(std::span<const std::int64_t> outer, std::span<const std::int64_t> inner,
                   Extends extends) {
  for (std::size_t j = 0; j < outer.size(); ++j) {
    const std::int64_t f = outer[j];
    const std::int64_t e = inner[j];
    if (extends(f)) {
      if (e < f - 1 || e > f + 1) return false;
    } else if (e != f) {
      return false;
    }
  }
  return true;
}

}  // namespace

Cell::Cell(std::span<const std::int64_t> doubled) : n_(static_cast<int>(doubled.size())) {
  check_ambient(doubled.size());
  for (std::size_t j = 0; j < doubled.size(); ++j) {
    check_coord(doubled[j]);
    coords_[j] = doubled[j];
  }
}

Cell::Cell(std::initializer_list<std::int64_t> doubled)
    : Cell(std::span<const std::int64_t>(doubled.begin(), doubled.size())) {}

Cell Cell::voxel(std::span<const std::int64_t> center) {
  check_ambient(center.size());
  Cell c(Unchecked{}, static_cast<int>(center.size()));
  for (std::size_t j = 0; j < center.size(); ++j) {
    if (center[j] > kCoordLimit / 2 || center[j] < -kCoordLimit / 2) {
      throw std::invalid_argument("voxel center " + std::to_string(center[j]) + " exceeds 2^59");
    }
    c.coords_[j] = 2 * center[j];
  }
  return c;
}

Cell Cell::voxel(std::initializer_list<std::int64_t> center) {
  return voxel(std::span<const std::int64_t>(center.begin(), center.size()));
}

int Cell::dimension() const noexcept {
  int d = 0;
  for (int j = 0; j < n_; ++j) d += is_even(coords_[static_cast<std::size_t>(j)]) ? 1 : 0;
  return d;
}

std::vector<std::int64_t> Cell::center() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(j)] = coords_[static_cast<std::size_t>(j)] / 2;
  return out;
}

std::string Cell::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int j = 0; j < n_; ++j) {
    if (j) os << ',';
    os << coords_[static_cast<std::size_t>(j)];
  }
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const Cell& a, const Cell& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (int j = 0; j < a.n_; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    if (auto c = a.coords_[idx] <=> b.coords_[idx]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t CellHash::operator()(const Cell& c) const noexcept {
  // splitmix64 finalizer over each component
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(c.ambient());
  for (std::int64_t v : c.coords()) {
    std::uint64_t z = h + static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

Representative representative(const Cell& c) {
  Representative r;
  r.point.reserve(static_cast<std::size_t>(c.ambient()));
  r.direction.reserve(static_cast<std::size_t>(c.ambient()));
  for (std::int64_t v : c.coords()) {
    if (is_even(v)) {
      r.point.push_back(v / 2);
      r.direction.push_back(0);
    } else {
      r.point.push_back((v - 1) / 2);
      r.direction.push_back(1);
    }
  }
  return r;
}

bool contains(const Cell& outer, const Cell& inner) {
  require_same_n(outer, inner);
  return contains_impl(outer.coords(), inner.coords(), is_even);
}

bool incident(const Cell& a, const Cell& b) { return contains(a, b) || contains(b, a); }

bool bounds(const Cell& e, const Cell& f) {
  require_same_n(e, f);
  return e.dimension() < f.dimension() && contains(f, e);
}

DualCell dual(const Cell& e) noexcept { return DualCell(e); }

bool contains(const DualCell& outer, const DualCell& inner) {
  require_same_n(outer.source(), inner.source());
  return contains_impl(outer.coords(), inner.coords(), [](std::int64_t v) { return !is_even(v); });
}

bool bounds(const DualCell& e, const DualCell& f) {
  require_same_n(e.source(), f.source());
  return e.dimension() < f.dimension() && contains(f, e);
}

std::vector<Cell> faces(const Cell& f, int i) {
  const int dim = f.dimension();
  if (i < 0 || i > dim) {
    throw std::out_of_range("face dimension " + std::to_string(i) + " outside [0, " + std::to_string(dim) + "]");
  }
  std::vector<Cell> out;
  detail::for_each_face(f, i, [&](const Cell& c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> cofaces(const Cell& e, int j) {
  const int dim = e.dimension();
  if (j < dim || j > e.ambient()) {
    throw std::out_of_range("coface dimension " + std::to_string(j) + " outside [" + std::to_string(dim) +
                            ", " + std::to_string(e.ambient()) + "]");
  }
  std::vector<Cell> out;
  detail::for_each_coface(e, j, [&](const Cell& c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> block(const Cell& e) { return cofaces(e, e.ambient()); }

std::optional<Cell> voxel_intersection(const Cell& v1, const Cell& v2) {
  require_same_n(v1, v2);
  require_voxel(v1);
  require_voxel(v2);
  CellBuilder b(v1);
  for (int j = 0; j < v1.ambient(); ++j) {
    const std::int64_t d = v2[j] - v1[j];
    if (d == 0) continue;
    if (d == 2 || d == -2) {
      b.set(j, v1[j] + d / 2);
    } else {
      return std::nullopt;
    }
  }
  return b.get();
}

Adjacency adjacency(const Cell& v1, const Cell& v2) {
  require_same_n(v1, v2);
  require_voxel(v1);
  require_voxel(v2);
  if (v1 == v2) throw std::invalid_argument("adjacency of a voxel with itself: " + v1.to_string());
  auto shared = voxel_intersection(v1, v2);
  if (!shared) return {};
  // The intersection of two closed unit cubes is a single product of intervals,
  // hence always one cell.
  return {shared->dimension(), true};
}

bool is_adjacent(const Cell& v1, const Cell& v2, int i) {
  auto a = adjacency(v1, v2);
  return a.adjacent_at && *a.adjacent_at >= i;
}

std::vector<Cell> adjacent_voxels(const Cell& v, int i, std::span<const Cell> candidates) {
  std::vector<Cell> out;
  for (const Cell& u : candidates) {
    if (u == v) continue;
    if (is_adjacent(v, u, i)) out.push_back(u);
  }
  return out;
}

}  // namespace dgap
