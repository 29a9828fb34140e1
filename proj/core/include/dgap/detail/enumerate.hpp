#pragma once

#include <array>

#include "dgap/cell.hpp"

namespace dgap::detail {

// Calls emit(cell) for every way of choosing k of the listed axes and shifting
// each chosen axis by -1 or +1. Unordered; no allocation.
template <class Emit>
void expand_axes(const Cell& seed, const std::array<int, kMaxDim>& axes, int m, int k, Emit&& emit) {
  std::array<int, kMaxDim> chosen{};
  int depth = 0;

  auto signs = [&](auto&& self, CellBuilder& b, int idx) -> void {
    if (idx == depth) {
      emit(b.get());
      return;
    }
    const int axis = chosen[static_cast<std::size_t>(idx)];
    b.shift(axis, -1);
    self(self, b, idx + 1);
    b.shift(axis, 2);
    self(self, b, idx + 1);
    b.shift(axis, -1);
  };

  auto subsets = [&](auto&& self, int start) -> void {
    if (depth == k) {
      CellBuilder b(seed);
      signs(signs, b, 0);
      return;
    }
    for (int a = start; a <= m - (k - depth); ++a) {
      chosen[static_cast<std::size_t>(depth++)] = axes[static_cast<std::size_t>(a)];
      self(self, a + 1);
      --depth;
    }
  };
  subsets(subsets, 0);
}

// Every j-cell bounded by e (e itself when j == dim e). Caller validates j.
template <class Emit>
void for_each_coface(const Cell& e, int j, Emit&& emit) {
  std::array<int, kMaxDim> axes{};
  int m = 0;
  for (int a = 0; a < e.ambient(); ++a)
    if (!e.extends(a)) axes[static_cast<std::size_t>(m++)] = a;
  expand_axes(e, axes, m, j - e.dimension(), emit);
}

// Every i-face of f. Caller validates i.
template <class Emit>
void for_each_face(const Cell& f, int i, Emit&& emit) {
  std::array<int, kMaxDim> axes{};
  int m = 0;
  for (int a = 0; a < f.ambient(); ++a)
    if (f.extends(a)) axes[static_cast<std::size_t>(m++)] = a;
  expand_axes(f, axes, m, f.dimension() - i, emit);
}

}  // namespace dgap::detail
