#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dgap/errors.hpp"
#include "dgap/gaps.hpp"
#include "dgap/generator.hpp"
#include "oracle.hpp"

using namespace dgap;

namespace {

DigitalObject shape(ShapeKind k, int n) { return generate({k, n, {}, {}, 0}); }

DigitalObject random_object(int n, std::int64_t extent, std::uint64_t seed) {
  ShapeSpec s;
  s.kind = ShapeKind::Random;
  s.n = n;
  s.extents.assign(static_cast<std::size_t>(n), extent);
  s.seed = seed;
  return generate(s);
}

const DigitalObject kSquare = DigitalObject::from_centers(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
const DigitalObject kCube = generate({ShapeKind::Box, 3, {2, 2, 2}, {}, 0});

}  // namespace

TEST_SUITE("gaps") {

TEST_CASE("classify_cell") {
  const auto pair = shape(ShapeKind::DiagonalPair, 3);
  const auto hub = classify_cell(pair, Cell{1, 1, 0});
  CHECK(hub.tag == HubTag::GapTandem);
  CHECK(hub.witnesses == std::vector<Cell>{Cell::voxel({0, 0, 0}), Cell::voxel({1, 1, 0})});

  const auto domino = shape(ShapeKind::FacetBlock, 3);
  CHECK(classify_cell(domino, Cell{1, 1, 0}).tag == HubTag::FacetPairBlock);
  CHECK(classify_cell(domino, Cell{-1, 1, 0}).tag == HubTag::Simple);

  CHECK(classify_cell(kSquare, Cell{1, 1}).tag == HubTag::FullBlock);
  CHECK(classify_cell(shape(ShapeKind::LBlock, 3), Cell{1, 1, 0}).tag == HubTag::LBlock);

  CHECK_THROWS_AS(classify_cell(pair, Cell{1, 1, 1}), std::out_of_range);
  CHECK_THROWS_AS(classify_cell(pair, Cell{9, 9, 0}), NotACell);
  CHECK_THROWS_AS(classify_cell(DigitalObject::from_centers(1, {{0}}), Cell{1}), std::out_of_range);
}

TEST_CASE("is_gap") {
  const auto pixels = shape(ShapeKind::DiagonalPair, 2);
  CHECK(is_gap(pixels, Cell{1, 1}, 0));
  const auto domino = shape(ShapeKind::FacetBlock, 3);
  for (const Cell& e : cells(domino, 1)) CHECK_FALSE(is_gap(domino, e, 1));
  const auto single = shape(ShapeKind::Single, 3);
  for (int i = 0; i <= 1; ++i)
    for (const Cell& e : cells(single, i)) CHECK_FALSE(is_gap(single, e, i));

  // 0-gap in 3D: voxels meeting in a single vertex.
  const auto corner = DigitalObject::from_centers(3, {{0, 0, 0}, {1, 1, 1}});
  CHECK(is_gap(corner, Cell{1, 1, 1}, 0));
  CHECK(count_gaps_oracle(corner, 0).count == 1);
  CHECK(count_gaps_oracle(corner, 1).count == 0);
  // Two voxels sharing an edge are not a 0-gap at that edge's endpoints.
  for (const Cell& e : cells(shape(ShapeKind::DiagonalPair, 3), 0))
    CHECK_FALSE(is_gap(shape(ShapeKind::DiagonalPair, 3), e, 0));

  CHECK_THROWS_AS(is_gap(single, Cell{0, 1, 1}, 2), std::out_of_range);
  CHECK_THROWS_AS(is_gap(single, Cell{1, 1, 1}, 1), std::out_of_range);
}

TEST_CASE("is_gap_by_adjacency") {
  CHECK(is_gap_by_adjacency(shape(ShapeKind::DiagonalPair, 3), Cell{1, 1, 0}));
  CHECK_FALSE(is_gap_by_adjacency(shape(ShapeKind::LBlock, 3), Cell{1, 1, 0}));
  CHECK_FALSE(is_gap_by_adjacency(shape(ShapeKind::FacetBlock, 3), Cell{1, 1, 0}));
  CHECK_FALSE(is_gap_by_adjacency(kCube, Cell{1, 1, 0}));
}

TEST_CASE("gap counts by three methods") {
  struct Case {
    const char* name;
    DigitalObject d;
    std::int64_t g;
  };
  const std::vector<Case> cases = {
      {"single n=3", shape(ShapeKind::Single, 3), 0},
      {"diagonal pair n=3", shape(ShapeKind::DiagonalPair, 3), 1},
      {"diagonal pair n=2", shape(ShapeKind::DiagonalPair, 2), 1},
      {"L-block n=3", shape(ShapeKind::LBlock, 3), 0},
      {"2x2x2 cube", kCube, 0},
      {"empty n=3", DigitalObject(3, {}), 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto r = count_gaps_oracle(c.d, c.d.ambient() - 2);
    CHECK(r.count == c.g);
    CHECK(r.hubs.size() == static_cast<std::size_t>(c.g));
    CHECK(r.formula == c.g);
    CHECK(r.brimkov == c.g);
    CHECK(count_gaps_formula(c.d) == c.g);
    CHECK(count_gaps_brimkov(c.d) == c.g);
    CHECK(oracle::brute_gap_count(c.d, c.d.ambient() - 2) == c.g);
  }
  CHECK_THROWS_AS(count_gaps_oracle(kCube, 2), std::out_of_range);
  CHECK_THROWS_AS(count_gaps_formula(DigitalObject::from_centers(1, {{0}})), std::out_of_range);
}

TEST_CASE("census terms of the gap formulas") {
  const auto pair = census(shape(ShapeKind::DiagonalPair, 3));
  CHECK(2 * pair.c_star(2) - pair.c_star(1) == 1);
  CHECK(-2 * 3 * 2 * pair.c(3) + 2 * 2 * pair.c(2) - pair.c(1) + pair.beta(1) == 1);
  const auto pixels = census(shape(ShapeKind::DiagonalPair, 2));
  CHECK(pixels.c_star(1) == 8);
  CHECK(pixels.c_star(0) == 7);
}

TEST_CASE("hub/nub partition") {
  const auto p = hub_nub_partition(shape(ShapeKind::DiagonalPair, 3));
  CHECK(p.hubs == std::vector<Cell>{Cell{1, 1, 0}});
  CHECK(p.nubs.size() == 22);
  const auto dom = hub_nub_partition(shape(ShapeKind::FacetBlock, 3));
  CHECK(dom.hubs.empty());
  CHECK(dom.nubs.size() == 20);
  const auto one = hub_nub_partition(shape(ShapeKind::Single, 3));
  CHECK(one.hubs.empty());
  CHECK(one.nubs.size() == 12);
}

TEST_CASE("histogram sums to c_{n-2}") {
  const auto h = classification_histogram(kSquare);
  CHECK(h[static_cast<std::size_t>(HubTag::FullBlock)] == 1);
  CHECK(std::accumulate(h.begin(), h.end(), std::int64_t{0}) == 9);
  const auto single = classification_histogram(shape(ShapeKind::Single, 3));
  CHECK(single[static_cast<std::size_t>(HubTag::Simple)] == 12);
}

TEST_CASE("all methods agree with the interval oracle on random objects") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < (n == 4 ? 5u : 20u); ++seed) {
      const auto d = random_object(n, n == 4 ? 3 : 4, seed);
      CAPTURE(n);
      CAPTURE(seed);
      const auto r = count_gaps_oracle(d, n - 2);
      CHECK(r.count == oracle::brute_gap_count(d, n - 2));
      CHECK(r.formula == r.count);
      CHECK(r.brimkov == r.count);
      for (const Cell& e : cells(d, n - 2)) {
        CHECK(is_gap(d, e, n - 2) == is_gap_by_adjacency(d, e));
        const auto cls = classify_cell(d, e);
        CHECK((cls.tag == HubTag::FullBlock) == !is_free(d, e));
      }
      const auto part = hub_nub_partition(d);
      for (const Cell& e : part.hubs) CHECK(b_boundary(d, e, n - 1) == 4);
      for (const Cell& e : part.nubs) CHECK(b_boundary(d, e, n - 1) == 2);
      if (n >= 3) {
        for (int i = 0; i < n - 2; ++i) CHECK(count_gaps_oracle(d, i).count == oracle::brute_gap_count(d, i));
      }
    }
  }
}

TEST_CASE("gap count is invariant under translation and axis permutation") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto d = random_object(3, 4, seed);
    const auto g = count_gaps_oracle(d, 1).count;
    const std::vector<std::int64_t> off{5, -3, 2};
    CHECK(count_gaps_oracle(d.translated(off), 1).count == g);
    std::vector<int> perm{0, 1, 2};
    while (std::next_permutation(perm.begin(), perm.end())) CHECK(count_gaps_oracle(d.permuted(perm), 1).count == g);
  }
}

TEST_CASE("checkerboards are gap-dense") {
  // 3x3 pixel checkerboard: every interior vertex sits between two diagonal pixels.
  const auto cb2 = generate({ShapeKind::Checkerboard, 2, {3, 3}, {}, 0});
  CHECK(cb2.size() == 5);
  CHECK(count_gaps_oracle(cb2, 0).count == 4);
  CHECK(count_gaps_formula(cb2) == 4);

  const auto cb3 = generate({ShapeKind::Checkerboard, 3, {3, 3, 3}, {}, 0});
  const auto r = count_gaps_oracle(cb3, 1);
  CHECK(r.count == oracle::brute_gap_count(cb3, 1));
  CHECK(r.formula == r.count);
  CHECK(r.brimkov == r.count);
  CHECK(r.count > 0);
}

}  // TEST_SUITE
