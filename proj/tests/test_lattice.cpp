#include "hexforge/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "hexforge/rng.hpp"

using namespace hexforge;

namespace {

OccupancyGrid grid_from_rows(const std::vector<std::string>& rows_top_down) {
  // Rows given top-down as in the text format.
  OccupancyGrid g;
  g.L = static_cast<int>(rows_top_down.size());
  g.occ.assign(static_cast<size_t>(g.L) * g.L, 0);
  for (int i = 0; i < g.L; ++i) {
    int r = g.L - 1 - i;
    for (int c = 0; c < g.L; ++c) g.set(r, c, rows_top_down[i][c] == '1');
  }
  return g;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("sample_grid degenerate probabilities") {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    auto full = sample_grid({4, 1.0, seed});
    CHECK(full.occupied_count() == 16);
    auto empty = sample_grid({4, 0.0, seed});
    CHECK(empty.occupied_count() == 0);
  }
}

TEST_CASE("sample_grid occupied fraction concentrates") {
  // Binomial concentration: |f - 0.7| <= 3*sqrt(0.7*0.3/65536).
  auto grid = sample_grid({256, 0.7, 1});
  double f = grid.occupied_fraction();
  double tol = 3.0 * std::sqrt(0.7 * 0.3 / 65536.0);
  CHECK(std::abs(f - 0.7) <= tol);
}

TEST_CASE("sample_grid determinism and order independence") {
  auto a = sample_grid({32, 0.6, 7});
  auto b = sample_grid({32, 0.6, 7});
  CHECK(a.occ == b.occ);
  // Per-site draws keyed by (seed,row,col): a smaller lattice agrees with the
  // corresponding corner of a larger one.
  auto small = sample_grid({8, 0.6, 7});
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) CHECK(small.occupied(r, c) == a.occupied(r, c));
}

TEST_CASE("sample_grid monotone coupling in p") {
  for (std::uint64_t seed : {3ull, 5ull}) {
    auto lo = sample_grid({24, 0.35, seed});
    auto hi = sample_grid({24, 0.80, seed});
    for (size_t i = 0; i < lo.occ.size(); ++i)
      if (lo.occ[i]) CHECK(hi.occ[i]);
  }
}

TEST_CASE("grid_to_graph basic shapes") {
  SUBCASE("full 2x2 grid has 4 vertices, 4 edges") {
    auto g = grid_to_graph(sample_grid({2, 1.0, 0}));
    CHECK(g.n_occupied == 4);
    CHECK(g.edge_count() == 4);
  }
  SUBCASE("single occupied site") {
    OccupancyGrid grid;
    grid.L = 3;
    grid.occ.assign(9, 0);
    grid.set(1, 1, true);
    auto g = grid_to_graph(grid);
    CHECK(g.n_occupied == 1);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("checkerboard on 4x4: 8 vertices, no edges") {
    OccupancyGrid grid;
    grid.L = 4;
    grid.occ.assign(16, 0);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if ((r + c) % 2 == 0) grid.set(r, c, true);
    auto g = grid_to_graph(grid);
    CHECK(g.n_occupied == 8);
    CHECK(g.edge_count() == 0);
  }
}

TEST_CASE("edge count matches direct pair counting") {
  auto grid = sample_grid({20, 0.55, 11});
  auto g = grid_to_graph(grid);
  std::size_t direct = 0;
  for (int r = 0; r < 20; ++r)
    for (int c = 0; c < 20; ++c) {
      if (!grid.occupied(r, c)) continue;
      if (grid.occupied(r, c + 1)) ++direct;
      if (grid.occupied(r + 1, c)) ++direct;
    }
  CHECK(g.edge_count() == direct);
}

TEST_CASE("connected_components") {
  SUBCASE("empty graph") {
    auto g = grid_to_graph(sample_grid({5, 0.0, 0}));
    CHECK(connected_components(g).empty());
  }
  SUBCASE("full grid is one component") {
    auto g = grid_to_graph(sample_grid({6, 1.0, 0}));
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 36);
  }
  SUBCASE("two sites at distance 2 are singletons") {
    OccupancyGrid grid;
    grid.L = 5;
    grid.occ.assign(25, 0);
    grid.set(2, 1, true);
    grid.set(2, 3, true);
    auto comps = connected_components(grid_to_graph(grid));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<VertexId>{{2, 1}});
    CHECK(comps[1] == std::vector<VertexId>{{2, 3}});
  }
  SUBCASE("partition properties on a random sample") {
    auto g = grid_to_graph(sample_grid({24, 0.55, 13}));
    auto comps = connected_components(g);
    std::set<VertexId> seen;
    size_t total = 0;
    for (const auto& comp : comps) {
      total += comp.size();
      for (VertexId v : comp) {
        CHECK(g.has_vertex(v));
        CHECK(!seen.count(v));
        seen.insert(v);
      }
    }
    CHECK(total == static_cast<size_t>(g.n_occupied));
    // No edges between distinct components.
    std::map<VertexId, int> comp_of;
    for (size_t i = 0; i < comps.size(); ++i)
      for (VertexId v : comps[i]) comp_of[v] = static_cast<int>(i);
    for (const auto& comp : comps)
      for (VertexId v : comp)
        g.for_each_neighbor(v, [&](VertexId w) { CHECK(comp_of[w] == comp_of[v]); });
    // Components listed by smallest contained vertex.
    for (size_t i = 1; i < comps.size(); ++i) CHECK(comps[i - 1][0] < comps[i][0]);
  }
}

TEST_CASE("k_neighborhood") {
  auto full5 = grid_to_graph(sample_grid({5, 1.0, 0}));
  SUBCASE("k=0 returns S") {
    std::vector<VertexId> s{{2, 2}, {0, 0}};
    auto n = k_neighborhood(full5, s, 0, NeighborhoodDomain::AllSites);
    CHECK(n == std::vector<VertexId>{{0, 0}, {2, 2}});
  }
  SUBCASE("interior site, k=1: site plus 4 neighbors") {
    auto n = k_neighborhood(full5, {{2, 2}}, 1, NeighborhoodDomain::OccupiedSites);
    CHECK(n == std::vector<VertexId>{{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}});
  }
  SUBCASE("bottom row of full 5x5, k=2: bottom three rows") {
    std::vector<VertexId> bottom;
    for (int c = 0; c < 5; ++c) bottom.push_back({0, c});
    auto n = k_neighborhood(full5, bottom, 2, NeighborhoodDomain::AllSites);
    // Oracle: enumerate Manhattan distances directly.
    std::vector<VertexId> expect;
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c) {
        int best = 99;
        for (int cc = 0; cc < 5; ++cc) best = std::min(best, r + std::abs(c - cc));
        if (best <= 2) expect.push_back({r, c});
      }
    CHECK(n == expect);
    CHECK(n.size() == 15);
  }
  SUBCASE("distance crosses holes") {
    // Manhattan distance is measured over all sites, occupied or not.
    OccupancyGrid grid;
    grid.L = 3;
    grid.occ.assign(9, 0);
    grid.set(0, 0, true);
    grid.set(0, 2, true);
    auto g = grid_to_graph(grid);
    auto n = k_neighborhood(g, {{0, 0}}, 2, NeighborhoodDomain::OccupiedSites);
    CHECK(n == std::vector<VertexId>{{0, 0}, {0, 2}});
  }
}

TEST_CASE("grid text format round-trips") {
  LatticeConfig cfg{30, 0.592746, 7};
  auto grid = sample_grid(cfg);
  std::string text = grid_to_text(grid, cfg);
  CHECK(text.substr(0, text.find('\n')) == "30 0.592746 7");
  auto back = grid_from_text(text);
  CHECK(back.config.L == cfg.L);
  CHECK(back.config.p == cfg.p);
  CHECK(back.config.seed == cfg.seed);
  CHECK(back.grid.occ == grid.occ);
  CHECK(grid_to_text(back.grid, back.config) == text);
}

TEST_CASE("grid text format row order") {
  auto g = grid_from_rows({"110", "000", "001"});
  // Top line of the file is row L-1.
  CHECK(g.occupied(2, 0));
  CHECK(g.occupied(2, 1));
  CHECK(g.occupied(0, 2));
  CHECK(g.occupied_count() == 3);
}

TEST_CASE("malformed grid files are rejected") {
  CHECK_THROWS_AS(grid_from_text("not a grid"), std::invalid_argument);
  CHECK_THROWS_AS(grid_from_text("2 1.5 0\n11\n11\n"), std::invalid_argument);
  CHECK_THROWS_AS(grid_from_text("2 0.5 0\n11\n"), std::invalid_argument);
  CHECK_THROWS_AS(grid_from_text("2 0.5 0\n11\n1x\n"), std::invalid_argument);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(sample_grid({0, 0.5, 0}), std::invalid_argument);
  CHECK_THROWS_AS(sample_grid({4, -0.1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(sample_grid({4, 1.5, 0}), std::invalid_argument);
}

}  // TEST_SUITE
