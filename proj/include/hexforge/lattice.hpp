#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hexforge {

// Site percolation on the square lattice. Coordinates are (row, col) with
// row 0 the bottom boundary and col 0 the left boundary. H-crossings run
// col 0 -> col L-1, V-crossings run row 0 -> row L-1.

struct LatticeConfig {
  int L = 1;                  // sites per side
  double p = 1.0;             // site occupation probability
  std::uint64_t seed = 0;     // master RNG seed

  void validate() const;      // throws std::invalid_argument
};

struct VertexId {
  int row = 0;
  int col = 0;
  auto operator<=>(const VertexId&) const = default;
};

std::ostream& operator<<(std::ostream& os, const VertexId& v);

struct OccupancyGrid {
  int L = 0;
  std::vector<std::uint8_t> occ;  // row-major, occ[row*L + col]

  bool in_bounds(int r, int c) const { return r >= 0 && r < L && c >= 0 && c < L; }
  bool occupied(int r, int c) const { return in_bounds(r, c) && occ[static_cast<size_t>(r) * L + c]; }
  bool occupied(VertexId v) const { return occupied(v.row, v.col); }
  void set(int r, int c, bool value) { occ[static_cast<size_t>(r) * L + c] = value ? 1 : 0; }
  int occupied_count() const;
  double occupied_fraction() const;
};

// The graph induced by the occupied sites: vertices are occupied sites and
// edges join occupied nearest-neighbour pairs. The adjacency is implicit in
// the occupancy bitmap.
struct SiteGraph {
  int L = 0;
  std::vector<std::uint8_t> occ;
  int n_occupied = 0;

  bool in_bounds(int r, int c) const { return r >= 0 && r < L && c >= 0 && c < L; }
  bool has_vertex(int r, int c) const { return in_bounds(r, c) && occ[static_cast<size_t>(r) * L + c]; }
  bool has_vertex(VertexId v) const { return has_vertex(v.row, v.col); }
  bool has_edge(VertexId a, VertexId b) const;
  int degree(VertexId v) const;

  std::vector<VertexId> vertices() const;       // sorted (row, col)
  std::vector<VertexId> neighbors(VertexId v) const;
  std::size_t edge_count() const;

  template <typename Fn>
  void for_each_neighbor(VertexId v, Fn&& fn) const {
    static constexpr int dr[4] = {0, 1, 0, -1};
    static constexpr int dc[4] = {1, 0, -1, 0};
    for (int d = 0; d < 4; ++d) {
      int r = v.row + dr[d], c = v.col + dc[d];
      if (has_vertex(r, c)) fn(VertexId{r, c});
    }
  }
};

// Deterministic Bernoulli(p) occupancy. Each site draws a uniform keyed by
// (seed, row, col), and is occupied when the draw falls below p. For a fixed
// seed the occupied set is monotone in p (shared-uniform coupling).
OccupancyGrid sample_grid(const LatticeConfig& config);

SiteGraph grid_to_graph(const OccupancyGrid& grid);

// Maximal connected sets, listed by smallest contained VertexId; each
// component is itself sorted.
std::vector<std::vector<VertexId>> connected_components(const SiteGraph& graph);

enum class NeighborhoodDomain { AllSites, OccupiedSites };

// All lattice sites within Manhattan distance <= k of S (distance measured
// over the full lattice, occupied or not), restricted to the requested
// domain. k = 0 returns S itself (intersected with the domain).
std::vector<VertexId> k_neighborhood(const SiteGraph& graph,
                                     const std::vector<VertexId>& S, int k,
                                     NeighborhoodDomain domain);

// Grid text format: first line "L p seed", then L lines of '1'/'0' with row
// L-1 printed first. Round-trips exactly (p uses shortest round-trip form).
std::string grid_to_text(const OccupancyGrid& grid, const LatticeConfig& config);
struct GridFile {
  LatticeConfig config;
  OccupancyGrid grid;
};
GridFile grid_from_text(const std::string& text);  // throws std::invalid_argument
void write_grid_file(const std::string& path, const OccupancyGrid& grid,
                     const LatticeConfig& config);
GridFile read_grid_file(const std::string& path);

std::string format_double(double v);  // shortest round-trip decimal form

}  // namespace hexforge
