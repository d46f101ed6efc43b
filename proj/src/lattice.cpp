#include "hexforge/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hexforge/rng.hpp"

namespace hexforge {

void LatticeConfig::validate() const {
  if (L < 1) throw std::invalid_argument("LatticeConfig: L must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("LatticeConfig: p must be in [0,1]");
}

std::ostream& operator<<(std::ostream& os, const VertexId& v) {
  return os << "(" << v.row << "," << v.col << ")";
}

int OccupancyGrid::occupied_count() const {
  int n = 0;
  for (auto b : occ) n += b;
  return n;
}

double OccupancyGrid::occupied_fraction() const {
  if (occ.empty()) return 0.0;
  return static_cast<double>(occupied_count()) / static_cast<double>(occ.size());
}

OccupancyGrid sample_grid(const LatticeConfig& config) {
  config.validate();
  OccupancyGrid grid;
  grid.L = config.L;
  grid.occ.assign(static_cast<size_t>(config.L) * config.L, 0);
  if (config.p <= 0.0) return grid;
  // Threshold on the raw 64-bit hash keeps the p1 <= p2 coupling exact.
  const bool all = config.p >= 1.0;
  const std::uint64_t threshold =
      all ? ~0ull : static_cast<std::uint64_t>(config.p * 0x1.0p64);
  for (int r = 0; r < config.L; ++r) {
    for (int c = 0; c < config.L; ++c) {
      std::uint64_t h = rng::hash3(config.seed, static_cast<std::uint64_t>(r),
                                   static_cast<std::uint64_t>(c));
      if (all || h < threshold) grid.occ[static_cast<size_t>(r) * config.L + c] = 1;
    }
  }
  return grid;
}

SiteGraph grid_to_graph(const OccupancyGrid& grid) {
  SiteGraph g;
  g.L = grid.L;
  g.occ = grid.occ;
  g.n_occupied = grid.occupied_count();
  return g;
}

bool SiteGraph::has_edge(VertexId a, VertexId b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

int SiteGraph::degree(VertexId v) const {
  int d = 0;
  for_each_neighbor(v, [&](VertexId) { ++d; });
  return d;
}

std::vector<VertexId> SiteGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(n_occupied);
  for (int r = 0; r < L; ++r)
    for (int c = 0; c < L; ++c)
      if (occ[static_cast<size_t>(r) * L + c]) out.push_back({r, c});
  return out;
}

std::vector<VertexId> SiteGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for_each_neighbor(v, [&](VertexId w) { out.push_back(w); });
  return out;
}

std::size_t SiteGraph::edge_count() const {
  std::size_t m = 0;
  for (int r = 0; r < L; ++r)
    for (int c = 0; c < L; ++c)
      if (has_vertex(r, c)) {
        if (has_vertex(r, c + 1)) ++m;
        if (has_vertex(r + 1, c)) ++m;
      }
  return m;
}

std::vector<std::vector<VertexId>> connected_components(const SiteGraph& graph) {
  std::vector<std::vector<VertexId>> comps;
  std::vector<std::uint8_t> seen(graph.occ.size(), 0);
  for (int r = 0; r < graph.L; ++r) {
    for (int c = 0; c < graph.L; ++c) {
      size_t idx = static_cast<size_t>(r) * graph.L + c;
      if (!graph.occ[idx] || seen[idx]) continue;
      std::vector<VertexId> comp;
      std::deque<VertexId> queue{VertexId{r, c}};
      seen[idx] = 1;
      while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        comp.push_back(v);
        graph.for_each_neighbor(v, [&](VertexId w) {
          size_t widx = static_cast<size_t>(w.row) * graph.L + w.col;
          if (!seen[widx]) {
            seen[widx] = 1;
            queue.push_back(w);
          }
        });
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  }
  return comps;
}

std::vector<VertexId> k_neighborhood(const SiteGraph& graph,
                                     const std::vector<VertexId>& S, int k,
                                     NeighborhoodDomain domain) {
  if (k < 0) throw std::invalid_argument("k_neighborhood: k must be >= 0");
  const int L = graph.L;
  std::vector<int> dist(static_cast<size_t>(L) * L, -1);
  std::deque<VertexId> queue;
  for (VertexId v : S) {
    if (!graph.in_bounds(v.row, v.col)) throw std::invalid_argument("k_neighborhood: vertex out of bounds");
    size_t idx = static_cast<size_t>(v.row) * L + v.col;
    if (dist[idx] == -1) {
      dist[idx] = 0;
      queue.push_back(v);
    }
  }
  // BFS over the full lattice; occupancy only filters the output.
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    int d = dist[static_cast<size_t>(v.row) * L + v.col];
    if (d == k) continue;
    static constexpr int dr[4] = {0, 1, 0, -1};
    static constexpr int dc[4] = {1, 0, -1, 0};
    for (int i = 0; i < 4; ++i) {
      int r = v.row + dr[i], c = v.col + dc[i];
      if (r < 0 || r >= L || c < 0 || c >= L) continue;
      size_t idx = static_cast<size_t>(r) * L + c;
      if (dist[idx] == -1) {
        dist[idx] = d + 1;
        queue.push_back({r, c});
      }
    }
  }
  std::vector<VertexId> out;
  for (int r = 0; r < L; ++r)
    for (int c = 0; c < L; ++c) {
      size_t idx = static_cast<size_t>(r) * L + c;
      if (dist[idx] == -1) continue;
      if (domain == NeighborhoodDomain::OccupiedSites && !graph.has_vertex(r, c)) continue;
      out.push_back({r, c});
    }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string grid_to_text(const OccupancyGrid& grid, const LatticeConfig& config) {
  std::ostringstream os;
  os << config.L << ' ' << format_double(config.p) << ' ' << config.seed << '\n';
  for (int r = grid.L - 1; r >= 0; --r) {
    for (int c = 0; c < grid.L; ++c) os << (grid.occupied(r, c) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

GridFile grid_from_text(const std::string& text) {
  std::istringstream is(text);
  GridFile f;
  std::string ptok;
  if (!(is >> f.config.L >> ptok >> f.config.seed))
    throw std::invalid_argument("grid file: bad header");
  {
    const char* b = ptok.data();
    const char* e = b + ptok.size();
    auto res = std::from_chars(b, e, f.config.p);
    if (res.ec != std::errc{} || res.ptr != e)
      throw std::invalid_argument("grid file: bad probability");
  }
  f.config.validate();
  f.grid.L = f.config.L;
  f.grid.occ.assign(static_cast<size_t>(f.config.L) * f.config.L, 0);
  std::string line;
  std::getline(is, line);  // rest of header line
  for (int r = f.config.L - 1; r >= 0; --r) {
    if (!std::getline(is, line)) throw std::invalid_argument("grid file: truncated body");
    if (static_cast<int>(line.size()) < f.config.L)
      throw std::invalid_argument("grid file: short row");
    for (int c = 0; c < f.config.L; ++c) {
      char ch = line[c];
      if (ch != '0' && ch != '1') throw std::invalid_argument("grid file: bad cell");
      f.grid.set(r, c, ch == '1');
    }
  }
  return f;
}

void write_grid_file(const std::string& path, const OccupancyGrid& grid,
                     const LatticeConfig& config) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << grid_to_text(grid, config);
}

GridFile read_grid_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot open grid file: " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return grid_from_text(buf.str());
}

}  // namespace hexforge
