#include "hexforge/flow.hpp"

#include <algorithm>
#include <vector>

namespace hexforge {
namespace {

// Dinic on a unit-capacity network; small fixed arc representation.
struct Dinic {
  struct Arc {
    int to;
    int cap;
    int rev;
  };
  std::vector<std::vector<Arc>> adj;
  std::vector<int> level, iter;

  explicit Dinic(int n) : adj(n), level(n), iter(n) {}

  void add_edge(int u, int v) {
    adj[u].push_back({v, 1, static_cast<int>(adj[v].size())});
    adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue{s};
    level[s] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (const Arc& a : adj[u]) {
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level[t] >= 0;
  }

  int dfs(int u, int t) {
    if (u == t) return 1;
    for (int& i = iter[u]; i < static_cast<int>(adj[u].size()); ++i) {
      Arc& a = adj[u][i];
      if (a.cap > 0 && level[a.to] == level[u] + 1) {
        if (dfs(a.to, t)) {
          a.cap -= 1;
          adj[a.to][a.rev].cap += 1;
          return 1;
        }
      }
    }
    return 0;
  }

  int max_flow(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (dfs(s, t)) ++flow;
    }
    return flow;
  }
};

}  // namespace

int max_disjoint_crossings(const SiteGraph& graph, Orientation orientation) {
  const int L = graph.L;
  auto occupied = [&](int r, int c) {
    return orientation == Orientation::H ? graph.has_vertex(r, c) : graph.has_vertex(c, r);
  };
  // Vertex split: cell (r,c) -> nodes 2*(r*L+c) (in) and +1 (out).
  const int n_cells = L * L;
  const int source = 2 * n_cells, sink = 2 * n_cells + 1;
  Dinic dinic(2 * n_cells + 2);
  static constexpr int dr[4] = {0, 1, 0, -1};
  static constexpr int dc[4] = {1, 0, -1, 0};
  for (int r = 0; r < L; ++r) {
    for (int c = 0; c < L; ++c) {
      if (!occupied(r, c)) continue;
      int id = r * L + c;
      dinic.add_edge(2 * id, 2 * id + 1);
      for (int d = 0; d < 4; ++d) {
        int rr = r + dr[d], cc = c + dc[d];
        if (rr < 0 || rr >= L || cc < 0 || cc >= L || !occupied(rr, cc)) continue;
        dinic.add_edge(2 * id + 1, 2 * (rr * L + cc));
      }
      if (c == 0) dinic.add_edge(source, 2 * id);
      if (c == L - 1) dinic.add_edge(2 * id + 1, sink);
    }
  }
  return dinic.max_flow(source, sink);
}

int max_disjoint_crossings(const OccupancyGrid& grid) {
  return max_disjoint_crossings(grid_to_graph(grid), Orientation::H);
}

}  // namespace hexforge
