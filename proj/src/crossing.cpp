#include "hexforge/crossing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "hexforge/errors.hpp"

namespace hexforge {
namespace {

// The walker runs in "view" coordinates where every walk is an H-walk that
// enters on col 0, exits on col L-1 and hugs the bottom wall. Orientation::V
// transposes: view (r,c) = lattice (c,r), which turns the walk into a
// left-hugging bottom-to-top search as required for V-crossings.
struct GridView {
  const SiteGraph* g;
  bool transposed;
  int L;

  bool occupied(int r, int c) const {
    if (r < 0 || r >= L || c < 0 || c >= L) return false;
    return transposed ? g->has_vertex(c, r) : g->has_vertex(r, c);
  }
  VertexId to_lattice(int r, int c) const {
    return transposed ? VertexId{c, r} : VertexId{r, c};
  }
};

// Headings: 0=E(+col), 1=N(+row), 2=W(-col), 3=S(-row). With row 0 at the
// bottom, "right of heading" is (h+3)&3.
constexpr int kDR[4] = {0, 1, 0, -1};
constexpr int kDC[4] = {1, 0, -1, 0};

struct WalkContext {
  GridView view;
  std::vector<std::uint8_t> blocked;      // permanent: forbidden, used, dead
  std::vector<std::uint32_t> state_gen;   // 4 entries per cell
  std::vector<std::uint32_t> stack_gen;   // loop-erasure bookkeeping
  std::vector<std::uint32_t> stack_pos;
  std::uint32_t generation = 0;
  WorkCounters* stats = nullptr;

  explicit WalkContext(GridView v)
      : view(v),
        blocked(static_cast<size_t>(v.L) * v.L, 0),
        state_gen(static_cast<size_t>(v.L) * v.L * 4, 0),
        stack_gen(static_cast<size_t>(v.L) * v.L, 0),
        stack_pos(static_cast<size_t>(v.L) * v.L, 0) {}

  int cell_index(int r, int c) const { return r * view.L + c; }
  bool passable(int r, int c) const {
    return view.occupied(r, c) && !blocked[static_cast<size_t>(r) * view.L + c];
  }
};

struct WalkResult {
  bool success = false;
  std::vector<int> path;     // loop-erased, view cell indices
  std::vector<int> visited;  // every distinct cell the walk touched
};

// One wall-follower walk from `start` (view coordinates, col 0). Arrival at
// any col L-1 cell ends the walk; revisiting a (cell, heading) state means
// the face traversal has closed its cycle without reaching the far side.
WalkResult run_walk(WalkContext& ctx, int start_r) {
  const int L = ctx.view.L;
  WalkResult res;
  ctx.generation += 1;
  const std::uint32_t gen = ctx.generation;

  int r = start_r, c = 0, heading = 0;  // enter heading east
  std::vector<int>& stack = res.path;
  auto arrive = [&](int rr, int cc) {
    if (ctx.stats) ctx.stats->rhwf_visits += 1;
    int idx = ctx.cell_index(rr, cc);
    bool first_touch = true;
    for (int h = 0; h < 4; ++h)
      if (ctx.state_gen[static_cast<size_t>(idx) * 4 + h] == gen) first_touch = false;
    if (first_touch) res.visited.push_back(idx);
  };
  auto push_loop_erased = [&](int idx) {
    if (ctx.stack_gen[idx] == gen) {
      // Already on the stack: erase the loop back to the prior visit.
      std::uint32_t pos = ctx.stack_pos[idx];
      while (stack.size() > pos + 1) {
        ctx.stack_gen[stack.back()] = 0;
        stack.pop_back();
      }
    } else {
      ctx.stack_gen[idx] = gen;
      ctx.stack_pos[idx] = static_cast<std::uint32_t>(stack.size());
      stack.push_back(idx);
    }
  };

  arrive(r, c);
  ctx.state_gen[static_cast<size_t>(ctx.cell_index(r, c)) * 4 + heading] = gen;
  push_loop_erased(ctx.cell_index(r, c));
  if (c == L - 1) {
    res.success = true;
    return res;
  }

  for (;;) {
    int next_h = -1;
    // toward-wall, straight, away-from-wall, back
    for (int turn : {3, 0, 1, 2}) {
      int h = (heading + turn) & 3;
      int rr = r + kDR[h], cc = c + kDC[h];
      if (ctx.passable(rr, cc)) {
        next_h = h;
        break;
      }
    }
    if (next_h < 0) return res;  // isolated start, no move possible
    r += kDR[next_h];
    c += kDC[next_h];
    heading = next_h;
    arrive(r, c);
    std::size_t state = static_cast<size_t>(ctx.cell_index(r, c)) * 4 + heading;
    if (ctx.state_gen[state] == gen) return res;  // face cycle closed
    ctx.state_gen[state] = gen;
    push_loop_erased(ctx.cell_index(r, c));
    if (c == L - 1) {
      res.success = true;
      return res;
    }
  }
}

// Scans entry-boundary starts bottom-up, peeling one crossing per successful
// walk. Every visited cell is blocked afterwards: on failure the whole face
// belongs to a component that cannot cross, and on success the leftovers lie
// weakly below the extracted lowest crossing, which no later disjoint
// crossing can use. This also caps total arrivals at 4 per occupied site.
std::vector<std::vector<int>> peel_crossings(WalkContext& ctx, bool stop_after_first) {
  const int L = ctx.view.L;
  std::vector<std::vector<int>> found;
  int scan_from = 0;
  for (;;) {
    int start = -1;
    for (int r = scan_from; r < L; ++r) {
      if (ctx.passable(r, 0)) {
        start = r;
        break;
      }
      scan_from = r + 1;
    }
    if (start < 0) break;
    WalkResult walk = run_walk(ctx, start);
    for (int idx : walk.visited) ctx.blocked[idx] = 1;
    if (walk.success) {
      found.push_back(std::move(walk.path));
      if (stop_after_first) break;
    }
  }
  return found;
}

CrossingPath to_crossing_path(const GridView& view, const std::vector<int>& cells,
                              Orientation orientation) {
  CrossingPath path;
  path.orientation = orientation;
  path.vertices.reserve(cells.size());
  for (int idx : cells) path.vertices.push_back(view.to_lattice(idx / view.L, idx % view.L));
  return path;
}

// Entry-boundary coordinate of a path's first vertex, used to order disjoint
// crossings spatially (disjoint crossings are totally ordered and their
// start coordinates respect that order).
int start_coordinate(const CrossingPath& p) {
  return p.orientation == Orientation::H ? p.vertices.front().row : p.vertices.front().col;
}

PathSet find_paths_impl(const SiteGraph& graph, Orientation orientation,
                        WorkCounters* stats) {
  GridView view{&graph, orientation == Orientation::V, graph.L};
  WalkContext ctx(view);
  ctx.stats = stats;
  const std::uint64_t visits_at_entry = stats ? stats->rhwf_visits : 0;

  std::vector<CrossingPath> found;
  if (orientation == Orientation::V) {
    // Plain RHWF peeling enumerates every maximal disjoint crossing.
    for (auto& cells : peel_crossings(ctx, false))
      found.push_back(to_crossing_path(view, cells, orientation));
  } else {
    // 2-local variant: after each path, its Manhattan-2 neighborhood is
    // forbidden for all later searches.
    for (;;) {
      auto batch = peel_crossings(ctx, true);
      if (batch.empty()) break;
      CrossingPath path = to_crossing_path(view, batch.front(), orientation);
      auto zone = k_neighborhood(graph, path.vertices, 2, NeighborhoodDomain::OccupiedSites);
      for (VertexId v : zone) ctx.blocked[static_cast<size_t>(v.row) * graph.L + v.col] = 1;
      found.push_back(std::move(path));
    }
  }

  std::sort(found.begin(), found.end(), [](const CrossingPath& a, const CrossingPath& b) {
    return start_coordinate(a) < start_coordinate(b);
  });

  PathSet set;
  set.orientation = orientation;
  set.found_before_retention = static_cast<int>(found.size());
  if (orientation == Orientation::V) {
    set.provenance = "rhwf/every-third";
    for (size_t i = 0; i < found.size(); i += 3) set.paths.push_back(std::move(found[i]));
  } else {
    set.provenance = "rhwf/2-local";
    set.paths = std::move(found);
  }
  for (size_t i = 0; i < set.paths.size(); ++i) set.paths[i].index = static_cast<int>(i) + 1;

  if (stats) {
    std::uint64_t budget = 4ull * static_cast<std::uint64_t>(graph.n_occupied);
    require_internal(stats->rhwf_visits - visits_at_entry <= budget,
                     "wall follower exceeded the 4-visits-per-site budget");
  }
  return set;
}

}  // namespace

std::optional<CrossingPath> rhwf_crossing(const SiteGraph& graph,
                                          Orientation orientation,
                                          const std::vector<VertexId>& forbidden,
                                          WorkCounters* stats) {
  for (VertexId v : forbidden)
    if (!graph.in_bounds(v.row, v.col))
      throw std::invalid_argument("rhwf_crossing: forbidden vertex out of bounds");
  GridView view{&graph, orientation == Orientation::V, graph.L};
  WalkContext ctx(view);
  ctx.stats = stats;
  for (VertexId v : forbidden) {
    VertexId w = orientation == Orientation::V ? VertexId{v.col, v.row} : v;
    ctx.blocked[static_cast<size_t>(w.row) * graph.L + w.col] = 1;
  }
  auto batch = peel_crossings(ctx, true);
  if (batch.empty()) return std::nullopt;
  CrossingPath path = to_crossing_path(view, batch.front(), orientation);
  path.index = 1;
  return path;
}

PathSet find_h_paths(const SiteGraph& graph, WorkCounters* stats) {
  return find_paths_impl(graph, Orientation::H, stats);
}

PathSet find_v_paths(const SiteGraph& graph, WorkCounters* stats) {
  return find_paths_impl(graph, Orientation::V, stats);
}

CrossingPath shortest_path_cleanup(const CrossingPath& path, const SiteGraph& graph,
                                   WorkCounters* stats) {
  const int L = graph.L;
  const bool horizontal = path.orientation == Orientation::H;
  std::vector<std::uint8_t> member(static_cast<size_t>(L) * L, 0);
  for (VertexId v : path.vertices) {
    require_internal(graph.has_vertex(v), "cleanup: path vertex not in graph");
    member[static_cast<size_t>(v.row) * L + v.col] = 1;
  }
  auto is_exit = [&](VertexId v) { return (horizontal ? v.col : v.row) == L - 1; };
  auto is_entry = [&](VertexId v) { return (horizontal ? v.col : v.row) == 0; };

  // BFS distances to the exit boundary within the induced subgraph.
  std::vector<int> dist_exit(static_cast<size_t>(L) * L, -1);
  std::deque<VertexId> queue;
  for (VertexId v : path.vertices)
    if (is_exit(v)) {
      dist_exit[static_cast<size_t>(v.row) * L + v.col] = 0;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (stats) stats->cleanup_steps += 1;
    int d = dist_exit[static_cast<size_t>(v.row) * L + v.col];
    graph.for_each_neighbor(v, [&](VertexId w) {
      size_t idx = static_cast<size_t>(w.row) * L + w.col;
      if (member[idx] && dist_exit[idx] == -1) {
        dist_exit[idx] = d + 1;
        queue.push_back(w);
      }
    });
  }

  // Lexicographically smallest entry vertex at the optimal distance, then a
  // greedy lex-min descent toward the exit.
  VertexId best{-1, -1};
  int best_d = std::numeric_limits<int>::max();
  for (VertexId v : path.vertices) {
    if (!is_entry(v)) continue;
    int d = dist_exit[static_cast<size_t>(v.row) * L + v.col];
    if (d < 0) continue;
    if (d < best_d || (d == best_d && v < best)) {
      best_d = d;
      best = v;
    }
  }
  require_internal(best_d != std::numeric_limits<int>::max(),
                   "cleanup: path vertices contain no crossing");

  CrossingPath out;
  out.orientation = path.orientation;
  out.index = path.index;
  VertexId cur = best;
  out.vertices.push_back(cur);
  int d = best_d;
  while (d > 0) {
    VertexId next{-1, -1};
    graph.for_each_neighbor(cur, [&](VertexId w) {
      size_t idx = static_cast<size_t>(w.row) * L + w.col;
      if (member[idx] && dist_exit[idx] == d - 1 && (next.row < 0 || w < next)) next = w;
    });
    require_internal(next.row >= 0, "cleanup: broken BFS gradient");
    out.vertices.push_back(next);
    cur = next;
    --d;
  }
  return out;
}

PathSet cleanup_pathset(const PathSet& set, const SiteGraph& graph, WorkCounters* stats) {
  PathSet out = set;
  for (auto& p : out.paths) p = shortest_path_cleanup(p, graph, stats);
  return out;
}

ErrorReport validate_paths(const PathSet& hset, const PathSet& vset,
                           const SiteGraph& graph) {
  ErrorReport report;
  const int L = graph.L;
  struct Membership {
    int path = -1;   // index into the set's path list
    int pos = -1;    // position along the path
  };
  auto build_index = [&](const PathSet& set) {
    std::vector<Membership> idx(static_cast<size_t>(L) * L);
    for (size_t pi = 0; pi < set.paths.size(); ++pi)
      for (size_t k = 0; k < set.paths[pi].vertices.size(); ++k) {
        VertexId v = set.paths[pi].vertices[k];
        idx[static_cast<size_t>(v.row) * L + v.col] = {static_cast<int>(pi),
                                                       static_cast<int>(k)};
      }
    return idx;
  };
  std::vector<Membership> hidx = build_index(hset);
  std::vector<Membership> vidx = build_index(vset);

  auto scan_same_orientation = [&](const PathSet& set, const std::vector<Membership>& idx,
                                   int& self_count, int& pair_count, const char* tag) {
    for (size_t pi = 0; pi < set.paths.size(); ++pi) {
      const auto& verts = set.paths[pi].vertices;
      for (size_t k = 0; k < verts.size(); ++k) {
        graph.for_each_neighbor(verts[k], [&](VertexId w) {
          if (w < verts[k]) return;  // count each edge once
          const Membership& m = idx[static_cast<size_t>(w.row) * L + w.col];
          if (m.path < 0) return;
          if (m.path == static_cast<int>(pi)) {
            if (std::abs(m.pos - static_cast<int>(k)) != 1) {
              ++self_count;
              report.witnesses.push_back({verts[k], w, std::string("self-") + tag});
            }
          } else {
            ++pair_count;
            report.witnesses.push_back({verts[k], w, std::string(tag) + "-" + tag});
          }
        });
      }
    }
  };
  scan_same_orientation(hset, hidx, report.self_h, report.hh, "H");
  scan_same_orientation(vset, vidx, report.self_v, report.vv, "V");

  // H-V contacts: for each (H,V) pair, collect the H-path positions that
  // share a vertex with or are lattice-adjacent to the V-path, cluster them
  // into regions (gap <= 2 along the H-path) and flag every extra region.
  std::map<std::pair<int, int>, std::vector<int>> contacts;
  for (size_t hi = 0; hi < hset.paths.size(); ++hi) {
    const auto& verts = hset.paths[hi].vertices;
    for (size_t k = 0; k < verts.size(); ++k) {
      const Membership& shared = vidx[static_cast<size_t>(verts[k].row) * L + verts[k].col];
      if (shared.path >= 0)
        contacts[{static_cast<int>(hi), shared.path}].push_back(static_cast<int>(k));
      graph.for_each_neighbor(verts[k], [&](VertexId w) {
        const Membership& m = vidx[static_cast<size_t>(w.row) * L + w.col];
        if (m.path >= 0) contacts[{static_cast<int>(hi), m.path}].push_back(static_cast<int>(k));
      });
    }
  }
  for (auto& [key, positions] : contacts) {
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    int regions = 1;
    for (size_t i = 1; i < positions.size(); ++i) {
      if (positions[i] - positions[i - 1] > 2) {
        ++regions;
        VertexId a = hset.paths[key.first].vertices[positions[i - 1]];
        VertexId b = hset.paths[key.first].vertices[positions[i]];
        report.witnesses.push_back({a, b, "H-V split contact"});
      }
    }
    report.hv += regions - 1;
  }
  return report;
}

}  // namespace hexforge
