#include "hexforge/bridge.hpp"

#include <algorithm>
#include <sstream>

#include "hexforge/errors.hpp"

namespace hexforge {
namespace {

std::string vertex_str(VertexId v) {
  std::ostringstream os;
  os << "(" << v.row << "," << v.col << ")";
  return os.str();
}

// Membership bitmap for H^j ∪ N(H^j) over occupied sites.
std::vector<std::uint8_t> closed_neighborhood_mask(const CrossingPath& h,
                                                   const SiteGraph& graph) {
  std::vector<std::uint8_t> mask(static_cast<size_t>(graph.L) * graph.L, 0);
  for (VertexId v : h.vertices) {
    mask[static_cast<size_t>(v.row) * graph.L + v.col] = 1;
    graph.for_each_neighbor(v, [&](VertexId w) {
      mask[static_cast<size_t>(w.row) * graph.L + w.col] = 1;
    });
  }
  return mask;
}

std::map<VertexId, int> position_map(const CrossingPath& p) {
  std::map<VertexId, int> pos;
  for (size_t i = 0; i < p.vertices.size(); ++i) pos[p.vertices[i]] = static_cast<int>(i);
  return pos;
}

}  // namespace

bool IdentifiedSubgraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

BridgeDecomposition bridge_decomposition(const PathSet& hset, const PathSet& vset,
                                         const SiteGraph& graph, WorkCounters* stats) {
  const int J = static_cast<int>(hset.paths.size());
  const int K = static_cast<int>(vset.paths.size());
  if (J < 2) throw std::invalid_argument("bridge_decomposition: need at least two H-paths");
  BridgeDecomposition bd;
  bd.J = J;
  bd.K = K;

  std::vector<std::vector<std::uint8_t>> hmask;
  hmask.reserve(J);
  for (const auto& h : hset.paths) hmask.push_back(closed_neighborhood_mask(h, graph));
  auto in_mask = [&](int j, VertexId v) {
    return hmask[j][static_cast<size_t>(v.row) * graph.L + v.col] != 0;
  };

  for (int k = 1; k <= K; ++k) {
    const auto& vpath = vset.paths[k - 1].vertices;
    if (stats) stats->bridge_steps += vpath.size();
    for (int j = 1; j <= J - 1; ++j) {
      // s: last element of V^k in the closed neighborhood of H^j.
      int s_idx = -1;
      for (int i = 0; i < static_cast<int>(vpath.size()); ++i)
        if (in_mask(j - 1, vpath[i])) s_idx = i;
      require_internal(s_idx >= 0, "bridge_decomposition: V^" + std::to_string(k) +
                                       " never meets the neighborhood of H^" +
                                       std::to_string(j));
      // e: first element after s in the closed neighborhood of H^{j+1}.
      int e_idx = -1;
      for (int i = s_idx + 1; i < static_cast<int>(vpath.size()); ++i)
        if (in_mask(j, vpath[i])) {
          e_idx = i;
          break;
        }
      require_internal(e_idx > s_idx, "bridge_decomposition: V^" + std::to_string(k) +
                                          " does not cross stripe " + std::to_string(j));
      Bridge b;
      b.j = j;
      b.k = k;
      b.vertices.assign(vpath.begin() + s_idx, vpath.begin() + e_idx + 1);
      b.s = vpath[s_idx];
      b.e = vpath[e_idx];
      require_internal(b.s != b.e, "bridge_decomposition: degenerate bridge");
      bd.bridges[{j, k}] = std::move(b);
      bd.retained.insert({j, k});
    }
  }

  // Bridges of one V-path are disjoint ordered segments.
  for (int k = 1; k <= K; ++k) {
    for (int j = 1; j <= J - 2; ++j) {
      const Bridge& lo = bd.bridges.at({j, k});
      const Bridge& hi = bd.bridges.at({j + 1, k});
      require_internal(lo.e != hi.s && lo.vertices.back() == lo.e &&
                           hi.vertices.front() == hi.s,
                       "bridge_decomposition: overlapping bridges on one V-path");
    }
  }
  return bd;
}

BridgeDecomposition alternating_decomposition(const BridgeDecomposition& bd) {
  BridgeDecomposition out = bd;
  out.retained.clear();
  for (const auto& [key, bridge] : bd.bridges) {
    (void)bridge;
    if ((key.first + key.second) % 2 == 0) out.retained.insert(key);
  }
  return out;
}

std::vector<Abutment> compute_abutments(const BridgeDecomposition& bd,
                                        const PathSet& hset, const SiteGraph& graph) {
  std::vector<Abutment> out;
  const int J = static_cast<int>(hset.paths.size());
  std::vector<std::map<VertexId, int>> pos;
  pos.reserve(J);
  for (const auto& h : hset.paths) pos.push_back(position_map(h));

  auto h_neighbors_of = [&](int j, VertexId x) {
    std::vector<VertexId> w;
    graph.for_each_neighbor(x, [&](VertexId n) {
      if (pos[j - 1].count(n)) w.push_back(n);
    });
    std::sort(w.begin(), w.end());
    return w;
  };
  auto closure_of = [&](int j, const std::vector<VertexId>& contact) {
    std::vector<VertexId> closure;
    if (contact.empty()) return closure;
    int lo = pos[j - 1].at(contact.front()), hi = lo;
    for (VertexId v : contact) {
      lo = std::min(lo, pos[j - 1].at(v));
      hi = std::max(hi, pos[j - 1].at(v));
    }
    for (int i = lo; i <= hi; ++i) closure.push_back(hset.paths[j - 1].vertices[i]);
    return closure;
  };

  for (int j = 1; j <= J; ++j) {
    std::map<int, Abutment> by_k;
    for (const auto& key : bd.retained) {
      const Bridge& b = bd.bridges.at(key);
      if (b.j == j) {  // upper abutment of H^j from the stripe above
        auto& a = by_k[b.k];
        a.j = j;
        a.k = b.k;
        a.upper = h_neighbors_of(j, b.s);
        if (pos[j - 1].count(b.s)) a.upper.insert(a.upper.begin(), b.s);
      }
      if (b.j == j - 1) {  // lower abutment of H^j from the stripe below
        auto& a = by_k[b.k];
        a.j = j;
        a.k = b.k;
        a.lower = h_neighbors_of(j, b.e);
        if (pos[j - 1].count(b.e)) a.lower.insert(a.lower.begin(), b.e);
      }
    }
    for (auto& [k, a] : by_k) {
      (void)k;
      std::sort(a.upper.begin(), a.upper.end());
      std::sort(a.lower.begin(), a.lower.end());
      a.closure_upper = closure_of(j, a.upper);
      a.closure_lower = closure_of(j, a.lower);
      std::vector<VertexId> total = a.upper;
      total.insert(total.end(), a.lower.begin(), a.lower.end());
      a.closure_total = closure_of(j, total);
      out.push_back(std::move(a));
    }
  }
  return out;
}

TotalOrderResult verify_total_order(const std::vector<Abutment>& abutments,
                                    const PathSet& hset) {
  TotalOrderResult res;
  const int J = static_cast<int>(hset.paths.size());
  std::vector<std::map<VertexId, int>> pos;
  pos.reserve(J);
  for (const auto& h : hset.paths) pos.push_back(position_map(h));

  struct Interval {
    int k, lo, hi;
  };
  std::map<int, std::vector<Interval>> per_row;
  for (const auto& a : abutments) {
    if (a.closure_total.empty()) continue;
    int lo = pos[a.j - 1].at(a.closure_total.front());
    int hi = pos[a.j - 1].at(a.closure_total.back());
    per_row[a.j].push_back({a.k, lo, hi});
  }
  for (auto& [j, intervals] : per_row) {
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& x, const Interval& y) { return x.k < y.k; });
    for (size_t i = 1; i < intervals.size(); ++i) {
      const Interval& a = intervals[i - 1];
      const Interval& b = intervals[i];
      if (a.hi >= b.lo) {
        res.ok = false;
        res.witnesses.push_back({j, a.k, b.k,
                                 "closures overlap on H^" + std::to_string(j) + ": [" +
                                     std::to_string(a.lo) + "," + std::to_string(a.hi) +
                                     "] vs [" + std::to_string(b.lo) + "," +
                                     std::to_string(b.hi) + "]"});
      }
    }
  }
  return res;
}

namespace {

struct JunctionTask {
  int k = 0;
  VertexId terminal;      // bridge endpoint s or e
  bool terminal_on_path = false;
  std::vector<int> contact;  // positions on the original H^j
  int lo = 0, hi = 0;
};

}  // namespace

CorrectionResult correct_local_errors(const PathSet& hset, const BridgeDecomposition& bd,
                                      const std::vector<Abutment>& abutments,
                                      const SiteGraph& graph, WorkCounters* stats) {
  TotalOrderResult order = verify_total_order(abutments, hset);
  require_internal(order.ok, "correct_local_errors: abutment closures are not totally ordered");

  const int J = bd.J;
  CorrectionResult out;
  out.revised_h.orientation = Orientation::H;
  out.revised_h.provenance = "corrected";
  out.revised_h.found_before_retention = hset.found_before_retention;

  std::vector<std::map<VertexId, int>> pos;
  for (const auto& h : hset.paths) pos.push_back(position_map(h));

  for (int j = 1; j <= J; ++j) {
    const auto& orig = hset.paths[j - 1].vertices;
    std::vector<JunctionTask> tasks;
    for (const auto& key : bd.retained) {
      const Bridge& b = bd.bridges.at(key);
      VertexId terminal{-1, -1};
      if (b.j == j) terminal = b.s;
      else if (b.j == j - 1) terminal = b.e;
      else continue;
      JunctionTask t;
      t.k = b.k;
      t.terminal = terminal;
      t.terminal_on_path = pos[j - 1].count(terminal) > 0;
      if (t.terminal_on_path) t.contact.push_back(pos[j - 1].at(terminal));
      graph.for_each_neighbor(terminal, [&](VertexId w) {
        if (pos[j - 1].count(w)) t.contact.push_back(pos[j - 1].at(w));
      });
      std::sort(t.contact.begin(), t.contact.end());
      require_internal(!t.contact.empty(), "correct_local_errors: terminal has no contact");
      t.lo = t.contact.front();
      t.hi = t.contact.back();
      tasks.push_back(std::move(t));
    }
    std::sort(tasks.begin(), tasks.end(),
              [](const JunctionTask& a, const JunctionTask& b) { return a.k < b.k; });
    for (size_t i = 1; i < tasks.size(); ++i)
      require_internal(tasks[i - 1].hi < tasks[i].lo,
                       "correct_local_errors: junction regions interleave");

    CrossingPath revised;
    revised.orientation = Orientation::H;
    revised.index = j;
    int cursor = 0;
    for (const auto& t : tasks) {
      if (stats) stats->correction_steps += t.hi - t.lo + 1;
      VertexId junction;
      if (t.terminal_on_path) {
        // V-path runs through the H-path; the shared vertex is already the
        // single degree-3 vertex of this region.
        junction = t.terminal;
        for (; cursor <= t.hi; ++cursor) revised.vertices.push_back(orig[cursor]);
      } else if (t.contact.size() == 1) {
        // Terminal of degree 2: region untouched, the abutment vertex is the
        // junction.
        junction = orig[t.lo];
        for (; cursor <= t.hi; ++cursor) revised.vertices.push_back(orig[cursor]);
      } else {
        // Terminal of degree 3 or 4: delete the closure interior and splice
        // the terminal between the closure endpoints.
        require_internal(t.contact.size() <= 3,
                         "correct_local_errors: terminal with more than 3 path contacts");
        for (; cursor <= t.lo; ++cursor) revised.vertices.push_back(orig[cursor]);
        revised.vertices.push_back(t.terminal);
        junction = t.terminal;
        cursor = t.hi;  // resume from the closure's right endpoint
      }
      out.junctions.push_back({j, t.k, junction, false});
    }
    for (; cursor < static_cast<int>(orig.size()); ++cursor)
      revised.vertices.push_back(orig[cursor]);
    out.revised_h.paths.push_back(std::move(revised));
  }

  // Residual contacts between distinct revised H-paths. Length-2 retained
  // bridges legitimately join two spliced terminals; anything else is left
  // for the minor check to judge.
  std::map<VertexId, int> row_of;
  for (int j = 1; j <= J; ++j)
    for (VertexId v : out.revised_h.paths[j - 1].vertices) row_of[v] = j;
  std::set<std::pair<VertexId, VertexId>> bridge_edges;
  for (const auto& key : bd.retained) {
    const Bridge& b = bd.bridges.at(key);
    for (size_t i = 1; i < b.vertices.size(); ++i) {
      VertexId a = b.vertices[i - 1], c = b.vertices[i];
      bridge_edges.insert({std::min(a, c), std::max(a, c)});
    }
  }
  for (const auto& [v, j] : row_of) {
    graph.for_each_neighbor(v, [&](VertexId w) {
      auto it = row_of.find(w);
      if (it == row_of.end() || it->second == j || w < v) return;
      std::ostringstream os;
      os << "contact between revised H^" << j << " and H^" << it->second << " at "
         << vertex_str(v) << "-" << vertex_str(w)
         << (bridge_edges.count({std::min(v, w), std::max(v, w)}) ? " (bridge edge)"
                                                                  : "");
      out.warnings.push_back(os.str());
    });
  }
  return out;
}

IdentifiedSubgraph extract_hex_minor(const CorrectionResult& correction,
                                     const BridgeDecomposition& bd,
                                     const SiteGraph& graph) {
  const int J = bd.J;
  const int K = bd.K;
  IdentifiedSubgraph sub;
  sub.J = J;
  sub.K = K;
  sub.warnings = correction.warnings;

  std::map<std::pair<int, int>, VertexId> junction_at;
  for (const auto& info : correction.junctions) junction_at[{info.j, info.k}] = info.vertex;

  // Boundary rows: columns without an incident retained bridge keep one
  // explicit spacer vertex between the neighbouring attachment regions.
  std::vector<std::vector<VertexId>> trimmed(J);
  for (int j = 1; j <= J; ++j) {
    const auto& path = correction.revised_h.paths[j - 1].vertices;
    std::map<VertexId, int> rpos;
    for (size_t i = 0; i < path.size(); ++i) rpos[path[i]] = static_cast<int>(i);

    std::map<int, int> junction_pos;  // hex column -> revised position
    for (int k = 1; k <= K; ++k) {
      auto it = junction_at.find({j, k});
      if (it != junction_at.end()) junction_pos[k] = rpos.at(it->second);
    }
    bool boundary = (j == 1) || (j == J);
    require_internal(boundary || static_cast<int>(junction_pos.size()) == K,
                     "extract_hex_minor: interior row missing a junction");
    for (int k = 1; k <= K; ++k) {
      if (junction_pos.count(k)) continue;
      require_internal(boundary, "extract_hex_minor: interior spacer requested");
      auto right = junction_pos.upper_bound(k);
      int p;
      if (right == junction_pos.begin()) {
        // Leading spacer: leftmost vertex strictly before the first junction.
        require_internal(right != junction_pos.end(), "extract_hex_minor: empty row");
        p = 0;
        require_internal(p < right->second, "extract_hex_minor: no room for spacer");
      } else {
        auto left = std::prev(right);
        p = left->second + 1;
        require_internal(p < static_cast<int>(path.size()),
                         "extract_hex_minor: no vertex available after last junction");
        if (right != junction_pos.end())
          require_internal(p < right->second, "extract_hex_minor: no room for spacer");
      }
      junction_pos[k] = p;
      junction_at[{j, k}] = path[p];
    }
    int lo = junction_pos.begin()->second;
    int hi = junction_pos.rbegin()->second;
    for (auto& [k, p] : junction_pos) {
      (void)k;
      require_internal(p >= lo && p <= hi, "extract_hex_minor: junction outside trim");
    }
    // Junction order along the path must match the column order.
    int prev = -1;
    for (auto& [k, p] : junction_pos) {
      (void)k;
      require_internal(p > prev, "extract_hex_minor: junction order violates column order");
      prev = p;
    }
    trimmed[j - 1].assign(path.begin() + lo, path.begin() + hi + 1);
  }

  std::set<VertexId> kept;
  for (const auto& row : trimmed) kept.insert(row.begin(), row.end());
  for (const auto& key : bd.retained) {
    const Bridge& b = bd.bridges.at(key);
    kept.insert(b.vertices.begin(), b.vertices.end());
  }
  sub.vertices.assign(kept.begin(), kept.end());
  sub.hex_map = junction_at;

  for (VertexId v : sub.vertices) {
    graph.for_each_neighbor(v, [&](VertexId w) {
      if (v < w && kept.count(w)) sub.edges.push_back({v, w});
    });
  }
  std::sort(sub.edges.begin(), sub.edges.end());

  // Degree bound: a hexagonal minor never needs more than three neighbours.
  std::map<VertexId, int> deg;
  for (const auto& [a, b] : sub.edges) {
    deg[a] += 1;
    deg[b] += 1;
  }
  for (const auto& [v, d] : deg)
    require_internal(d <= 3, "extract_hex_minor: vertex " + vertex_str(v) +
                                 " has degree " + std::to_string(d));
  return sub;
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> hex_lattice_edges(int J,
                                                                                   int K) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
  for (int j = 1; j <= J; ++j)
    for (int k = 1; k <= K; ++k) {
      if (k < K) edges.push_back({{j, k}, {j, k + 1}});
      if (j < J && (j + k) % 2 == 0) edges.push_back({{j, k}, {j + 1, k}});
    }
  return edges;
}

bool verify_topological_minor(const IdentifiedSubgraph& sub, int J, int K) {
  if (static_cast<int>(sub.hex_map.size()) != J * K) return false;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (VertexId v : sub.vertices) adj[v];
  for (const auto& [a, b] : sub.edges) {
    if (!adj.count(a) || !adj.count(b)) return false;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<VertexId, std::pair<int, int>> hex_of;
  for (const auto& [jk, v] : sub.hex_map) {
    if (!adj.count(v)) return false;
    if (hex_of.count(v)) return false;  // two hex nodes mapped to one vertex
    hex_of[v] = jk;
  }
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() > 3) return false;
    if (!hex_of.count(v) && nbrs.size() != 2) return false;  // whisker or floater
  }

  // Walk chains between hex vertices; each chain is seen once per endpoint.
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, int> found;
  std::set<VertexId> covered;
  for (const auto& [v, jk] : hex_of) {
    for (VertexId first : adj.at(v)) {
      VertexId prev = v, cur = first;
      while (!hex_of.count(cur)) {
        covered.insert(cur);
        const auto& nbrs = adj.at(cur);
        VertexId next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
      }
      if (cur == v && !hex_of.count(prev) ) return false;  // chain loops back
      if (cur == v && prev == first && adj.at(v).size() == 1) return false;
      auto a = jk, b = hex_of.at(cur);
      if (a == b) return false;  // self-loop after contraction
      found[{std::min(a, b), std::max(a, b)}] += 1;
    }
  }
  for (const auto& [v, nbrs] : adj) {
    (void)nbrs;
    if (!hex_of.count(v) && !covered.count(v)) return false;
  }

  auto expected = hex_lattice_edges(J, K);
  if (found.size() != expected.size()) return false;
  for (auto& [a, b] : expected) {
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = found.find(key);
    if (it == found.end() || it->second != 2) return false;  // missing or parallel
  }
  return true;
}

ErrorReport report_subgraph_errors(const IdentifiedSubgraph& sub) {
  ErrorReport report;
  std::map<VertexId, int> deg;
  for (VertexId v : sub.vertices) deg[v] = 0;
  for (const auto& [a, b] : sub.edges) {
    deg[a] += 1;
    deg[b] += 1;
  }
  for (const auto& [v, d] : deg) {
    if (d == 1) {
      ++report.degree1;
      report.witnesses.push_back({v, v, "degree 1"});
    } else if (d == 2) {
      ++report.degree2;
    } else if (d >= 4) {
      ++report.degree4;
      report.witnesses.push_back({v, v, "degree " + std::to_string(d)});
    }
  }
  if (!verify_topological_minor(sub, sub.J, sub.K)) report.lattice = 1;
  return report;
}

}  // namespace hexforge
