#include "hexforge/graph_state.hpp"

#include <algorithm>
#include <stdexcept>

#include "hexforge/errors.hpp"
#include "hexforge/rng.hpp"

namespace hexforge {

void AdjGraph::add_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("AdjGraph: self loop");
  add_vertex(a);
  add_vertex(b);
  adj[a].insert(b);
  adj[b].insert(a);
}

void AdjGraph::toggle_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("AdjGraph: self loop");
  if (has_edge(a, b)) {
    adj[a].erase(b);
    adj[b].erase(a);
  } else {
    add_edge(a, b);
  }
}

bool AdjGraph::has_edge(int a, int b) const {
  auto it = adj.find(a);
  return it != adj.end() && it->second.count(b) > 0;
}

void AdjGraph::remove_vertex(int v) {
  auto it = adj.find(v);
  if (it == adj.end()) return;
  for (int w : it->second) adj[w].erase(v);
  adj.erase(it);
}

std::size_t AdjGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [v, nbrs] : adj) {
    (void)v;
    twice += nbrs.size();
  }
  return twice / 2;
}

std::vector<int> AdjGraph::vertices() const {
  std::vector<int> out;
  out.reserve(adj.size());
  for (const auto& [v, nbrs] : adj) {
    (void)nbrs;
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, int>> AdjGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [v, nbrs] : adj)
    for (int w : nbrs)
      if (v < w) out.push_back({v, w});
  return out;
}

MeasurementEvent GraphState::measure_z(int v, int outcome) {
  if (!live(v)) throw std::invalid_argument("measure_z: qubit not live");
  if (outcome != 1 && outcome != -1) throw std::invalid_argument("measure_z: bad outcome");
  MeasurementEvent ev;
  ev.qubit = v;
  ev.graph_basis = PauliAxis::Z;
  ev.outcome = outcome;
  ev.physical = frame.at(v).image(PauliAxis::Z);
  if (outcome == -1) {
    for (int w : graph.adj.at(v))
      frame[w] = frame.at(w).compose(LocalClifford::pauli_z());
  }
  graph.remove_vertex(v);
  frame.erase(v);
  return ev;
}

MeasurementEvent GraphState::measure_y_deg2(int v, int outcome) {
  if (!live(v)) throw std::invalid_argument("measure_y_deg2: qubit not live");
  if (outcome != 1 && outcome != -1) throw std::invalid_argument("measure_y_deg2: bad outcome");
  if (graph.degree(v) != 2)
    throw std::invalid_argument("measure_y_deg2: vertex degree is not 2");
  MeasurementEvent ev;
  ev.qubit = v;
  ev.graph_basis = PauliAxis::Y;
  ev.outcome = outcome;
  ev.physical = frame.at(v).image(PauliAxis::Y);
  auto it = graph.adj.at(v).begin();
  int a = *it++;
  int b = *it;
  LocalClifford byproduct =
      outcome == +1 ? LocalClifford::phase_s() : LocalClifford::phase_s_dag();
  frame[a] = frame.at(a).compose(byproduct);
  frame[b] = frame.at(b).compose(byproduct);
  graph.remove_vertex(v);
  frame.erase(v);
  graph.toggle_edge(a, b);
  return ev;
}

GraphState graph_state_from(const AdjGraph& graph) {
  GraphState st;
  st.graph = graph;
  for (int v : graph.vertices()) st.frame[v] = LocalClifford::identity();
  return st;
}

int hex_vertex_id(int K, int j, int k) { return (j - 1) * K + (k - 1); }

AdjGraph hex_lattice_graph(int J, int K) {
  if (J < 1 || K < 1) throw std::invalid_argument("hex_lattice_graph: J,K >= 1");
  AdjGraph g;
  for (int j = 1; j <= J; ++j)
    for (int k = 1; k <= K; ++k) g.add_vertex(hex_vertex_id(K, j, k));
  for (const auto& [a, b] : hex_lattice_edges(J, K))
    g.add_edge(hex_vertex_id(K, a.first, a.second), hex_vertex_id(K, b.first, b.second));
  return g;
}

GraphState lattice_graph_state(const SiteGraph& graph) {
  AdjGraph g;
  for (VertexId v : graph.vertices()) {
    g.add_vertex(site_qubit(graph.L, v));
    graph.for_each_neighbor(v, [&](VertexId w) {
      if (v < w) g.add_edge(site_qubit(graph.L, v), site_qubit(graph.L, w));
    });
  }
  return graph_state_from(g);
}

ContractionResult contract_to_hexagonal(const GraphState& initial,
                                        const IdentifiedSubgraph& sub, int L,
                                        std::uint64_t seed) {
  ContractionResult res;
  res.state = initial;
  GraphState& st = res.state;

  std::set<int> kept;
  for (VertexId v : sub.vertices) kept.insert(site_qubit(L, v));
  std::set<int> hex_ids;
  for (const auto& [jk, v] : sub.hex_map) {
    (void)jk;
    hex_ids.insert(site_qubit(L, v));
  }
  auto outcome_for = [&](int q) { return rng::pm1(rng::hash2(seed, static_cast<std::uint64_t>(q))); };

  // Q.1: disconnect everything outside the identified subset.
  for (int q : st.graph.vertices())
    if (!kept.count(q)) res.record.push_back(st.measure_z(q, outcome_for(q)));

  // Q.2: peel dangling leftovers with Z, then contract wires with Y.
  for (;;) {
    int target = -1;
    for (int q : st.graph.vertices())
      if (!hex_ids.count(q) && st.graph.degree(q) <= 1) {
        target = q;
        break;
      }
    if (target < 0) break;
    res.record.push_back(st.measure_z(target, outcome_for(target)));
  }
  std::vector<int> wires;
  for (int q : st.graph.vertices())
    if (!hex_ids.count(q)) wires.push_back(q);
  for (int q : wires) {
    require_internal(st.graph.degree(q) == 2, "contract_to_hexagonal: wire degree != 2");
    res.record.push_back(st.measure_y_deg2(q, outcome_for(q)));
  }

  // The surviving graph must be exactly the brick-wall lattice under the
  // hex_map relabeling.
  AdjGraph relabeled;
  std::map<int, int> to_hex;
  for (const auto& [jk, v] : sub.hex_map)
    to_hex[site_qubit(L, v)] = hex_vertex_id(sub.K, jk.first, jk.second);
  require_internal(st.graph.vertex_count() == to_hex.size(),
                   "contract_to_hexagonal: leftover non-junction qubits");
  for (const auto& [q, nbrs] : st.graph.adj) {
    require_internal(to_hex.count(q) > 0, "contract_to_hexagonal: unexpected qubit");
    relabeled.add_vertex(to_hex.at(q));
    for (int w : nbrs)
      if (q < w) relabeled.add_edge(to_hex.at(q), to_hex.at(w));
  }
  require_internal(relabeled == hex_lattice_graph(sub.J, sub.K),
                   "contract_to_hexagonal: final graph is not the target lattice");
  return res;
}

}  // namespace hexforge
