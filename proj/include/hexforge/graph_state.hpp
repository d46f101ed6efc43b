#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hexforge/bridge.hpp"
#include "hexforge/clifford.hpp"
#include "hexforge/lattice.hpp"

namespace hexforge {

// Simple undirected graph over integer qubit ids, ordered containers only so
// every iteration is deterministic.
struct AdjGraph {
  std::map<int, std::set<int>> adj;

  void add_vertex(int v) { adj.try_emplace(v); }
  void add_edge(int a, int b);
  void toggle_edge(int a, int b);
  bool has_vertex(int v) const { return adj.count(v) > 0; }
  bool has_edge(int a, int b) const;
  void remove_vertex(int v);
  int degree(int v) const { return static_cast<int>(adj.at(v).size()); }
  std::size_t vertex_count() const { return adj.size(); }
  std::size_t edge_count() const;
  std::vector<int> vertices() const;
  std::vector<std::pair<int, int>> edges() const;  // a < b, sorted

  bool operator==(const AdjGraph&) const = default;
};

struct MeasurementEvent {
  int qubit = 0;
  PauliAxis graph_basis = PauliAxis::Z;  // basis on the bare graph state
  int outcome = +1;
  SignedPauli physical;                  // frame-conjugated operator actually measured
};
using MeasurementRecord = std::vector<MeasurementEvent>;

// Graph plus per-qubit local Clifford frame; the represented state is
// (tensor of frames) |G>. Measurements follow the graph-state rules: Z
// disconnects a vertex, Y on a degree-2 vertex contracts its line, and the
// outcome-dependent byproducts accumulate in the neighbours' frames.
struct GraphState {
  AdjGraph graph;
  std::map<int, LocalClifford> frame;

  bool live(int v) const { return graph.has_vertex(v); }

  // Removes v and its incident edges; outcome -1 composes Z onto each former
  // neighbour's frame. Returns the event describing the physical measurement.
  MeasurementEvent measure_z(int v, int outcome);

  // Requires deg(v) == 2: toggles the edge between the two neighbours,
  // removes v, and composes S (outcome +1) or S^dag (outcome -1) onto both
  // neighbours' frames.
  MeasurementEvent measure_y_deg2(int v, int outcome);
};

GraphState graph_state_from(const AdjGraph& graph);

// Brick-wall hexagonal lattice with J rows of K junctions: vertex (j,k) has
// id hex_vertex_id(...), horizontal edges along rows and a vertical edge
// (j,k)-(j+1,k) when j+k is even. Interior vertices have degree 3.
int hex_vertex_id(int K, int j, int k);
AdjGraph hex_lattice_graph(int J, int K);

// Qubit ids for lattice sites.
inline int site_qubit(int L, VertexId v) { return v.row * L + v.col; }

// Builds the graph state of the occupied lattice.
GraphState lattice_graph_state(const SiteGraph& graph);

struct ContractionResult {
  GraphState state;          // final state, original site ids
  MeasurementRecord record;  // Q.1 then Q.2, in execution order
};

// Q.1 (Z on the complement of the identified subgraph) followed by Q.2
// (Z on dangling degree<=1 leftovers, then Y on every degree-2 wire vertex).
// Outcomes derive from (seed, qubit id). The final graph must equal the
// J x K brick-wall lattice under hex_map relabeling; InternalError otherwise.
ContractionResult contract_to_hexagonal(const GraphState& initial,
                                        const IdentifiedSubgraph& sub, int L,
                                        std::uint64_t seed);

}  // namespace hexforge
