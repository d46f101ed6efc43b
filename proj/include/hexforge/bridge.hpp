#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hexforge/crossing_types.hpp"
#include "hexforge/lattice.hpp"

namespace hexforge {

// Stage C.2/C.3 machinery. H-paths are indexed j = 1..J bottom-to-top and
// retained V-paths k = 1..K left-to-right. The j-stripe lies between H^j and
// H^{j+1}; the bridge (j,k) is the segment of V^k crossing it. Closed
// neighborhoods are used for the endpoint rule: s is the last element of V^k
// in H^j ∪ N(H^j) and e the first element after s in H^{j+1} ∪ N(H^{j+1}),
// which stays well defined when a V-path passes through an H-path.

struct Bridge {
  int j = 0;
  int k = 0;
  std::vector<VertexId> vertices;  // ordered sub-path of V^k, s..e inclusive
  VertexId s;
  VertexId e;
};

struct BridgeDecomposition {
  int J = 0;  // number of H-paths
  int K = 0;  // number of retained V-paths
  std::map<std::pair<int, int>, Bridge> bridges;   // (j,k) -> bridge
  std::set<std::pair<int, int>> retained;          // complete: all; alternating: j+k even
};

struct Abutment {
  int j = 0;
  int k = 0;
  std::vector<VertexId> upper;           // H^j ∩ N(s of bridge (j,k))
  std::vector<VertexId> lower;           // H^j ∩ N(e of bridge (j-1,k))
  std::vector<VertexId> closure_upper;   // order interval of H^j spanning `upper`
  std::vector<VertexId> closure_lower;
  std::vector<VertexId> closure_total;
};

struct TotalOrderWitness {
  int j = 0;
  int k1 = 0, k2 = 0;
  std::string detail;
};

struct TotalOrderResult {
  bool ok = true;
  std::vector<TotalOrderWitness> witnesses;
};

struct JunctionInfo {
  int j = 0;
  int k = 0;
  VertexId vertex;
  bool spacer = false;  // boundary-row vertex kept to stand in for a bridge-less column
};

struct CorrectionResult {
  PathSet revised_h;
  std::vector<JunctionInfo> junctions;   // bridge-terminal junctions only
  std::vector<std::string> warnings;     // residual benign contacts
};

struct IdentifiedSubgraph {
  int J = 0;
  int K = 0;
  std::vector<VertexId> vertices;                        // sorted
  std::vector<std::pair<VertexId, VertexId>> edges;      // induced, a < b, sorted
  std::map<std::pair<int, int>, VertexId> hex_map;       // (j,k) -> junction/spacer
  std::vector<std::string> warnings;

  bool has_vertex(VertexId v) const;
};

// Complete bridge decomposition: one bridge per retained V-path per stripe.
// Throws InternalError when a V-path fails to cross a stripe, which signals
// an invalid PathSet upstream.
BridgeDecomposition bridge_decomposition(const PathSet& hset, const PathSet& vset,
                                         const SiteGraph& graph,
                                         WorkCounters* stats = nullptr);

// Keeps the bridges with j+k even.
BridgeDecomposition alternating_decomposition(const BridgeDecomposition& bd);

// Abutments (and their closures) of the retained bridges, ordered along each
// H-path.
std::vector<Abutment> compute_abutments(const BridgeDecomposition& bd,
                                        const PathSet& hset, const SiteGraph& graph);

// True iff all abutment closures along each H-path are pairwise disjoint
// intervals appearing in V-path order.
TotalOrderResult verify_total_order(const std::vector<Abutment>& abutments,
                                    const PathSet& hset);

// Stage C.3: wherever a bridge terminal has extra H-path neighbours, the
// closure interior is deleted and the terminal spliced into the H-path, so
// every junction region ends with a single degree-3 vertex.
CorrectionResult correct_local_errors(const PathSet& hset, const BridgeDecomposition& bd,
                                      const std::vector<Abutment>& abutments,
                                      const SiteGraph& graph,
                                      WorkCounters* stats = nullptr);

// Assembles the kept vertex set (revised H-paths trimmed to their outermost
// junction or spacer, plus retained bridges), selects boundary spacers, and
// builds the hex coordinate map.
IdentifiedSubgraph extract_hex_minor(const CorrectionResult& correction,
                                     const BridgeDecomposition& bd,
                                     const SiteGraph& graph);

// Edge list of the J x K brick-wall lattice: (j,k)-(j,k+1) horizontally and
// (j,k)-(j+1,k) when j+k is even.
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> hex_lattice_edges(int J,
                                                                                   int K);

// True iff suppressing all degree-2 chains of the kept graph yields exactly
// the J x K brick-wall lattice matched through hex_map.
bool verify_topological_minor(const IdentifiedSubgraph& sub, int J, int K);

// Degree and lattice error tally of an identified subgraph.
ErrorReport report_subgraph_errors(const IdentifiedSubgraph& sub);

}  // namespace hexforge
