#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hexforge/graph_state.hpp"

namespace hexforge {

// Dense graph on at most 16 vertices for the exponential rank-width search.
struct DenseGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;  // adjacency rows as bitmasks

  static DenseGraph from_adj(const AdjGraph& g);  // vertices relabeled 0..n-1 in id order
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const { return (adj[a] >> b) & 1u; }
};

// GF(2) rank of the A-to-complement adjacency submatrix; equals log2 of the
// bipartite Schmidt rank of the graph state across (A, complement).
int cut_rank(const DenseGraph& g, std::uint32_t subset);

// Nested-pair branch decomposition witness: leaves are vertices, internal
// nodes pair two sub-decompositions.
struct BranchTree {
  int leaf = -1;  // >= 0 for a leaf
  std::vector<BranchTree> children;

  std::string to_string() const;
};

struct BranchDecompositionResult {
  int width = 0;
  BranchTree witness_tree;
};

// Exact rank-width by dynamic programming over vertex subsets:
//   best({v}) = cut_rank({v})
//   best(S)   = min over splits {A, S\A} of
//               max(cut_rank(A), cut_rank(S\A), best(A), best(S\A))
// Requires n <= 12.
BranchDecompositionResult rank_width_bruteforce(const DenseGraph& g);

// Maximum cut value over the edges of a given branch decomposition tree;
// used to re-validate witnesses.
int width_of_tree(const DenseGraph& g, const BranchTree& tree);

// Entanglement width of a possibly disconnected graph: the maximum
// component rank-width (product rule over tensor factors). Every component
// must fit the brute-force limit.
int ewd_of_components(const AdjGraph& g, int size_limit = 12);

struct WidthBoundSample {
  int largest_component = 0;
  int exact_width = -1;  // computed when the largest component fits the limit
};

struct WidthBoundReport {
  int L = 0;
  double p = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<WidthBoundSample> samples;
  double mean_largest = 0;
  int max_largest = 0;
};

// Subcritical diagnostic: per sample the largest component size bounds the
// entanglement width from above; exact widths are attached where the
// component fits the DP limit.
WidthBoundReport subcritical_width_bound_check(double p, int L, int trials,
                                               std::uint64_t seed);

}  // namespace hexforge
