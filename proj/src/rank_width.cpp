#include "hexforge/rank_width.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "hexforge/lattice.hpp"
#include "hexforge/rng.hpp"

namespace hexforge {

DenseGraph DenseGraph::from_adj(const AdjGraph& g) {
  DenseGraph d;
  d.n = static_cast<int>(g.adj.size());
  if (d.n > 31) throw std::invalid_argument("DenseGraph: too many vertices");
  d.adj.assign(d.n, 0);
  std::map<int, int> index;
  for (int v : g.vertices()) {
    int i = static_cast<int>(index.size());
    index[v] = i;
  }
  for (const auto& [a, b] : g.edges()) d.add_edge(index.at(a), index.at(b));
  return d;
}

void DenseGraph::add_edge(int a, int b) {
  adj[a] |= 1u << b;
  adj[b] |= 1u << a;
}

int cut_rank(const DenseGraph& g, std::uint32_t subset) {
  // Gaussian elimination over the rows of the A x (V\A) submatrix.
  std::uint32_t complement = ~subset & ((g.n >= 32 ? 0u : (1u << g.n)) - 1u);
  std::vector<std::uint32_t> rows;
  for (int v = 0; v < g.n; ++v)
    if ((subset >> v) & 1u) {
      std::uint32_t row = g.adj[v] & complement;
      if (row) rows.push_back(row);
    }
  int rank = 0;
  for (int c = 0; c < g.n && !rows.empty(); ++c) {
    std::uint32_t bit = 1u << c;
    size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != static_cast<size_t>(rank) && (rows[i] & bit)) rows[i] ^= rows[rank];
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

namespace {

BranchTree build_tree(const std::vector<std::uint32_t>& split_of, std::uint32_t S) {
  if (std::popcount(S) == 1) {
    BranchTree leaf;
    leaf.leaf = std::countr_zero(S);
    return leaf;
  }
  std::uint32_t A = split_of[S];
  BranchTree node;
  node.children.push_back(build_tree(split_of, A));
  node.children.push_back(build_tree(split_of, S & ~A));
  return node;
}

std::uint32_t leaves_of(const BranchTree& t) {
  if (t.leaf >= 0) return 1u << t.leaf;
  std::uint32_t m = 0;
  for (const auto& c : t.children) m |= leaves_of(c);
  return m;
}

int tree_width_rec(const DenseGraph& g, const BranchTree& t, std::uint32_t full) {
  if (t.leaf >= 0) return cut_rank(g, 1u << t.leaf);
  int w = 0;
  for (const auto& c : t.children) {
    std::uint32_t sub = leaves_of(c);
    if (sub != full) w = std::max(w, cut_rank(g, sub));
    w = std::max(w, tree_width_rec(g, c, full));
  }
  return w;
}

}  // namespace

std::string BranchTree::to_string() const {
  if (leaf >= 0) return std::to_string(leaf);
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < children.size(); ++i) {
    if (i) os << " ";
    os << children[i].to_string();
  }
  os << ")";
  return os.str();
}

BranchDecompositionResult rank_width_bruteforce(const DenseGraph& g) {
  if (g.n > 12) throw std::invalid_argument("rank_width_bruteforce: more than 12 vertices");
  BranchDecompositionResult res;
  if (g.n == 0) return res;
  if (g.n == 1) {
    res.width = 0;
    res.witness_tree.leaf = 0;
    return res;
  }
  const std::uint32_t full = (1u << g.n) - 1u;
  std::vector<int> cut(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) cut[s] = cut_rank(g, s);
  std::vector<int> best(full + 1, 0);
  std::vector<std::uint32_t> split_of(full + 1, 0);
  // Subsets in increasing popcount order via plain increasing masks: every
  // proper submask is numerically smaller, so a forward pass suffices.
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (std::popcount(s) == 1) {
      best[s] = cut[s];
      continue;
    }
    int b = INT32_MAX;
    std::uint32_t b_split = 0;
    std::uint32_t low = s & (~s + 1);  // fix the lowest vertex into A
    for (std::uint32_t a = (s - 1) & s;; a = (a - 1) & s) {
      if (a & low) {
        std::uint32_t rest = s & ~a;
        if (rest) {
          int w = std::max(std::max(cut[a], cut[rest]), std::max(best[a], best[rest]));
          if (w < b) {
            b = w;
            b_split = a;
          }
        }
      }
      if (a == 0) break;
    }
    best[s] = b;
    split_of[s] = b_split;
  }
  res.width = best[full];
  res.witness_tree = build_tree(split_of, full);
  return res;
}

int width_of_tree(const DenseGraph& g, const BranchTree& tree) {
  std::uint32_t full = leaves_of(tree);
  return tree_width_rec(g, tree, full);
}

int ewd_of_components(const AdjGraph& g, int size_limit) {
  // Split into components, then take the maximum component width.
  std::map<int, int> comp;
  int n_comp = 0;
  for (int v : g.vertices()) {
    if (comp.count(v)) continue;
    std::vector<int> stack{v};
    comp[v] = n_comp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj.at(u))
        if (!comp.count(w)) {
          comp[w] = n_comp;
          stack.push_back(w);
        }
    }
    ++n_comp;
  }
  std::vector<AdjGraph> parts(n_comp);
  for (const auto& [v, c] : comp) parts[c].add_vertex(v);
  for (const auto& [a, b] : g.edges()) parts[comp.at(a)].add_edge(a, b);
  int width = 0;
  for (const AdjGraph& part : parts) {
    if (static_cast<int>(part.adj.size()) > size_limit)
      throw std::invalid_argument("ewd_of_components: component exceeds size limit");
    width = std::max(width, rank_width_bruteforce(DenseGraph::from_adj(part)).width);
  }
  return width;
}

WidthBoundReport subcritical_width_bound_check(double p, int L, int trials,
                                               std::uint64_t seed) {
  if (!(p < 0.55)) throw std::invalid_argument("subcritical_width_bound_check: p must be < 0.55");
  WidthBoundReport report;
  report.L = L;
  report.p = p;
  report.trials = trials;
  report.seed = seed;
  double sum = 0;
  for (int t = 0; t < trials; ++t) {
    auto grid = sample_grid({L, p, rng::hash2(seed, static_cast<std::uint64_t>(t))});
    auto comps = connected_components(grid_to_graph(grid));
    WidthBoundSample s;
    const std::vector<VertexId>* largest = nullptr;
    for (const auto& c : comps)
      if (static_cast<int>(c.size()) > s.largest_component) {
        s.largest_component = static_cast<int>(c.size());
        largest = &c;
      }
    if (largest && s.largest_component <= 12) {
      AdjGraph g;
      std::map<VertexId, int> id;
      for (VertexId v : *largest) {
        id[v] = v.row * L + v.col;
        g.add_vertex(id[v]);
      }
      SiteGraph sg = grid_to_graph(grid);
      for (VertexId v : *largest)
        sg.for_each_neighbor(v, [&](VertexId w) {
          if (v < w) g.add_edge(id.at(v), id.at(w));
        });
      s.exact_width = rank_width_bruteforce(DenseGraph::from_adj(g)).width;
    }
    sum += s.largest_component;
    report.max_largest = std::max(report.max_largest, s.largest_component);
    report.samples.push_back(s);
  }
  report.mean_largest = trials > 0 ? sum / trials : 0.0;
  return report;
}

}  // namespace hexforge
