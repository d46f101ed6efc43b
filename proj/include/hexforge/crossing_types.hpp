#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hexforge/lattice.hpp"

namespace hexforge {

enum class Orientation { H, V };

inline const char* to_string(Orientation o) { return o == Orientation::H ? "H" : "V"; }

// A boundary-to-boundary path. H-paths run col 0 -> col L-1 ordered by
// position in the walk; V-paths run row 0 -> row L-1. The index is 1-based,
// bottom-to-top for H and left-to-right for V.
struct CrossingPath {
  Orientation orientation = Orientation::H;
  int index = 0;
  std::vector<VertexId> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
};

struct PathSet {
  Orientation orientation = Orientation::H;
  std::vector<CrossingPath> paths;      // retained, indexed 1..K
  int found_before_retention = 0;       // paths found prior to any retention rule
  std::string provenance;               // finder rule that produced the set
};

// Witness for a closeness error: a lattice edge joining two path vertices
// that should not be adjacent.
struct ErrorWitness {
  VertexId a;
  VertexId b;
  std::string detail;
};

struct ErrorReport {
  int self_h = 0, self_v = 0;
  int hh = 0, vv = 0;
  int hv = 0;
  int degree1 = 0, degree2 = 0, degree4 = 0;
  int lattice = 0;
  std::vector<ErrorWitness> witnesses;

  int closeness_total() const { return self_h + self_v + hh + vv + hv; }
};

// Deterministic work counters used for the O(N) runtime check. Counts
// algorithmic touches, never wall-clock.
struct WorkCounters {
  std::uint64_t rhwf_visits = 0;      // wall-follower vertex arrivals
  std::uint64_t cleanup_steps = 0;    // BFS dequeues in shortest-path cleanup
  std::uint64_t bridge_steps = 0;     // vertices scanned in bridge decomposition
  std::uint64_t correction_steps = 0; // vertices touched in local correction

  std::uint64_t total() const {
    return rhwf_visits + cleanup_steps + bridge_steps + correction_steps;
  }
  WorkCounters& operator+=(const WorkCounters& o) {
    rhwf_visits += o.rhwf_visits;
    cleanup_steps += o.cleanup_steps;
    bridge_steps += o.bridge_steps;
    correction_steps += o.correction_steps;
    return *this;
  }
};

}  // namespace hexforge
