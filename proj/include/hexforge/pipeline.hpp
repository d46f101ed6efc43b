#pragma once

#include <string>

#include "hexforge/bridge.hpp"
#include "hexforge/crossing.hpp"
#include "hexforge/lattice.hpp"

namespace hexforge {

// Classical identification stages C.1 (path finding and cleanup), C.2
// (bridge decomposition and alternation) and C.3 (local correction and
// extraction). A run is applicable when it yields at least two H-paths and
// two retained V-paths; otherwise only the C.1 fields are populated.
struct PipelineResult {
  bool applicable = false;
  std::string reason;  // set when not applicable

  PathSet h_raw, v_raw;  // finder output before self-error cleanup
  PathSet h, v;          // valid C.1 paths
  ErrorReport c1_errors;

  BridgeDecomposition complete_bd;
  BridgeDecomposition alternating_bd;
  std::vector<Abutment> abutments_complete;
  std::vector<Abutment> abutments_alternating;
  TotalOrderResult total_order;
  CorrectionResult correction;
  IdentifiedSubgraph sub;
  bool minor_ok = false;

  WorkCounters work;
  int J() const { return static_cast<int>(h.paths.size()); }
  int K() const { return static_cast<int>(v.paths.size()); }
};

PipelineResult run_identification(const SiteGraph& graph);

}  // namespace hexforge
