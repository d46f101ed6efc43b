#include "hexforge/pipeline.hpp"

#include "hexforge/errors.hpp"

namespace hexforge {

PipelineResult run_identification(const SiteGraph& graph) {
  PipelineResult res;
  res.h_raw = find_h_paths(graph, &res.work);
  res.v_raw = find_v_paths(graph, &res.work);
  res.h = cleanup_pathset(res.h_raw, graph, &res.work);
  res.v = cleanup_pathset(res.v_raw, graph, &res.work);

  if (res.J() < 2 || res.K() < 2) {
    res.reason = "need at least 2 H-paths and 2 retained V-paths, found " +
                 std::to_string(res.J()) + " and " + std::to_string(res.K());
    return res;
  }

  res.c1_errors = validate_paths(res.h, res.v, graph);
  require_internal(res.c1_errors.self_h == 0 && res.c1_errors.self_v == 0,
                   "pipeline: self errors after cleanup");
  require_internal(res.c1_errors.hh == 0 && res.c1_errors.vv == 0,
                   "pipeline: same-orientation closeness errors after C.1");

  res.complete_bd = bridge_decomposition(res.h, res.v, graph, &res.work);
  res.abutments_complete = compute_abutments(res.complete_bd, res.h, graph);
  res.total_order = verify_total_order(res.abutments_complete, res.h);
  require_internal(res.total_order.ok, "pipeline: abutment closures not totally ordered");

  res.alternating_bd = alternating_decomposition(res.complete_bd);
  res.abutments_alternating = compute_abutments(res.alternating_bd, res.h, graph);
  res.correction = correct_local_errors(res.h, res.alternating_bd,
                                        res.abutments_alternating, graph, &res.work);
  res.sub = extract_hex_minor(res.correction, res.alternating_bd, graph);
  res.minor_ok = verify_topological_minor(res.sub, res.J(), res.K());
  res.applicable = true;
  return res;
}

}  // namespace hexforge
