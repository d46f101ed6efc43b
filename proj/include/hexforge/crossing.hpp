#pragma once

#include <optional>
#include <vector>

#include "hexforge/crossing_types.hpp"
#include "hexforge/lattice.hpp"

namespace hexforge {

// Right-hand wall follower. The walk starts at the lowest-leftmost occupied
// entry-boundary vertex outside `forbidden`, keeps its hand on the wall
// (preference order: toward-wall, straight, away, back) and stops at the
// first exit-boundary vertex. Loop-erasing the walk yields the extremal
// boundary-hugging crossing. Absence of a crossing is a value, not an error.
//
// Each walk visits a vertex at most four times (once per heading); `stats`
// when supplied accumulates the arrival count.
std::optional<CrossingPath> rhwf_crossing(const SiteGraph& graph,
                                          Orientation orientation,
                                          const std::vector<VertexId>& forbidden,
                                          WorkCounters* stats = nullptr);

// Stage C.1 H-path finder: repeated 2-local RHWF. Each new search forbids
// the Manhattan-2 neighborhood of all previously found H-paths, so the set
// has no H-H errors by construction. Paths are returned bottom-to-top,
// indexed from 1, without self-error cleanup.
PathSet find_h_paths(const SiteGraph& graph, WorkCounters* stats = nullptr);

// Stage C.1 V-path finder: plain RHWF enumerates all maximal vertex-disjoint
// V-crossings left-to-right, then paths 1, 4, 7, ... are retained (every
// third, keeping the leftmost). Retained paths are reindexed from 1.
PathSet find_v_paths(const SiteGraph& graph, WorkCounters* stats = nullptr);

// Shortest crossing within the induced subgraph of the path's own vertices;
// removes all self errors and only ever deletes vertices. Among equal-length
// crossings the lexicographically smallest vertex sequence is chosen.
// Throws InternalError if the path's vertices contain no crossing.
CrossingPath shortest_path_cleanup(const CrossingPath& path, const SiteGraph& graph,
                                   WorkCounters* stats = nullptr);

// Applies shortest_path_cleanup to every path of the set.
PathSet cleanup_pathset(const PathSet& set, const SiteGraph& graph,
                        WorkCounters* stats = nullptr);

// Closeness-error audit of a C.1 output. Self errors are graph edges joining
// non-consecutive vertices of one path; H-H / V-V errors join two distinct
// same-orientation paths. H-V contacts are grouped into contiguous regions
// per (H,V) pair (successive H-path positions within gap 2); every region
// beyond the first counts as an error, since a valid pair meets in a single
// intersection region. Degree/lattice fields are left zero here.
ErrorReport validate_paths(const PathSet& hset, const PathSet& vset,
                           const SiteGraph& graph);

}  // namespace hexforge
