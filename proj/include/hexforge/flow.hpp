#pragma once

#include "hexforge/crossing_types.hpp"
#include "hexforge/lattice.hpp"

namespace hexforge {

// Exact maximum number of vertex-disjoint crossings (Menger), computed by
// unit-capacity max-flow on the vertex-split graph with a super-source on
// the entry boundary and a super-sink on the exit boundary.
int max_disjoint_crossings(const SiteGraph& graph, Orientation orientation);

// Convenience overload for grids (H orientation, the statistic m_L).
int max_disjoint_crossings(const OccupancyGrid& grid);

}  // namespace hexforge
