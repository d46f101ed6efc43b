#pragma once

#include <string>

#include "json.hpp"

#include "hexforge/bridge.hpp"
#include "hexforge/graph_state.hpp"
#include "hexforge/pipeline.hpp"

namespace hexforge {

nlohmann::json to_json(const VertexId& v);
nlohmann::json to_json(const CrossingPath& p);
nlohmann::json to_json(const PathSet& set);
nlohmann::json to_json(const Bridge& b);
nlohmann::json to_json(const BridgeDecomposition& bd);
nlohmann::json to_json(const Abutment& a);
nlohmann::json to_json(const IdentifiedSubgraph& sub);
nlohmann::json to_json(const MeasurementRecord& record, int L);
nlohmann::json to_json(const ErrorReport& report);

// Stage dump payloads mirroring the identification stages (a)-(f).
nlohmann::json stage_dump_lattice(const OccupancyGrid& grid, const LatticeConfig& config);
nlohmann::json stage_dump_paths(const PipelineResult& pipe);
nlohmann::json stage_dump_bridges(const PipelineResult& pipe);
nlohmann::json stage_dump_alternating(const PipelineResult& pipe);
nlohmann::json stage_dump_corrected(const PipelineResult& pipe);
nlohmann::json stage_dump_final(const IdentifiedSubgraph& sub, const MeasurementRecord& record,
                                int L);

void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace hexforge
