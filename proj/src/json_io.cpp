#include "hexforge/json_io.hpp"

#include <fstream>

namespace hexforge {

using nlohmann::json;

json to_json(const VertexId& v) { return json::array({v.row, v.col}); }

json to_json(const CrossingPath& p) {
  json verts = json::array();
  for (VertexId v : p.vertices) verts.push_back(to_json(v));
  return json{{"orientation", to_string(p.orientation)},
              {"index", p.index},
              {"vertices", verts}};
}

json to_json(const PathSet& set) {
  json paths = json::array();
  for (const auto& p : set.paths) paths.push_back(to_json(p));
  return json{{"orientation", to_string(set.orientation)},
              {"paths", paths},
              {"found_before_retention", set.found_before_retention},
              {"provenance", set.provenance}};
}

json to_json(const Bridge& b) {
  json verts = json::array();
  for (VertexId v : b.vertices) verts.push_back(to_json(v));
  return json{{"j", b.j}, {"k", b.k}, {"s", to_json(b.s)}, {"e", to_json(b.e)},
              {"vertices", verts}};
}

json to_json(const BridgeDecomposition& bd) {
  json bridges = json::array();
  for (const auto& [key, b] : bd.bridges) {
    json item = to_json(b);
    item["retained"] = bd.retained.count(key) > 0;
    bridges.push_back(item);
  }
  return json{{"J", bd.J}, {"K", bd.K}, {"bridges", bridges}};
}

json to_json(const Abutment& a) {
  auto verts = [](const std::vector<VertexId>& vs) {
    json out = json::array();
    for (VertexId v : vs) out.push_back(to_json(v));
    return out;
  };
  return json{{"j", a.j},
              {"k", a.k},
              {"upper", verts(a.upper)},
              {"lower", verts(a.lower)},
              {"closure_upper", verts(a.closure_upper)},
              {"closure_lower", verts(a.closure_lower)},
              {"closure_total", verts(a.closure_total)}};
}

json to_json(const IdentifiedSubgraph& sub) {
  json verts = json::array();
  for (VertexId v : sub.vertices) verts.push_back(to_json(v));
  json edges = json::array();
  for (const auto& [a, b] : sub.edges) edges.push_back(json::array({to_json(a), to_json(b)}));
  json hex = json::array();
  for (const auto& [jk, v] : sub.hex_map)
    hex.push_back(json{{"j", jk.first}, {"k", jk.second}, {"site", to_json(v)}});
  return json{{"J", sub.J},       {"K", sub.K},     {"vertices", verts},
              {"edges", edges},   {"hex_map", hex}, {"warnings", sub.warnings}};
}

json to_json(const MeasurementRecord& record, int L) {
  json out = json::array();
  for (const auto& ev : record) {
    VertexId site{ev.qubit / L, ev.qubit % L};
    std::string phys(1, axis_char(ev.physical.axis));
    out.push_back(json{{"site", to_json(site)},
                       {"basis", std::string(1, axis_char(ev.graph_basis))},
                       {"outcome", ev.outcome},
                       {"physical", (ev.physical.sign < 0 ? "-" : "+") + phys}});
  }
  return out;
}

json to_json(const ErrorReport& report) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back(json{{"a", to_json(w.a)}, {"b", to_json(w.b)}, {"detail", w.detail}});
  return json{{"self_h", report.self_h},   {"self_v", report.self_v}, {"hh", report.hh},
              {"vv", report.vv},           {"hv", report.hv},         {"degree1", report.degree1},
              {"degree2", report.degree2}, {"degree4", report.degree4},
              {"lattice", report.lattice}, {"witnesses", witnesses}};
}

json stage_dump_lattice(const OccupancyGrid& grid, const LatticeConfig& config) {
  json rows = json::array();
  for (int r = grid.L - 1; r >= 0; --r) {
    std::string row;
    for (int c = 0; c < grid.L; ++c) row += grid.occupied(r, c) ? '1' : '0';
    rows.push_back(row);
  }
  return json{{"stage", "a:lattice"},
              {"L", config.L},
              {"p", config.p},
              {"seed", config.seed},
              {"occupied", grid.occupied_count()},
              {"rows_top_down", rows}};
}

json stage_dump_paths(const PipelineResult& pipe) {
  return json{{"stage", "b:path-identification"},
              {"h_paths", to_json(pipe.h)},
              {"v_paths", to_json(pipe.v)},
              {"errors", to_json(pipe.c1_errors)}};
}

json stage_dump_bridges(const PipelineResult& pipe) {
  json abuts = json::array();
  for (const auto& a : pipe.abutments_complete) abuts.push_back(to_json(a));
  return json{{"stage", "c:bridge-decomposition"},
              {"bridges", to_json(pipe.complete_bd)},
              {"abutments", abuts}};
}

json stage_dump_alternating(const PipelineResult& pipe) {
  return json{{"stage", "d:alternating-decomposition"},
              {"bridges", to_json(pipe.alternating_bd)},
              {"total_order_ok", pipe.total_order.ok}};
}

json stage_dump_corrected(const PipelineResult& pipe) {
  return json{{"stage", "e:local-correction"},
              {"revised_h", to_json(pipe.correction.revised_h)},
              {"warnings", pipe.correction.warnings},
              {"identified", to_json(pipe.sub)},
              {"minor_ok", pipe.minor_ok}};
}

json stage_dump_final(const IdentifiedSubgraph& sub, const MeasurementRecord& record,
                      int L) {
  return json{{"stage", "f:deletion-and-contraction"},
              {"hex", json{{"J", sub.J}, {"K", sub.K}}},
              {"measurements", to_json(record, L)}};
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << j.dump(2) << '\n';
}

}  // namespace hexforge
