#include "hexforge/verify.hpp"

#include <map>
#include <sstream>

#include "hexforge/errors.hpp"
#include "hexforge/graph_state.hpp"
#include "hexforge/pipeline.hpp"
#include "hexforge/tableau.hpp"

namespace hexforge {

VerifyResult verify_concentration(const OccupancyGrid& grid, std::uint64_t seed,
                                  int max_qubits) {
  SiteGraph graph = grid_to_graph(grid);
  if (graph.n_occupied > max_qubits)
    throw std::invalid_argument("verify_concentration: " + std::to_string(graph.n_occupied) +
                                " qubits exceed the tableau limit of " +
                                std::to_string(max_qubits));

  PipelineResult pipe = run_identification(graph);
  if (!pipe.applicable) throw NotApplicableError("verify_concentration: " + pipe.reason);
  require_internal(pipe.minor_ok, "verify_concentration: identified subgraph is not a hex minor");

  VerifyResult res;
  res.J = pipe.J();
  res.K = pipe.K();
  res.qubits = graph.n_occupied;

  // Rewrite-engine side.
  GraphState initial = lattice_graph_state(graph);
  ContractionResult contraction = contract_to_hexagonal(initial, pipe.sub, graph.L, seed);
  res.measurements = static_cast<int>(contraction.record.size());

  // Tableau side: dense qubit indexing over the occupied sites.
  std::vector<int> order;
  std::map<int, int> dense;
  for (VertexId v : graph.vertices()) {
    dense[site_qubit(graph.L, v)] = static_cast<int>(order.size());
    order.push_back(site_qubit(graph.L, v));
  }
  const int n = static_cast<int>(order.size());
  StabilizerTableau tab = StabilizerTableau::from_graph(initial.graph, order);
  for (const MeasurementEvent& ev : contraction.record) {
    PauliRow m = PauliRow::single(n, dense.at(ev.qubit), ev.physical);
    MeasureResult r = tab.measure(m, ev.outcome);
    require_internal(!r.deterministic, "verify_concentration: unexpected deterministic outcome");
  }

  // Expected state: frames applied to the target graph state on the live
  // qubits, fixed single-qubit factors on the measured ones.
  std::vector<PauliRow> expected;
  const GraphState& fin = contraction.state;
  for (const auto& [q, nbrs] : fin.graph.adj) {
    PauliRow row = PauliRow::single(n, dense.at(q), {PauliAxis::X, +1});
    for (int w : nbrs) row.set_z(dense.at(w), true);
    expected.push_back(row);
  }
  for (PauliRow& row : expected)
    for (const auto& [q, f] : fin.frame) apply_clifford_to_row(row, dense.at(q), f);
  for (const MeasurementEvent& ev : contraction.record) {
    PauliRow row = PauliRow::single(n, dense.at(ev.qubit), ev.physical);
    if (ev.outcome == -1) row.phase = (row.phase + 2) % 4;
    expected.push_back(row);
  }

  std::vector<PauliRow> actual = tab.stabilizer_rows();
  res.pass = stabilizer_groups_equal(actual, expected);
  if (!res.pass) {
    std::ostringstream os;
    os << "stabilizer groups differ\n-- tableau --\n";
    for (const auto& r : canonical_generators(actual)) os << r.to_string() << '\n';
    os << "-- expected --\n";
    for (const auto& r : canonical_generators(expected)) os << r.to_string() << '\n';
    res.detail = os.str();
  }
  return res;
}

}  // namespace hexforge
