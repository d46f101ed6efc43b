#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hexforge/clifford.hpp"
#include "hexforge/graph_state.hpp"

namespace hexforge {

// Pauli product over n qubits: operator = i^phase * prod_q X^x Z^z. Valid
// stabilizer rows are Hermitian: phase + |x & z| is even.
struct PauliRow {
  int n = 0;
  std::vector<std::uint64_t> x, z;
  int phase = 0;  // mod 4

  static PauliRow identity(int n);
  static PauliRow single(int n, int qubit, SignedPauli p);
  bool get_x(int q) const { return (x[q >> 6] >> (q & 63)) & 1; }
  bool get_z(int q) const { return (z[q >> 6] >> (q & 63)) & 1; }
  void set_x(int q, bool v);
  void set_z(int q, bool v);
  bool commutes_with(const PauliRow& o) const;
  void multiply_left(const PauliRow& o);  // this <- o * this (phase-exact)
  bool same_pauli(const PauliRow& o) const { return x == o.x && z == o.z; }
  std::string to_string() const;  // e.g. "+XZII"
  bool operator==(const PauliRow&) const = default;
};

struct MeasureResult {
  int outcome = +1;
  bool deterministic = false;
};

// Aaronson-Gottesman style stabilizer tableau with destabilizers; supports
// H, S, CNOT, CZ and measurement of arbitrary Pauli products.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(int n);  // |0...0>
  static StabilizerTableau from_graph(const AdjGraph& graph,
                                      const std::vector<int>& qubit_order);

  int n() const { return n_; }
  void apply_h(int q);
  void apply_s(int q);
  void apply_cnot(int control, int target);
  void apply_cz(int a, int b);
  void apply_clifford(int q, const LocalClifford& c);  // via its H/S word

  // Measures the (possibly signed) Pauli product M. A forced outcome applies
  // only when the result is random; a deterministic contradiction throws.
  MeasureResult measure(const PauliRow& m, std::optional<int> forced,
                        std::uint64_t rng_word = 0);
  MeasureResult measure_basis(PauliAxis basis, int qubit, std::optional<int> forced,
                              std::uint64_t rng_word = 0);

  std::vector<PauliRow> stabilizer_rows() const;
  std::string to_string() const;

 private:
  int n_;
  std::vector<PauliRow> destab_, stab_;
};

// True iff the two generator lists span the same signed stabilizer group.
bool stabilizer_groups_equal(std::vector<PauliRow> a, std::vector<PauliRow> b);

// Conjugates a bare Pauli row by a single-qubit Clifford at qubit q.
void apply_clifford_to_row(PauliRow& row, int q, const LocalClifford& c);

// Canonical generators (full row reduction over the symplectic matrix).
std::vector<PauliRow> canonical_generators(std::vector<PauliRow> gens);

}  // namespace hexforge
