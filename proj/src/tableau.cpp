#include "hexforge/tableau.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "hexforge/errors.hpp"
#include "hexforge/rng.hpp"

namespace hexforge {

namespace {
int words_for(int n) { return (n + 63) / 64; }
}  // namespace

PauliRow PauliRow::identity(int n) {
  PauliRow r;
  r.n = n;
  r.x.assign(words_for(n), 0);
  r.z.assign(words_for(n), 0);
  return r;
}

PauliRow PauliRow::single(int n, int qubit, SignedPauli p) {
  PauliRow r = identity(n);
  switch (p.axis) {
    case PauliAxis::X: r.set_x(qubit, true); break;
    case PauliAxis::Z: r.set_z(qubit, true); break;
    case PauliAxis::Y:
      r.set_x(qubit, true);
      r.set_z(qubit, true);
      r.phase = 1;  // Y = i X Z
      break;
  }
  if (p.sign < 0) r.phase = (r.phase + 2) % 4;
  return r;
}

void PauliRow::set_x(int q, bool v) {
  if (v) x[q >> 6] |= 1ull << (q & 63);
  else x[q >> 6] &= ~(1ull << (q & 63));
}

void PauliRow::set_z(int q, bool v) {
  if (v) z[q >> 6] |= 1ull << (q & 63);
  else z[q >> 6] &= ~(1ull << (q & 63));
}

bool PauliRow::commutes_with(const PauliRow& o) const {
  // Symplectic inner product: parity of |x & o.z| + |z & o.x|.
  int parity = 0;
  for (size_t w = 0; w < x.size(); ++w)
    parity ^= (std::popcount(x[w] & o.z[w]) + std::popcount(z[w] & o.x[w])) & 1;
  return parity == 0;
}

void PauliRow::multiply_left(const PauliRow& o) {
  // this <- o * this; reordering Z^z(o side touching X^x of this) costs
  // (-1) per overlapping bit: i^2 per |o.z & this.x|.
  int add = 0;
  for (size_t w = 0; w < x.size(); ++w) add += std::popcount(o.z[w] & x[w]);
  phase = (phase + o.phase + 2 * add) % 4;
  for (size_t w = 0; w < x.size(); ++w) {
    x[w] ^= o.x[w];
    z[w] ^= o.z[w];
  }
}

std::string PauliRow::to_string() const {
  std::ostringstream os;
  // Normalize to the conventional +/- prefix with Y = i X Z absorbed.
  int y_count = 0;
  for (int q = 0; q < n; ++q)
    if (get_x(q) && get_z(q)) ++y_count;
  int ph = (phase + y_count * 3) % 4;  // divide out i per Y factor
  os << (ph == 0 ? "+" : ph == 2 ? "-" : ph == 1 ? "i" : "-i");
  for (int q = 0; q < n; ++q) {
    bool xb = get_x(q), zb = get_z(q);
    os << (xb && zb ? 'Y' : xb ? 'X' : zb ? 'Z' : 'I');
  }
  return os.str();
}

StabilizerTableau::StabilizerTableau(int n) : n_(n) {
  destab_.reserve(n);
  stab_.reserve(n);
  for (int q = 0; q < n; ++q) {
    destab_.push_back(PauliRow::single(n, q, {PauliAxis::X, +1}));
    stab_.push_back(PauliRow::single(n, q, {PauliAxis::Z, +1}));
  }
}

StabilizerTableau StabilizerTableau::from_graph(const AdjGraph& graph,
                                                const std::vector<int>& qubit_order) {
  const int n = static_cast<int>(qubit_order.size());
  std::map<int, int> index;
  for (int i = 0; i < n; ++i) index[qubit_order[i]] = i;
  StabilizerTableau t(n);
  for (int i = 0; i < n; ++i) {
    // Stabilizer K_v = X_v prod_{w in N(v)} Z_w; destabilizer Z_v.
    PauliRow stab = PauliRow::single(n, i, {PauliAxis::X, +1});
    for (int w : graph.adj.at(qubit_order[i])) stab.set_z(index.at(w), true);
    t.stab_[i] = stab;
    t.destab_[i] = PauliRow::single(n, i, {PauliAxis::Z, +1});
  }
  return t;
}

void StabilizerTableau::apply_h(int q) {
  for (auto* rows : {&destab_, &stab_}) {
    for (PauliRow& r : *rows) {
      bool xb = r.get_x(q), zb = r.get_z(q);
      if (xb && zb) r.phase = (r.phase + 2) % 4;  // H(XZ)H = ZX = -XZ
      r.set_x(q, zb);
      r.set_z(q, xb);
    }
  }
}

void StabilizerTableau::apply_s(int q) {
  for (auto* rows : {&destab_, &stab_}) {
    for (PauliRow& r : *rows) {
      if (r.get_x(q)) {
        r.phase = (r.phase + 1) % 4;  // S X S^dag = i XZ
        r.set_z(q, !r.get_z(q));
      }
    }
  }
}

void StabilizerTableau::apply_cnot(int control, int target) {
  // In the explicit i^r X^x Z^z convention the CNOT image products reorder
  // without same-qubit ZX swaps, so no phase correction arises.
  for (auto* rows : {&destab_, &stab_}) {
    for (PauliRow& r : *rows) {
      bool xc = r.get_x(control);
      bool zt = r.get_z(target);
      r.set_x(target, r.get_x(target) ^ xc);
      r.set_z(control, r.get_z(control) ^ zt);
    }
  }
}

void StabilizerTableau::apply_cz(int a, int b) {
  apply_h(b);
  apply_cnot(a, b);
  apply_h(b);
}

void StabilizerTableau::apply_clifford(int q, const LocalClifford& c) {
  for (char g : c.word()) {
    if (g == 'H') apply_h(q);
    else apply_s(q);
  }
}

MeasureResult StabilizerTableau::measure(const PauliRow& m, std::optional<int> forced,
                                         std::uint64_t rng_word) {
  require_internal((m.phase + [&] {
                     int y = 0;
                     for (int q = 0; q < n_; ++q)
                       if (m.get_x(q) && m.get_z(q)) ++y;
                     return y;
                   }()) % 2 == 0,
                   "tableau: measured operator is not Hermitian");
  int pivot = -1;
  for (int i = 0; i < n_; ++i)
    if (!stab_[i].commutes_with(m)) {
      pivot = i;
      break;
    }
  MeasureResult res;
  if (pivot >= 0) {
    // Random outcome: update all other anticommuting rows, rotate the pivot.
    for (int i = 0; i < n_; ++i) {
      if (i != pivot && !stab_[i].commutes_with(m)) stab_[i].multiply_left(stab_[pivot]);
      if (!destab_[i].commutes_with(m)) destab_[i].multiply_left(stab_[pivot]);
    }
    destab_[pivot] = stab_[pivot];
    res.outcome = forced ? *forced : rng::pm1(rng_word);
    res.deterministic = false;
    PauliRow row = m;
    if (res.outcome == -1) row.phase = (row.phase + 2) % 4;
    stab_[pivot] = row;
    return res;
  }
  // Deterministic: accumulate the stabilizer combination equal to +/- M.
  PauliRow scratch = PauliRow::identity(n_);
  for (int i = 0; i < n_; ++i)
    if (!destab_[i].commutes_with(m)) scratch.multiply_left(stab_[i]);
  require_internal(scratch.same_pauli(m), "tableau: deterministic measurement mismatch");
  int diff = (scratch.phase - m.phase + 4) % 4;
  require_internal(diff == 0 || diff == 2, "tableau: non-real phase difference");
  res.outcome = diff == 0 ? +1 : -1;
  res.deterministic = true;
  if (forced && *forced != res.outcome)
    throw InternalError("tableau: forced outcome contradicts a deterministic result");
  return res;
}

MeasureResult StabilizerTableau::measure_basis(PauliAxis basis, int qubit,
                                               std::optional<int> forced,
                                               std::uint64_t rng_word) {
  return measure(PauliRow::single(n_, qubit, {basis, +1}), forced, rng_word);
}

std::vector<PauliRow> StabilizerTableau::stabilizer_rows() const { return stab_; }

std::string StabilizerTableau::to_string() const {
  std::ostringstream os;
  for (const PauliRow& r : stab_) os << r.to_string() << '\n';
  return os.str();
}

void apply_clifford_to_row(PauliRow& row, int q, const LocalClifford& c) {
  for (char g : c.word()) {
    if (g == 'H') {
      bool xb = row.get_x(q), zb = row.get_z(q);
      if (xb && zb) row.phase = (row.phase + 2) % 4;
      row.set_x(q, zb);
      row.set_z(q, xb);
    } else {
      if (row.get_x(q)) {
        row.phase = (row.phase + 1) % 4;
        row.set_z(q, !row.get_z(q));
      }
    }
  }
}

std::vector<PauliRow> canonical_generators(std::vector<PauliRow> gens) {
  if (gens.empty()) return gens;
  const int n = gens.front().n;
  size_t row = 0;
  auto eliminate = [&](auto get_bit) {
    for (int q = 0; q < n; ++q) {
      size_t pivot = row;
      while (pivot < gens.size() && !get_bit(gens[pivot], q)) ++pivot;
      if (pivot == gens.size()) continue;
      std::swap(gens[row], gens[pivot]);
      for (size_t i = 0; i < gens.size(); ++i)
        if (i != row && get_bit(gens[i], q)) gens[i].multiply_left(gens[row]);
      ++row;
    }
  };
  eliminate([](const PauliRow& r, int q) { return r.get_x(q); });
  eliminate([](const PauliRow& r, int q) { return r.get_z(q); });
  require_internal(row == gens.size(), "canonical_generators: dependent generator set");
  return gens;
}

bool stabilizer_groups_equal(std::vector<PauliRow> a, std::vector<PauliRow> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  if (a.front().n != b.front().n) return false;
  return canonical_generators(std::move(a)) == canonical_generators(std::move(b));
}

}  // namespace hexforge
