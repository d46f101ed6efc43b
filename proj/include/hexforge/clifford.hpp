#pragma once

#include <cstdint>
#include <string>

namespace hexforge {

enum class PauliAxis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline char axis_char(PauliAxis a) { return a == PauliAxis::X ? 'X' : a == PauliAxis::Y ? 'Y' : 'Z'; }

struct SignedPauli {
  PauliAxis axis = PauliAxis::X;
  int sign = +1;
  bool operator==(const SignedPauli&) const = default;
};

// One of the 24 single-qubit Cliffords, identified by its conjugation action
// on X and Z. Composition, inversion and the action table are generated once
// from the H and S generators; word() gives an H/S gate sequence realizing
// the element (applied left to right to the state).
class LocalClifford {
 public:
  LocalClifford() : id_(0) {}

  static LocalClifford identity();
  static LocalClifford pauli_x();
  static LocalClifford pauli_y();
  static LocalClifford pauli_z();
  static LocalClifford hadamard();
  static LocalClifford phase_s();      // diag(1, i): X -> Y, Z -> Z
  static LocalClifford phase_s_dag();
  static LocalClifford from_word(const std::string& word);  // letters 'H' and 'S'

  SignedPauli image(PauliAxis p) const;       // U P U^dag
  LocalClifford compose(LocalClifford inner) const;  // this after inner
  LocalClifford inverse() const;
  const std::string& word() const;
  int id() const { return id_; }
  std::string name() const;

  bool operator==(const LocalClifford&) const = default;

 private:
  explicit LocalClifford(std::uint8_t id) : id_(id) {}
  std::uint8_t id_;
};

// Product of two signed single-qubit Paulis, i^t * axis form; distinct axes
// only (result of multiplying anticommuting Paulis is +/- i times the third).
SignedPauli pauli_product_i(SignedPauli a, SignedPauli b, int* i_power);

}  // namespace hexforge
