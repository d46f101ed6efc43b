#include "hexforge/clifford.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace hexforge {
namespace {

struct Action {
  SignedPauli img_x;
  SignedPauli img_z;
  bool operator<(const Action& o) const {
    auto key = [](const Action& a) {
      return std::array<int, 4>{static_cast<int>(a.img_x.axis), a.img_x.sign,
                                static_cast<int>(a.img_z.axis), a.img_z.sign};
    };
    return key(*this) < key(o);
  }
};

// Single-qubit Pauli multiplication: a * b = i^t * axis (a != b assumed when
// axes differ; equal axes give identity handled by callers).
int product_table(PauliAxis a, PauliAxis b, PauliAxis* out) {
  // XY=iZ, YZ=iX, ZX=iY; reversed order gives -i.
  int ia = static_cast<int>(a), ib = static_cast<int>(b);
  *out = static_cast<PauliAxis>(3 - ia - ib);
  if ((ia + 1) % 3 == ib) return 1;   // cyclic: +i
  return 3;                            // anti-cyclic: -i  (i^3)
}

SignedPauli apply_action(const Action& act, SignedPauli p, int* extra_i) {
  *extra_i = 0;
  if (p.axis == PauliAxis::X) return {act.img_x.axis, act.img_x.sign * p.sign};
  if (p.axis == PauliAxis::Z) return {act.img_z.axis, act.img_z.sign * p.sign};
  // Y = i X Z, so U Y U^dag = i * (U X U^dag)(U Z U^dag).
  PauliAxis axis;
  int t = product_table(act.img_x.axis, act.img_z.axis, &axis);
  // i^(1+t) must be real for a valid Clifford action.
  int ip = (1 + t) % 4;
  if (ip % 2 != 0) throw std::logic_error("clifford: degenerate action");
  int sign = (ip == 2 ? -1 : 1) * act.img_x.sign * act.img_z.sign * p.sign;
  return {axis, sign};
}

struct Tables {
  std::vector<Action> actions;          // 24 entries
  std::vector<std::string> words;
  std::map<Action, std::uint8_t> index;
  std::array<std::array<std::uint8_t, 24>, 24> compose;
  std::array<std::uint8_t, 24> inverse;
  std::uint8_t id_I, id_X, id_Y, id_Z, id_H, id_S, id_Sdg;
};

Action compose_actions(const Action& outer, const Action& inner) {
  int dummy;
  Action out;
  out.img_x = apply_action(outer, inner.img_x, &dummy);
  out.img_z = apply_action(outer, inner.img_z, &dummy);
  return out;
}

const Tables& tables() {
  static const Tables t = [] {
    Tables tb;
    Action identity{{PauliAxis::X, +1}, {PauliAxis::Z, +1}};
    Action h{{PauliAxis::Z, +1}, {PauliAxis::X, +1}};
    Action s{{PauliAxis::Y, +1}, {PauliAxis::Z, +1}};

    auto intern = [&](const Action& a, const std::string& word) {
      if (tb.index.count(a)) return;
      tb.index[a] = static_cast<std::uint8_t>(tb.actions.size());
      tb.actions.push_back(a);
      tb.words.push_back(word);
    };
    intern(identity, "");
    // BFS closure under left-composition with the generators.
    for (size_t head = 0; head < tb.actions.size(); ++head) {
      Action cur = tb.actions[head];
      std::string word = tb.words[head];
      intern(compose_actions(h, cur), word + "H");
      intern(compose_actions(s, cur), word + "S");
    }
    if (tb.actions.size() != 24) throw std::logic_error("clifford: closure size != 24");

    for (int a = 0; a < 24; ++a)
      for (int b = 0; b < 24; ++b)
        tb.compose[a][b] = tb.index.at(compose_actions(tb.actions[a], tb.actions[b]));
    for (int a = 0; a < 24; ++a) {
      for (int b = 0; b < 24; ++b)
        if (tb.compose[a][b] == tb.index.at(identity)) tb.inverse[a] = static_cast<std::uint8_t>(b);
    }
    tb.id_I = tb.index.at(identity);
    tb.id_H = tb.index.at(h);
    tb.id_S = tb.index.at(s);
    tb.id_X = tb.index.at(Action{{PauliAxis::X, +1}, {PauliAxis::Z, -1}});
    tb.id_Y = tb.index.at(Action{{PauliAxis::X, -1}, {PauliAxis::Z, -1}});
    tb.id_Z = tb.index.at(Action{{PauliAxis::X, -1}, {PauliAxis::Z, +1}});
    tb.id_Sdg = tb.inverse[tb.id_S];
    return tb;
  }();
  return t;
}

}  // namespace

LocalClifford LocalClifford::identity() { return LocalClifford(tables().id_I); }
LocalClifford LocalClifford::pauli_x() { return LocalClifford(tables().id_X); }
LocalClifford LocalClifford::pauli_y() { return LocalClifford(tables().id_Y); }
LocalClifford LocalClifford::pauli_z() { return LocalClifford(tables().id_Z); }
LocalClifford LocalClifford::hadamard() { return LocalClifford(tables().id_H); }
LocalClifford LocalClifford::phase_s() { return LocalClifford(tables().id_S); }
LocalClifford LocalClifford::phase_s_dag() { return LocalClifford(tables().id_Sdg); }

LocalClifford LocalClifford::from_word(const std::string& word) {
  LocalClifford out = identity();
  for (char c : word) {
    if (c == 'H') out = hadamard().compose(out);
    else if (c == 'S') out = phase_s().compose(out);
    else throw std::invalid_argument("LocalClifford::from_word: bad letter");
  }
  return out;
}

SignedPauli LocalClifford::image(PauliAxis p) const {
  int dummy;
  return apply_action(tables().actions[id_], {p, +1}, &dummy);
}

LocalClifford LocalClifford::compose(LocalClifford inner) const {
  return LocalClifford(tables().compose[id_][inner.id_]);
}

LocalClifford LocalClifford::inverse() const {
  return LocalClifford(tables().inverse[id_]);
}

const std::string& LocalClifford::word() const { return tables().words[id_]; }

std::string LocalClifford::name() const {
  const Tables& t = tables();
  if (id_ == t.id_I) return "I";
  if (id_ == t.id_X) return "X";
  if (id_ == t.id_Y) return "Y";
  if (id_ == t.id_Z) return "Z";
  if (id_ == t.id_H) return "H";
  if (id_ == t.id_S) return "S";
  if (id_ == t.id_Sdg) return "Sdg";
  return "C" + std::to_string(id_) + "[" + word() + "]";
}

SignedPauli pauli_product_i(SignedPauli a, SignedPauli b, int* i_power) {
  if (a.axis == b.axis) throw std::invalid_argument("pauli_product_i: equal axes");
  PauliAxis axis;
  *i_power = product_table(a.axis, b.axis, &axis);
  return {axis, a.sign * b.sign};
}

}  // namespace hexforge
