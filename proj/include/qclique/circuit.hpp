#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qclique {

enum class GateKind {
  X,
  H,
  CH,
  CX,
  CZ,
  CCX,
  MCX,
  MCZ,
  RY,
  DiagonalMark,
};

const char* gate_kind_name(GateKind k);

struct Control {
  int qubit;
  bool inverted;  // inverted controls trigger on |0>
  friend bool operator==(const Control&, const Control&) = default;
};

// Phase predicate over the basis states of one register: amplitudes whose
// register value is in marked_values (sorted) pick up a -1. Not a physical
// gate; depth accounting flags circuits containing one.
struct DiagonalMarkSpec {
  std::string register_name;
  std::string predicate_id;
  int offset = 0;
  int size = 0;
  std::vector<std::uint64_t> marked_values;
};

struct Gate {
  GateKind kind;
  std::vector<int> targets;
  std::vector<Control> controls;
  double angle = 0.0;  // RY only: rotation angle theta
  std::shared_ptr<const DiagonalMarkSpec> mark;  // DiagonalMark only

  static Gate x(int t) { return {GateKind::X, {t}, {}}; }
  static Gate h(int t) { return {GateKind::H, {t}, {}}; }
  static Gate ch(int c, int t) { return {GateKind::CH, {t}, {{c, false}}}; }
  static Gate cx(int c, int t) { return {GateKind::CX, {t}, {{c, false}}}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, {b}, {{a, false}}}; }
  static Gate ccx(int c1, int c2, int t, bool inv1 = false, bool inv2 = false) {
    return {GateKind::CCX, {t}, {{c1, inv1}, {c2, inv2}}};
  }
  static Gate mcx(std::vector<Control> cs, int t) { return {GateKind::MCX, {t}, std::move(cs)}; }
  static Gate mcz(std::vector<Control> cs, int t) { return {GateKind::MCZ, {t}, std::move(cs)}; }
  static Gate ry(double theta, int t) { return {GateKind::RY, {t}, {}, theta}; }
  static Gate cry(double theta, int c, int t) { return {GateKind::RY, {t}, {{c, false}}, theta}; }
  static Gate ccry(double theta, int c1, int c2, int t) {
    return {GateKind::RY, {t}, {{c1, false}, {c2, false}}, theta};
  }
  static Gate diagonal_mark(std::shared_ptr<const DiagonalMarkSpec> spec) {
    return {GateKind::DiagonalMark, {}, {}, 0.0, std::move(spec)};
  }

  // Every qubit the gate touches (targets, controls, marked register).
  std::vector<int> qubits() const;
  bool equals(const Gate& other) const;
};

// Named contiguous qubit range; qubit `offset` is the register's least
// significant bit.
struct Register {
  std::string name;
  int offset = 0;
  int size = 0;

  std::uint64_t mask() const { return ((1ULL << size) - 1ULL) << offset; }
  std::uint64_t extract(std::uint64_t basis_index) const {
    return (basis_index >> offset) & ((1ULL << size) - 1ULL);
  }
  friend bool operator==(const Register&, const Register&) = default;
};

// Gate-level circuit: ordered layers over qubit_count qubits. Gates within
// one layer must touch disjoint qubits. Layer assignment is decided by the
// builder; composition never re-packs. Immutable in practice: builders
// construct, everything downstream only reads.
class Circuit {
 public:
  Circuit() = default;
  Circuit(int qubit_count, std::vector<Register> registers);

  int qubit_count() const { return qubit_count_; }
  const std::vector<Register>& registers() const { return registers_; }
  const std::vector<std::vector<Gate>>& layers() const { return layers_; }
  int layer_count() const { return static_cast<int>(layers_.size()); }
  std::int64_t gate_count() const;

  const Register* find_register(const std::string& name) const;
  const Register& register_named(const std::string& name) const;

  void append_layer(std::vector<Gate> gates);
  // Appends into the earliest layer at or after `from_layer` whose qubits
  // do not collide; used by builders that pack greedily.
  void append_packed(const Gate& gate);

 private:
  int qubit_count_ = 0;
  std::vector<Register> registers_;
  std::vector<std::vector<Gate>> layers_;
  std::vector<int> qubit_last_layer_;  // greedy packing state
};

struct DepthReport {
  int layer_count = 0;
  std::int64_t weighted_depth = 0;
  std::map<GateKind, std::int64_t> gate_counts;
  bool contains_nonphysical = false;  // true when any diagonal-mark present
};

// nullopt when the circuit is well formed; otherwise a description naming
// the first offending layer/gate.
std::optional<std::string> validate(const Circuit& c);

// Layer count plus a weighted depth under the cost model: gates with a
// dedicated small kind (X/H/CH/CX/CZ/CCX, RY with <= 2 controls) cost 1 per
// layer; MCX/MCZ over c controls cost max(1, c), modeling a chained linear
// decomposition. Diagonal marks cost 0 and set contains_nonphysical.
DepthReport depth(const Circuit& c);

// Reversed layer order with per-gate inverses (RY negates its angle; every
// other kind is self-inverse). Running c then adjoint(c) is the identity.
Circuit adjoint(const Circuit& c);

// Layers of a followed by layers of b. Requires equal widths and identical
// register maps.
Circuit compose(const Circuit& a, const Circuit& b);

// The same gate sequence embedded at `offset` into a wider circuit with a
// replacement register map.
Circuit shifted(const Circuit& c, int new_qubit_count, int offset,
                std::vector<Register> new_registers);

bool structurally_equal(const Circuit& a, const Circuit& b);

// Stable text form, one gate per line:
//   <layer> <kind> [angle=<theta>] [controls: +q / -q] -> <targets>
// with header lines for width and registers. Diagonal marks list their
// register, predicate id and marked values in hex.
std::string dump(const Circuit& c);

}  // namespace qclique
