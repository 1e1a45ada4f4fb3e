#include "qclique/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qclique {

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::CH: return "CH";
    case GateKind::CX: return "CX";
    case GateKind::CZ: return "CZ";
    case GateKind::CCX: return "CCX";
    case GateKind::MCX: return "MCX";
    case GateKind::MCZ: return "MCZ";
    case GateKind::RY: return "RY";
    case GateKind::DiagonalMark: return "DIAGMARK";
  }
  return "?";
}

std::vector<int> Gate::qubits() const {
  std::vector<int> q = targets;
  for (const Control& c : controls) q.push_back(c.qubit);
  if (kind == GateKind::DiagonalMark && mark) {
    for (int i = 0; i < mark->size; ++i) q.push_back(mark->offset + i);
  }
  return q;
}

bool Gate::equals(const Gate& other) const {
  if (kind != other.kind || targets != other.targets || controls != other.controls) return false;
  if (kind == GateKind::RY && angle != other.angle) return false;
  if (kind == GateKind::DiagonalMark) {
    if (!mark || !other.mark) return mark == other.mark;
    return mark->register_name == other.mark->register_name &&
           mark->offset == other.mark->offset && mark->size == other.mark->size &&
           mark->marked_values == other.mark->marked_values;
  }
  return true;
}

Circuit::Circuit(int qubit_count, std::vector<Register> registers)
    : qubit_count_(qubit_count),
      registers_(std::move(registers)),
      qubit_last_layer_(static_cast<size_t>(qubit_count), -1) {
  if (qubit_count < 0) throw std::invalid_argument("negative qubit count");
}

std::int64_t Circuit::gate_count() const {
  std::int64_t n = 0;
  for (const auto& layer : layers_) n += static_cast<std::int64_t>(layer.size());
  return n;
}

const Register* Circuit::find_register(const std::string& name) const {
  for (const Register& r : registers_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const Register& Circuit::register_named(const std::string& name) const {
  const Register* r = find_register(name);
  if (!r) throw std::invalid_argument("no register named " + name);
  return *r;
}

void Circuit::append_layer(std::vector<Gate> gates) {
  for (const Gate& g : gates) {
    for (int q : g.qubits()) {
      if (q >= 0 && q < qubit_count_) {
        qubit_last_layer_[static_cast<size_t>(q)] = static_cast<int>(layers_.size());
      }
    }
  }
  layers_.push_back(std::move(gates));
}

void Circuit::append_packed(const Gate& gate) {
  int earliest = 0;
  for (int q : gate.qubits()) {
    if (q >= 0 && q < qubit_count_) {
      earliest = std::max(earliest, qubit_last_layer_[static_cast<size_t>(q)] + 1);
    }
  }
  if (earliest >= static_cast<int>(layers_.size())) layers_.resize(static_cast<size_t>(earliest) + 1);
  layers_[static_cast<size_t>(earliest)].push_back(gate);
  for (int q : gate.qubits()) {
    if (q >= 0 && q < qubit_count_) qubit_last_layer_[static_cast<size_t>(q)] = earliest;
  }
}

namespace {

std::optional<std::string> check_gate(const Gate& g, int qubit_count, int layer_idx) {
  auto fail = [&](const std::string& msg) {
    return "layer " + std::to_string(layer_idx) + ": " + gate_kind_name(g.kind) + " " + msg;
  };
  size_t nt = g.targets.size();
  size_t nc = g.controls.size();
  switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
      if (nt != 1 || nc != 0) return fail("expects 1 target, 0 controls");
      break;
    case GateKind::CH:
    case GateKind::CX:
    case GateKind::CZ:
      if (nt != 1 || nc != 1) return fail("expects 1 target, 1 control");
      break;
    case GateKind::CCX:
      if (nt != 1 || nc != 2) return fail("expects 1 target, 2 controls");
      break;
    case GateKind::MCX:
    case GateKind::MCZ:
      if (nt != 1 || nc < 1) return fail("expects 1 target, >= 1 controls");
      break;
    case GateKind::RY:
      if (nt != 1 || nc > 2) return fail("expects 1 target, <= 2 controls");
      break;
    case GateKind::DiagonalMark:
      if (nt != 0 || nc != 0) return fail("carries no explicit targets/controls");
      if (!g.mark || g.mark->size <= 0) return fail("missing mark spec");
      if (g.mark->offset < 0 || g.mark->offset + g.mark->size > qubit_count) {
        return fail("mark register out of range");
      }
      for (std::uint64_t v : g.mark->marked_values) {
        if (g.mark->size < 64 && v >> g.mark->size) return fail("marked value exceeds register");
      }
      return std::nullopt;
  }
  std::vector<int> qs = g.qubits();
  for (int q : qs) {
    if (q < 0 || q >= qubit_count) return fail("qubit " + std::to_string(q) + " out of range");
  }
  std::sort(qs.begin(), qs.end());
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
    return fail("repeats a qubit across targets/controls");
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate(const Circuit& c) {
  std::vector<int> reg_owner(static_cast<size_t>(c.qubit_count()), -1);
  for (size_t r = 0; r < c.registers().size(); ++r) {
    const Register& reg = c.registers()[r];
    if (reg.size < 0 || reg.offset < 0 || reg.offset + reg.size > c.qubit_count()) {
      return "register " + reg.name + " out of range";
    }
    for (int q = reg.offset; q < reg.offset + reg.size; ++q) {
      if (reg_owner[static_cast<size_t>(q)] != -1) {
        return "register " + reg.name + " overlaps another register at qubit " + std::to_string(q);
      }
      reg_owner[static_cast<size_t>(q)] = static_cast<int>(r);
    }
  }
  for (int li = 0; li < c.layer_count(); ++li) {
    std::vector<bool> used(static_cast<size_t>(c.qubit_count()), false);
    for (const Gate& g : c.layers()[static_cast<size_t>(li)]) {
      if (auto err = check_gate(g, c.qubit_count(), li)) return err;
      for (int q : g.qubits()) {
        if (used[static_cast<size_t>(q)]) {
          return "layer " + std::to_string(li) + ": qubit " + std::to_string(q) +
                 " touched by two gates";
        }
        used[static_cast<size_t>(q)] = true;
      }
    }
  }
  return std::nullopt;
}

DepthReport depth(const Circuit& c) {
  if (auto err = validate(c)) throw std::invalid_argument("invalid circuit: " + *err);
  DepthReport rep;
  rep.layer_count = c.layer_count();
  for (const auto& layer : c.layers()) {
    std::int64_t layer_cost = 0;
    for (const Gate& g : layer) {
      ++rep.gate_counts[g.kind];
      std::int64_t cost = 1;
      if (g.kind == GateKind::MCX || g.kind == GateKind::MCZ) {
        cost = std::max<std::int64_t>(1, static_cast<std::int64_t>(g.controls.size()));
      } else if (g.kind == GateKind::DiagonalMark) {
        rep.contains_nonphysical = true;
        cost = 0;
      }
      layer_cost = std::max(layer_cost, cost);
    }
    rep.weighted_depth += layer_cost;
  }
  return rep;
}

Circuit adjoint(const Circuit& c) {
  Circuit out(c.qubit_count(), c.registers());
  for (auto it = c.layers().rbegin(); it != c.layers().rend(); ++it) {
    std::vector<Gate> layer = *it;
    for (Gate& g : layer) {
      if (g.kind == GateKind::RY) g.angle = -g.angle;
    }
    out.append_layer(std::move(layer));
  }
  return out;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw std::invalid_argument("compose: width mismatch (" + std::to_string(a.qubit_count()) +
                                " vs " + std::to_string(b.qubit_count()) + ")");
  }
  if (!(a.registers() == b.registers())) {
    throw std::invalid_argument("compose: register maps differ");
  }
  Circuit out(a.qubit_count(), a.registers());
  for (const auto& layer : a.layers()) out.append_layer(layer);
  for (const auto& layer : b.layers()) out.append_layer(layer);
  return out;
}

Circuit shifted(const Circuit& c, int new_qubit_count, int offset,
                std::vector<Register> new_registers) {
  if (offset < 0 || c.qubit_count() + offset > new_qubit_count) {
    throw std::invalid_argument("shifted: circuit does not fit at offset");
  }
  Circuit out(new_qubit_count, std::move(new_registers));
  for (const auto& layer : c.layers()) {
    std::vector<Gate> moved = layer;
    for (Gate& g : moved) {
      for (int& t : g.targets) t += offset;
      for (Control& ctl : g.controls) ctl.qubit += offset;
      if (g.kind == GateKind::DiagonalMark && g.mark) {
        auto spec = std::make_shared<DiagonalMarkSpec>(*g.mark);
        spec->offset += offset;
        g.mark = std::move(spec);
      }
    }
    out.append_layer(std::move(moved));
  }
  return out;
}

bool structurally_equal(const Circuit& a, const Circuit& b) {
  if (a.qubit_count() != b.qubit_count() || !(a.registers() == b.registers()) ||
      a.layer_count() != b.layer_count()) {
    return false;
  }
  for (int li = 0; li < a.layer_count(); ++li) {
    const auto& la = a.layers()[static_cast<size_t>(li)];
    const auto& lb = b.layers()[static_cast<size_t>(li)];
    if (la.size() != lb.size()) return false;
    for (size_t i = 0; i < la.size(); ++i) {
      if (!la[i].equals(lb[i])) return false;
    }
  }
  return true;
}

std::string dump(const Circuit& c) {
  std::ostringstream os;
  os << "# qubits " << c.qubit_count() << "\n";
  for (const Register& r : c.registers()) {
    os << "# register " << r.name << " offset " << r.offset << " size " << r.size << "\n";
  }
  for (int li = 0; li < c.layer_count(); ++li) {
    for (const Gate& g : c.layers()[static_cast<size_t>(li)]) {
      os << li << " " << gate_kind_name(g.kind);
      if (g.kind == GateKind::RY) os << " angle=" << g.angle;
      if (g.kind == GateKind::DiagonalMark) {
        os << " reg=" << g.mark->register_name << " id=" << g.mark->predicate_id << " values=";
        for (size_t i = 0; i < g.mark->marked_values.size(); ++i) {
          os << (i ? "," : "") << std::hex << "0x" << g.mark->marked_values[i] << std::dec;
        }
        os << "\n";
        continue;
      }
      for (const Control& ctl : g.controls) os << " " << (ctl.inverted ? '-' : '+') << ctl.qubit;
      os << " ->";
      for (int t : g.targets) os << " " << t;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace qclique
