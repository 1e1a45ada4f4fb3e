#include "qclique/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qclique/util.hpp"

namespace qclique {

namespace {

// Iterates every basis index with (index & fixed_mask) == fixed_value.
// The free bits split into a contiguous low run (tight inner loop) and the
// remaining high positions (deposited per outer step). Each index is
// visited exactly once and f writes only to amplitudes at the indices it
// is handed, so the result is independent of iteration order and thread
// count.
template <typename F>
void for_each_matching(int qubit_count, std::uint64_t fixed_mask, std::uint64_t fixed_value,
                       F&& f) {
  int low_run = 0;
  while (low_run < qubit_count && !((fixed_mask >> low_run) & 1ULL)) ++low_run;
  const std::int64_t inner = 1LL << low_run;
  int high_free[64];
  int num_high = 0;
  for (int q = low_run; q < qubit_count; ++q) {
    if (!((fixed_mask >> q) & 1ULL)) high_free[num_high++] = q;
  }
  const std::int64_t outer = 1LL << num_high;

  if (outer >= 16) {
#pragma omp parallel for schedule(static)
    for (std::int64_t ro = 0; ro < outer; ++ro) {
      std::uint64_t base = fixed_value;
      std::uint64_t r = static_cast<std::uint64_t>(ro);
      for (int i = 0; i < num_high; ++i) {
        base |= (r & 1ULL) << high_free[i];
        r >>= 1;
      }
      for (std::int64_t rl = 0; rl < inner; ++rl) f(base | static_cast<std::uint64_t>(rl));
    }
  } else {
    for (std::int64_t ro = 0; ro < outer; ++ro) {
      std::uint64_t base = fixed_value;
      std::uint64_t r = static_cast<std::uint64_t>(ro);
      for (int i = 0; i < num_high; ++i) {
        base |= (r & 1ULL) << high_free[i];
        r >>= 1;
      }
#pragma omp parallel for schedule(static)
      for (std::int64_t rl = 0; rl < inner; ++rl) f(base | static_cast<std::uint64_t>(rl));
    }
  }
}

struct GatePattern {
  std::uint64_t fixed_mask = 0;
  std::uint64_t fixed_value = 0;
};

GatePattern control_pattern(const Gate& g, int qubit_count) {
  GatePattern p;
  for (const Control& c : g.controls) {
    if (c.qubit < 0 || c.qubit >= qubit_count) {
      throw std::invalid_argument("gate control qubit out of range");
    }
    p.fixed_mask |= 1ULL << c.qubit;
    if (!c.inverted) p.fixed_value |= 1ULL << c.qubit;
  }
  return p;
}

int checked_target(const Gate& g, int qubit_count) {
  if (g.targets.size() != 1 || g.targets[0] < 0 || g.targets[0] >= qubit_count) {
    throw std::invalid_argument("gate target qubit out of range");
  }
  return g.targets[0];
}

}  // namespace

template <typename Scalar>
BasicStatevector<Scalar>::BasicStatevector(int qubit_count) : qubit_count_(qubit_count) {
  amps_.assign(1ULL << qubit_count, std::complex<Scalar>(0));
  amps_[0] = std::complex<Scalar>(1);
}

template <typename Scalar>
double BasicStatevector<Scalar>::norm_sq() const {
  double total = 0;
  for (const auto& a : amps_) total += static_cast<double>(std::norm(a));
  return total;
}

std::vector<std::pair<std::uint64_t, long long>> MeasurementHistogram::top(int window) const {
  std::vector<std::pair<std::uint64_t, long long>> items(counts.begin(), counts.end());
  std::sort(items.begin(), items.end(), [](const auto& l, const auto& r) {
    if (l.second != r.second) return l.second > r.second;
    return l.first < r.first;
  });
  if (static_cast<int>(items.size()) > window) items.resize(static_cast<size_t>(window));
  return items;
}

int max_qubits() {
  if (const char* env = std::getenv("QCLIQUE_MAX_QUBITS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 26;
}

namespace {

void check_width(int qubit_count, size_t amp_bytes) {
  int cap = max_qubits();
  if (qubit_count < 1 || qubit_count > cap) {
    double gib = static_cast<double>(amp_bytes) * std::ldexp(1.0, qubit_count) /
                 (1024.0 * 1024.0 * 1024.0);
    std::ostringstream os;
    os << "state of " << qubit_count << " qubits needs " << gib
       << " GiB of amplitudes; allowed range is 1.." << cap
       << " (override with QCLIQUE_MAX_QUBITS)";
    throw ResourceError(os.str());
  }
}

}  // namespace

Statevector zero_state(int qubit_count) {
  check_width(qubit_count, sizeof(std::complex<double>));
  return Statevector(qubit_count);
}

StatevectorF zero_state_single(int qubit_count) {
  check_width(qubit_count, sizeof(std::complex<float>));
  return StatevectorF(qubit_count);
}

Statevector basis_state(int qubit_count, std::uint64_t index) {
  Statevector s = zero_state(qubit_count);
  if (index >= s.dimension()) throw std::invalid_argument("basis index out of range");
  s.amplitudes()[0] = 0;
  s.amplitudes()[index] = 1;
  return s;
}

template <typename Scalar>
void apply_gate_inplace(BasicStatevector<Scalar>& s, const Gate& g) {
  const int q = s.qubit_count();
  auto* amp = s.amplitudes().data();
  switch (g.kind) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX: {
      const int t = checked_target(g, q);
      GatePattern p = control_pattern(g, q);
      p.fixed_mask |= 1ULL << t;
      const std::uint64_t tbit = 1ULL << t;
      for_each_matching(q, p.fixed_mask, p.fixed_value,
                        [&](std::uint64_t i) { std::swap(amp[i], amp[i | tbit]); });
      break;
    }
    case GateKind::H:
    case GateKind::CH: {
      const int t = checked_target(g, q);
      GatePattern p = control_pattern(g, q);
      p.fixed_mask |= 1ULL << t;
      const std::uint64_t tbit = 1ULL << t;
      const Scalar inv_sqrt2 = static_cast<Scalar>(0.70710678118654752440L);
      for_each_matching(q, p.fixed_mask, p.fixed_value, [&](std::uint64_t i) {
        const auto a0 = amp[i];
        const auto a1 = amp[i | tbit];
        amp[i] = (a0 + a1) * inv_sqrt2;
        amp[i | tbit] = (a0 - a1) * inv_sqrt2;
      });
      break;
    }
    case GateKind::RY: {
      const int t = checked_target(g, q);
      GatePattern p = control_pattern(g, q);
      p.fixed_mask |= 1ULL << t;
      const std::uint64_t tbit = 1ULL << t;
      const Scalar c = static_cast<Scalar>(std::cos(g.angle / 2));
      const Scalar sn = static_cast<Scalar>(std::sin(g.angle / 2));
      for_each_matching(q, p.fixed_mask, p.fixed_value, [&](std::uint64_t i) {
        const auto a0 = amp[i];
        const auto a1 = amp[i | tbit];
        amp[i] = c * a0 - sn * a1;
        amp[i | tbit] = sn * a0 + c * a1;
      });
      break;
    }
    case GateKind::CZ:
    case GateKind::MCZ: {
      const int t = checked_target(g, q);
      GatePattern p = control_pattern(g, q);
      p.fixed_mask |= 1ULL << t;
      p.fixed_value |= 1ULL << t;
      for_each_matching(q, p.fixed_mask, p.fixed_value, [&](std::uint64_t i) { amp[i] = -amp[i]; });
      break;
    }
    case GateKind::DiagonalMark: {
      if (!g.mark) throw std::invalid_argument("diagonal mark without spec");
      const DiagonalMarkSpec& m = *g.mark;
      if (m.offset < 0 || m.offset + m.size > q) {
        throw std::invalid_argument("diagonal mark register out of range");
      }
      const std::uint64_t mask = ((1ULL << m.size) - 1ULL) << m.offset;
      for (std::uint64_t v : m.marked_values) {
        for_each_matching(q, mask, v << m.offset, [&](std::uint64_t i) { amp[i] = -amp[i]; });
      }
      break;
    }
  }
}

template <typename Scalar>
void run_inplace(const Circuit& c, BasicStatevector<Scalar>& s) {
  if (c.qubit_count() != s.qubit_count()) {
    throw std::invalid_argument("circuit width " + std::to_string(c.qubit_count()) +
                                " does not match state width " + std::to_string(s.qubit_count()));
  }
  for (const auto& layer : c.layers()) {
    for (const Gate& g : layer) apply_gate_inplace(s, g);
  }
}

Statevector apply_gate(Statevector s, const Gate& g) {
  apply_gate_inplace(s, g);
  return s;
}

Statevector run(const Circuit& c, Statevector s) {
  run_inplace(c, s);
  return s;
}

std::complex<double> inner_product(const Statevector& a, const Statevector& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw std::invalid_argument("inner product width mismatch");
  }
  std::complex<double> total = 0;
  const auto& va = a.amplitudes();
  const auto& vb = b.amplitudes();
  for (std::uint64_t i = 0; i < a.dimension(); ++i) total += std::conj(va[i]) * vb[i];
  return total;
}

std::vector<double> marginal_probabilities(const Statevector& s, const Register& reg) {
  if (reg.offset < 0 || reg.size < 1 || reg.offset + reg.size > s.qubit_count()) {
    throw std::invalid_argument("register " + reg.name + " outside state");
  }
  std::vector<double> probs(1ULL << reg.size, 0.0);
  const auto& amps = s.amplitudes();
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    probs[reg.extract(i)] += std::norm(amps[i]);
  }
  return probs;
}

MeasurementHistogram sample_register(const Statevector& s, const Register& reg, long long shots,
                                     std::uint64_t seed) {
  std::vector<double> probs = marginal_probabilities(s, reg);
  std::vector<double> cdf(probs.size());
  double acc = 0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  std::mt19937_64 rng(seed);
  MeasurementHistogram hist;
  hist.register_name = reg.name;
  hist.register_size = reg.size;
  hist.shots = shots;
  for (long long shot = 0; shot < shots; ++shot) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    auto outcome = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
        it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
    ++hist.counts[outcome];
  }
  return hist;
}

double residual_mass(const Statevector& s, const Register& reg, std::uint64_t value) {
  if (reg.offset < 0 || reg.size < 1 || reg.offset + reg.size > s.qubit_count()) {
    throw std::invalid_argument("register " + reg.name + " outside state");
  }
  double mass = 0;
  const auto& amps = s.amplitudes();
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    if (reg.extract(i) != value) mass += std::norm(amps[i]);
  }
  return mass;
}

template class BasicStatevector<double>;
template class BasicStatevector<float>;
template void apply_gate_inplace<double>(BasicStatevector<double>&, const Gate&);
template void apply_gate_inplace<float>(BasicStatevector<float>&, const Gate&);
template void run_inplace<double>(const Circuit&, BasicStatevector<double>&);
template void run_inplace<float>(const Circuit&, BasicStatevector<float>&);

}  // namespace qclique
