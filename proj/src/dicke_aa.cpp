#include "qclique/dicke_aa.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qclique {

SearchSpaceSpec make_search_space_spec(int n, int k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("clique size " + std::to_string(k) + " out of range for " +
                                std::to_string(n) + " nodes");
  }
  return SearchSpaceSpec{n, k, apex_count_for(k)};
}

namespace {

// Split/shift step: on the component whose trailing block of ones has
// length exactly l (detected by qubits a = m-l-1, b = m-l and the block
// end t = m-1), move amplitude sqrt((m-l)/m) onto the branch with the
// block shifted one position down and qubit t cleared. Components with
// longer or shorter blocks pass through unchanged.
void append_split_step(Circuit& c, int m, int l) {
  const int a = m - l - 1;
  const int b = m - l;
  const int t = m - 1;
  const double theta = -2.0 * std::acos(std::sqrt(static_cast<double>(l) / m));
  c.append_packed(Gate::cx(t, a));
  if (l == 1) {
    c.append_packed(Gate::cry(theta, a, t));
  } else {
    c.append_packed(Gate::ccry(theta, a, b, t));
  }
  c.append_packed(Gate::cx(t, a));
}

void append_dicke_gates(Circuit& c, int n, int k) {
  for (int q = n - k; q < n; ++q) c.append_packed(Gate::x(q));
  for (int m = n; m >= 2; --m) {
    for (int l = 1; l <= std::min(k, m - 1); ++l) append_split_step(c, m, l);
  }
}

}  // namespace

Circuit build_dicke_prep(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("Dicke state needs 1 <= k <= n, got k = " + std::to_string(k) +
                                ", n = " + std::to_string(n));
  }
  Circuit c(n, {{"idx", 0, n}});
  append_dicke_gates(c, n, k);
  return c;
}

Circuit build_search_prep(const SearchSpaceSpec& spec) {
  const int nq = spec.n_qubits();
  Circuit c(nq, {{"idx", 0, nq}});
  for (int apex = spec.n; apex < nq; ++apex) c.append_packed(Gate::x(apex));
  append_dicke_gates(c, spec.n, spec.k);
  return c;
}

Circuit build_s0(int qubit_count, const Register& reg, std::vector<Register> registers) {
  if (reg.size < 2 || reg.offset < 0 || reg.offset + reg.size > qubit_count) {
    throw std::invalid_argument("zero reflection needs a register of >= 2 qubits inside the state");
  }
  const int t = reg.offset + reg.size - 1;
  Circuit c(qubit_count, std::move(registers));
  c.append_layer({Gate::x(t)});
  std::vector<Control> controls;
  for (int q = reg.offset; q < t; ++q) controls.push_back({q, true});
  c.append_layer({Gate::mcz(std::move(controls), t)});
  c.append_layer({Gate::x(t)});
  return c;
}

int optimal_iterations(std::uint64_t search_space, std::uint64_t solutions) {
  if (solutions == 0) throw std::invalid_argument("no solutions: iteration count undefined");
  if (solutions > search_space) throw std::invalid_argument("more solutions than search space");
  double t = std::floor(std::numbers::pi / 4.0 *
                        std::sqrt(static_cast<double>(search_space) / static_cast<double>(solutions)));
  return std::max(1, static_cast<int>(t));
}

int aa_iteration_cap(int n, int k) {
  double cap = std::ceil(2.0 * (std::numbers::pi / 4.0) *
                         std::sqrt(static_cast<double>(binomial(n, k))));
  return static_cast<int>(cap);
}

AASchedule make_aa_schedule(int n, int k, long long shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("schedule needs at least one shot");
  return AASchedule{aa_iteration_cap(n, k), shots, seed};
}

namespace {

// Applies a circuit that may be narrower than the state; gate indices are
// read as absolute qubit positions.
void apply_embedded(const Circuit& c, Statevector& s) {
  for (const auto& layer : c.layers()) {
    for (const Gate& g : layer) apply_gate_inplace(s, g);
  }
}

}  // namespace

AARunner::AARunner(Circuit prep, Circuit oracle)
    : prep_(std::move(prep)), prep_adjoint_(adjoint(prep_)), oracle_(std::move(oracle)) {
  if (prep_.qubit_count() > oracle_.qubit_count()) {
    throw std::invalid_argument("state preparation wider than the oracle");
  }
  const Register* prep_idx = prep_.find_register("idx");
  const Register* oracle_idx = oracle_.find_register("idx");
  if (!prep_idx || !oracle_idx || !(*prep_idx == *oracle_idx)) {
    throw std::invalid_argument("prep and oracle must expose the same idx register");
  }
  idx_ = *prep_idx;
  s0_ = build_s0(oracle_.qubit_count(), idx_, oracle_.registers());
  state_ = zero_state(oracle_.qubit_count());
  apply_embedded(prep_, state_);
}

void AARunner::advance(int iterations) {
  for (int i = 0; i < iterations; ++i) {
    apply_embedded(oracle_, state_);
    apply_embedded(prep_adjoint_, state_);
    apply_embedded(s0_, state_);
    apply_embedded(prep_, state_);
  }
  iterations_ += iterations;
}

MeasurementHistogram AARunner::sample(long long shots, std::uint64_t seed) const {
  return sample_register(state_, idx_, shots, seed);
}

MeasurementHistogram run_aa(const Circuit& prep, const Circuit& oracle, int iterations,
                            long long shots, std::uint64_t seed) {
  if (iterations < 0) throw std::invalid_argument("negative iteration count");
  AARunner runner(prep, oracle);
  runner.advance(iterations);
  return runner.sample(shots, seed);
}

}  // namespace qclique
