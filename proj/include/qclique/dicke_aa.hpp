#pragma once

#include <cstdint>

#include "qclique/circuit.hpp"
#include "qclique/graph.hpp"
#include "qclique/statevector.hpp"
#include "qclique/util.hpp"

namespace qclique {

// Search-space shape for clique search on n nodes with clique size k and q
// apex qubits pinned to 1.
struct SearchSpaceSpec {
  int n = 0;
  int k = 0;
  int q = 0;

  int n_qubits() const { return n + q; }
  std::uint64_t search_space_size() const { return binomial(n, k); }
};

SearchSpaceSpec make_search_space_spec(int n, int k);

// Unitary mapping |0...0> to the Dicke state: equal amplitude 1/sqrt(C(n,k))
// on every weight-k basis string. Built as a split/shift cascade of
// CX-(C)CRY-CX blocks; gates are packed greedily into layers.
Circuit build_dicke_prep(int n, int k);

// Dicke prep on the first n qubits plus X on each apex qubit; register idx
// spans all n+q qubits. Output support: k-subsets of the original nodes,
// each unioned with every apex node.
Circuit build_search_prep(const SearchSpaceSpec& spec);

// Phase -1 exactly on the all-zero basis state of `reg`, identity
// elsewhere. `registers` becomes the circuit's register map.
Circuit build_s0(int qubit_count, const Register& reg, std::vector<Register> registers);

// floor((pi/4) * sqrt(N/M)), clamped to at least 1. M = 0 is rejected.
int optimal_iterations(std::uint64_t search_space, std::uint64_t solutions);

// ceil(2 * (pi/4) * sqrt(C(n,k))): the iteration budget an amplification
// run is allowed before it is declared unsuccessful.
int aa_iteration_cap(int n, int k);

// Iteration budget plus per-step sampling parameters for one instance.
struct AASchedule {
  int max_iterations = 0;  // aa_iteration_cap(n, k)
  long long shots = 1000;
  std::uint64_t seed = 0;
};

AASchedule make_aa_schedule(int n, int k, long long shots, std::uint64_t seed);

// Amplitude amplification with an incrementally extendable iteration
// count: state = prep|0>, then per iteration oracle, prep^dagger, the
// zero reflection on idx, prep. The oracle may be wider than prep (extra
// work registers start at |0>); both must expose the same idx register.
class AARunner {
 public:
  AARunner(Circuit prep, Circuit oracle);

  void advance(int iterations);
  int iterations() const { return iterations_; }
  const Statevector& state() const { return state_; }
  MeasurementHistogram sample(long long shots, std::uint64_t seed) const;

 private:
  Circuit prep_;
  Circuit prep_adjoint_;
  Circuit oracle_;
  Circuit s0_;
  Register idx_;
  Statevector state_;
  int iterations_ = 0;
};

// prep|0>, t amplification iterations, then sample the idx register.
MeasurementHistogram run_aa(const Circuit& prep, const Circuit& oracle, int iterations,
                            long long shots, std::uint64_t seed);

}  // namespace qclique
