#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qclique/circuit.hpp"

namespace qclique {

// Dense amplitude vector over 2^Q basis states. Qubit 0 is the least
// significant bit of the basis-state index; this convention is global.
template <typename Scalar>
class BasicStatevector {
 public:
  BasicStatevector() = default;
  explicit BasicStatevector(int qubit_count);

  int qubit_count() const { return qubit_count_; }
  std::uint64_t dimension() const { return 1ULL << qubit_count_; }
  const std::vector<std::complex<Scalar>>& amplitudes() const { return amps_; }
  std::vector<std::complex<Scalar>>& amplitudes() { return amps_; }
  std::complex<Scalar> amplitude(std::uint64_t basis_index) const { return amps_[basis_index]; }

  double norm_sq() const;

 private:
  int qubit_count_ = 0;
  std::vector<std::complex<Scalar>> amps_;
};

using Statevector = BasicStatevector<double>;
using StatevectorF = BasicStatevector<float>;

struct MeasurementHistogram {
  std::string register_name;
  int register_size = 0;
  long long shots = 0;
  std::map<std::uint64_t, long long> counts;

  // Outcomes by descending count; ties broken by ascending value.
  std::vector<std::pair<std::uint64_t, long long>> top(int window) const;
};

// Simulation width cap; QCLIQUE_MAX_QUBITS overrides the default of 26
// (a 26-qubit double-precision state occupies 1 GiB).
int max_qubits();

// |0...0>. Throws ResourceError naming the required memory when Q exceeds
// the cap.
Statevector zero_state(int qubit_count);
// Single-precision variant for the widest states (half the memory, use
// tolerances around 1e-5).
StatevectorF zero_state_single(int qubit_count);

Statevector basis_state(int qubit_count, std::uint64_t index);

template <typename Scalar>
void apply_gate_inplace(BasicStatevector<Scalar>& s, const Gate& g);

template <typename Scalar>
void run_inplace(const Circuit& c, BasicStatevector<Scalar>& s);

Statevector apply_gate(Statevector s, const Gate& g);
Statevector run(const Circuit& c, Statevector s);

// Conjugate-linear in the first argument.
std::complex<double> inner_product(const Statevector& a, const Statevector& b);

// Exact marginal distribution of a register (all other qubits traced out).
std::vector<double> marginal_probabilities(const Statevector& s, const Register& reg);

// I.i.d. samples from the exact register marginal; deterministic given the
// seed (hand-rolled inverse-CDF sampling, stable across platforms).
MeasurementHistogram sample_register(const Statevector& s, const Register& reg, long long shots,
                                     std::uint64_t seed);

// Total squared amplitude on basis states where the register differs from
// `value`; 0 means the register is exactly in that basis state.
double residual_mass(const Statevector& s, const Register& reg, std::uint64_t value);

}  // namespace qclique
