#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

#include "qclique/circuit.hpp"
#include "qclique/oracles.hpp"
#include "qclique/statevector.hpp"
#include "qclique/util.hpp"

using namespace qclique;

namespace {

// Independent reference: build the full 2^Q x 2^Q unitary entry by entry
// from the gate definition, then multiply.
std::complex<double> matrix_entry(const Gate& g, int Q, std::uint64_t row, std::uint64_t col) {
  auto bit = [](std::uint64_t v, int q) { return (v >> q) & 1ULL; };
  if (g.kind == GateKind::DiagonalMark) {
    if (row != col) return 0;
    std::uint64_t reg = (col >> g.mark->offset) & ((1ULL << g.mark->size) - 1ULL);
    for (std::uint64_t v : g.mark->marked_values) {
      if (v == reg) return -1;
    }
    return 1;
  }
  bool controls_met = true;
  for (const Control& c : g.controls) {
    controls_met = controls_met && (bit(col, c.qubit) == (c.inverted ? 0ULL : 1ULL));
  }
  if (!controls_met) return row == col ? 1.0 : 0.0;

  const int t = g.targets.at(0);
  // all non-target bits must agree
  std::uint64_t mask = ~(1ULL << t) & ((Q == 64 ? ~0ULL : (1ULL << Q) - 1ULL));
  if ((row & mask) != (col & mask)) return 0;
  const std::uint64_t rb = bit(row, t);
  const std::uint64_t cb = bit(col, t);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX:
      return rb != cb ? 1.0 : 0.0;
    case GateKind::H:
    case GateKind::CH:
      return (rb && cb) ? -inv_sqrt2 : inv_sqrt2;
    case GateKind::CZ:
    case GateKind::MCZ:
      if (rb != cb) return 0;
      return cb ? -1.0 : 1.0;
    case GateKind::RY: {
      double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      if (rb == 0 && cb == 0) return c;
      if (rb == 0 && cb == 1) return -s;
      if (rb == 1 && cb == 0) return s;
      return c;
    }
    default: return 0;
  }
}

Statevector matrix_apply(const Gate& g, const Statevector& s) {
  Statevector out = zero_state(s.qubit_count());
  out.amplitudes()[0] = 0;
  for (std::uint64_t row = 0; row < s.dimension(); ++row) {
    std::complex<double> acc = 0;
    for (std::uint64_t col = 0; col < s.dimension(); ++col) {
      acc += matrix_entry(g, s.qubit_count(), row, col) * s.amplitude(col);
    }
    out.amplitudes()[row] = acc;
  }
  return out;
}

Statevector scrambled_state(int Q, std::uint64_t seed) {
  Statevector s = zero_state(Q);
  for (int q = 0; q < Q; ++q) apply_gate_inplace(s, Gate::h(q));
  for (int q = 0; q + 1 < Q; ++q) {
    if (mix_seed(seed, static_cast<std::uint64_t>(q)) & 1ULL) apply_gate_inplace(s, Gate::cz(q, q + 1));
    apply_gate_inplace(s, Gate::ry(0.1 + 0.17 * static_cast<double>(mix_seed(seed, 100 + static_cast<std::uint64_t>(q)) % 7), q));
  }
  return s;
}

double max_diff(const Statevector& a, const Statevector& b) {
  double worst = 0;
  for (std::uint64_t i = 0; i < a.dimension(); ++i) {
    worst = std::max(worst, std::abs(a.amplitude(i) - b.amplitude(i)));
  }
  return worst;
}

}  // namespace

TEST_CASE("zero_state basics and the width cap") {
  Statevector s1 = zero_state(1);
  CHECK(s1.amplitude(0) == std::complex<double>(1));
  CHECK(s1.amplitude(1) == std::complex<double>(0));

  Statevector s3 = zero_state(3);
  CHECK(s3.dimension() == 8);
  CHECK(s3.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(zero_state(0), ResourceError);
  CHECK_THROWS_AS(zero_state(max_qubits() + 1), ResourceError);
  try {
    zero_state(max_qubits() + 4);
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("GiB") != std::string::npos);
  }
}

TEST_CASE("widest supported state allocates and normalizes") {
  // feasibility gate for the largest benchmark widths (1 GiB of amplitudes)
  if (max_qubits() >= 26) {
    Statevector s = zero_state(26);
    CHECK(s.dimension() == (1ULL << 26));
    CHECK(s.norm_sq() == 1.0);
    apply_gate_inplace(s, Gate::h(25));
    CHECK(std::abs(s.norm_sq() - 1.0) <= 1e-10);
  }
}

TEST_CASE("single gate semantics on small states") {
  Statevector plus = apply_gate(zero_state(1), Gate::h(0));
  CHECK(plus.amplitude(0).real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(plus.amplitude(1).real() == doctest::Approx(1 / std::sqrt(2.0)));

  Statevector s11 = apply_gate(basis_state(2, 3), Gate::cz(0, 1));
  CHECK(s11.amplitude(3).real() == doctest::Approx(-1.0));
  Statevector s10 = apply_gate(basis_state(2, 1), Gate::cz(0, 1));
  CHECK(s10.amplitude(1).real() == doctest::Approx(1.0));

  // edge-query semantics: both controls set flips the target
  Statevector q = apply_gate(basis_state(3, 0b011), Gate::ccx(0, 1, 2));
  CHECK(std::abs(q.amplitude(0b111) - std::complex<double>(1)) <= 1e-15);

  Statevector inv = apply_gate(basis_state(2, 0), Gate{GateKind::CX, {1}, {{0, true}}});
  CHECK(std::abs(inv.amplitude(2) - std::complex<double>(1)) <= 1e-15);

  CHECK_THROWS_AS(apply_gate(zero_state(2), Gate::x(5)), std::invalid_argument);
}

TEST_CASE("every gate kind agrees with the dense matrix for Q <= 6") {
  auto spec = std::make_shared<DiagonalMarkSpec>();
  spec->register_name = "idx";
  spec->predicate_id = "demo";
  spec->offset = 1;
  spec->size = 3;
  spec->marked_values = {0b010, 0b111};

  const std::vector<Gate> gates = {
      Gate::x(2),
      Gate::h(0),
      Gate::ch(3, 1),
      Gate::cx(4, 2),
      Gate::cz(1, 5),
      Gate::ccx(0, 3, 5, false, true),
      Gate::mcx({{0, false}, {2, true}, {4, false}}, 1),
      Gate::mcz({{5, true}, {2, false}}, 0),
      Gate::ry(0.77, 3),
      Gate::cry(-1.3, 2, 0),
      Gate::ccry(2.1, 1, 4, 5),
      Gate::diagonal_mark(spec),
  };
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Statevector s = scrambled_state(6, seed);
    for (const Gate& g : gates) {
      Statevector fast = apply_gate(s, g);
      Statevector slow = matrix_apply(g, s);
      CHECK(max_diff(fast, slow) <= 1e-12);
    }
  }
}

TEST_CASE("run matches width, preserves norm, and empty circuits do nothing") {
  Statevector s = scrambled_state(5, 9);
  Circuit empty(5, {{"idx", 0, 5}});
  CHECK(max_diff(run(empty, s), s) == 0.0);

  Circuit ip = build_input_preparator(4);
  CHECK_THROWS_AS(run(ip, s), std::invalid_argument);

  Statevector t = scrambled_state(10, 4);
  Statevector u = run(ip, t);
  CHECK(std::abs(u.norm_sq() - 1.0) <= 1e-10);
  Statevector back = run(adjoint(ip), u);
  CHECK(max_diff(back, t) <= 1e-12);
}

TEST_CASE("gates inside one layer commute bit-for-bit") {
  Circuit a(6, {{"idx", 0, 6}});
  a.append_layer({Gate::h(0), Gate::cx(2, 3), Gate::ry(0.4, 5)});
  Circuit b(6, {{"idx", 0, 6}});
  b.append_layer({Gate::ry(0.4, 5), Gate::h(0), Gate::cx(2, 3)});
  Statevector s = scrambled_state(6, 11);
  Statevector ra = run(a, s);
  Statevector rb = run(b, s);
  CHECK(max_diff(ra, rb) <= 1e-15);
}

TEST_CASE("inner product is conjugate-linear in the first argument") {
  Statevector a = scrambled_state(4, 2);
  Statevector b = scrambled_state(4, 3);
  CHECK(std::abs(inner_product(a, a) - std::complex<double>(1)) <= 1e-10);
  CHECK(std::abs(inner_product(basis_state(2, 0), basis_state(2, 1))) == 0.0);
  auto ab = inner_product(a, b);
  auto ba = inner_product(b, a);
  CHECK(std::abs(ab - std::conj(ba)) <= 1e-12);
  CHECK(std::abs(ab) <= 1.0 + 1e-10);
}

TEST_CASE("sampling a basis state concentrates all shots") {
  Statevector s = basis_state(4, 0b1010);
  Register idx{"idx", 0, 4};
  auto hist = sample_register(s, idx, 500, 77);
  REQUIRE(hist.counts.size() == 1);
  CHECK(hist.counts.at(0b1010) == 500);
  CHECK(hist.shots == 500);
  CHECK(hist.register_name == "idx");
}

TEST_CASE("sampling the uniform 2-qubit state is flat to binomial accuracy") {
  Statevector s = zero_state(2);
  apply_gate_inplace(s, Gate::h(0));
  apply_gate_inplace(s, Gate::h(1));
  auto hist = sample_register(s, Register{"idx", 0, 2}, 100000, 123);
  for (std::uint64_t v = 0; v < 4; ++v) {
    double freq = static_cast<double>(hist.counts.at(v)) / 100000.0;
    CHECK(std::abs(freq - 0.25) <= 0.01);
  }
  // deterministic given the seed
  auto again = sample_register(s, Register{"idx", 0, 2}, 100000, 123);
  CHECK(again.counts == hist.counts);
}

TEST_CASE("sampling a sub-register marginalizes the rest") {
  // Bell pair on qubits 0,1; qubit 2 fixed at 1
  Statevector s = zero_state(3);
  apply_gate_inplace(s, Gate::h(0));
  apply_gate_inplace(s, Gate::cx(0, 1));
  apply_gate_inplace(s, Gate::x(2));
  auto probs = marginal_probabilities(s, Register{"pair", 0, 2});
  CHECK(probs[0b00] == doctest::Approx(0.5));
  CHECK(probs[0b11] == doctest::Approx(0.5));
  CHECK(probs[0b01] == doctest::Approx(0.0));
  auto hist = sample_register(s, Register{"one", 2, 1}, 1000, 5);
  CHECK(hist.counts.at(1) == 1000);
}

TEST_CASE("histogram top window sorts by count then value") {
  MeasurementHistogram h;
  h.counts = {{5, 10}, {2, 30}, {9, 10}, {1, 7}};
  h.shots = 57;
  auto top = h.top(3);
  REQUIRE(top.size() == 3);
  CHECK(top[0].first == 2);
  CHECK(top[1].first == 5);
  CHECK(top[2].first == 9);
}

TEST_CASE("residual_mass isolates register deviations") {
  Statevector s = zero_state(4);
  CHECK(residual_mass(s, Register{"anc", 1, 2}, 0) == 0.0);
  apply_gate_inplace(s, Gate::h(0));
  apply_gate_inplace(s, Gate::cx(0, 1));
  // half the mass now has anc bit 1 set
  CHECK(residual_mass(s, Register{"anc", 1, 2}, 0) == doctest::Approx(0.5));
  CHECK(residual_mass(s, Register{"idx", 0, 1}, 0) == doctest::Approx(0.5));
}

TEST_CASE("single precision mode round-trips within relaxed tolerance") {
  StatevectorF s = zero_state_single(10);
  Circuit ip = build_input_preparator(4);
  run_inplace(ip, s);
  run_inplace(adjoint(ip), s);
  CHECK(std::abs(s.norm_sq() - 1.0) <= 1e-5);
  double worst = 0;
  for (std::uint64_t i = 1; i < s.dimension(); ++i) worst = std::max(worst, (double)std::abs(s.amplitude(i)));
  CHECK(worst <= 1e-5);
}

#ifdef _OPENMP
#include <omp.h>

TEST_CASE("results do not depend on the thread count") {
  Statevector base = scrambled_state(12, 21);
  Circuit ip = build_input_preparator(5);
  const int saved = omp_get_max_threads();

  omp_set_num_threads(1);
  Statevector serial = run(ip, base);
  omp_set_num_threads(4);
  Statevector parallel = run(ip, base);
  omp_set_num_threads(saved);

  CHECK(max_diff(serial, parallel) == 0.0);
}
#endif
