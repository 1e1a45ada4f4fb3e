#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qclique/circuit.hpp"
#include "qclique/graph.hpp"
#include "qclique/oracles.hpp"
#include "qclique/statevector.hpp"

using namespace qclique;

namespace {

Circuit two_qubit_demo() {
  Circuit c(2, {{"idx", 0, 2}});
  c.append_layer({Gate::h(0)});
  c.append_layer({Gate::cx(0, 1)});
  return c;
}

}  // namespace

TEST_CASE("validate accepts the empty circuit and built oracles") {
  Circuit empty(3, {{"idx", 0, 3}});
  CHECK_FALSE(validate(empty).has_value());
  CHECK_FALSE(validate(build_edge_detector(Graph::complete(4))).has_value());
}

TEST_CASE("validate names offending layers") {
  Circuit c(2, {{"idx", 0, 2}});
  c.append_layer({Gate::cx(0, 1), Gate::h(1)});
  auto err = validate(c);
  REQUIRE(err.has_value());
  CHECK(err->find("layer 0") != std::string::npos);
  CHECK(err->find("qubit 1") != std::string::npos);

  Circuit arity(2, {{"idx", 0, 2}});
  arity.append_layer({Gate{GateKind::CCX, {1}, {{0, false}}}});
  CHECK(validate(arity).has_value());

  Circuit out_of_range(1, {{"idx", 0, 1}});
  out_of_range.append_layer({Gate::x(3)});
  CHECK(validate(out_of_range).has_value());

  Circuit overlapping(2, {{"a", 0, 2}, {"b", 1, 1}});
  CHECK(validate(overlapping).has_value());
}

TEST_CASE("depth cost model") {
  CHECK(depth(Circuit(1, {{"idx", 0, 1}})).layer_count == 0);
  CHECK(depth(Circuit(1, {{"idx", 0, 1}})).weighted_depth == 0);

  // one CCX per edge, all stacked on out
  auto naive = depth(build_edge_detector_naive(Graph::complete(4)));
  CHECK(naive.layer_count == 6);
  CHECK(naive.weighted_depth == 6);

  // 3 matching layers + inverted-control MCX over 2 ancillas (cost 2)
  // + X + 3 reset layers
  auto layered = depth(build_edge_detector(Graph::complete(4)));
  CHECK(layered.layer_count == 8);
  CHECK(layered.weighted_depth == 9);
  CHECK(layered.gate_counts.at(GateKind::CCX) == 12);  // 6 per half
  CHECK(layered.gate_counts.at(GateKind::MCX) == 1);
  CHECK_FALSE(layered.contains_nonphysical);

  Circuit wide(5, {{"idx", 0, 5}});
  wide.append_layer({Gate::mcz({{0, true}, {1, true}, {2, true}, {3, true}}, 4)});
  CHECK(depth(wide).weighted_depth == 4);

  Circuit invalid(2, {{"idx", 0, 2}});
  invalid.append_layer({Gate::cx(0, 0)});
  CHECK_THROWS_AS(depth(invalid), std::invalid_argument);
}

TEST_CASE("diagonal marks are flagged non-physical and cost nothing") {
  auto spec = std::make_shared<DiagonalMarkSpec>();
  spec->register_name = "idx";
  spec->predicate_id = "demo";
  spec->offset = 0;
  spec->size = 2;
  spec->marked_values = {3};
  Circuit c(2, {{"idx", 0, 2}});
  c.append_layer({Gate::diagonal_mark(spec)});
  auto rep = depth(c);
  CHECK(rep.contains_nonphysical);
  CHECK(rep.layer_count == 1);
  CHECK(rep.weighted_depth == 0);
}

TEST_CASE("adjoint reverses layers and undoes the circuit") {
  Circuit c = two_qubit_demo();
  Circuit adj = adjoint(c);
  CHECK(adj.layer_count() == c.layer_count());
  CHECK(structurally_equal(adjoint(adj), c));

  Circuit single(2, {{"idx", 0, 2}});
  single.append_layer({Gate::h(0), Gate::x(1)});
  CHECK(structurally_equal(adjoint(single), single));

  // rotation gates invert by flipping the angle
  Circuit rot(1, {{"idx", 0, 1}});
  rot.append_layer({Gate::ry(0.7, 0)});
  Circuit rot_adj = adjoint(rot);
  CHECK(rot_adj.layers()[0][0].angle == -0.7);
  CHECK(structurally_equal(adjoint(adjoint(rot)), rot));
}

TEST_CASE("running a circuit then its adjoint restores random states") {
  Circuit ip = build_input_preparator(4);  // 10 qubits
  Statevector s = zero_state(10);
  // a deterministic scrambled state
  for (int q = 0; q < 10; ++q) apply_gate_inplace(s, Gate::h(q));
  for (int q = 0; q < 9; ++q) apply_gate_inplace(s, Gate::cz(q, q + 1));
  for (int q = 0; q < 10; q += 2) apply_gate_inplace(s, Gate::ry(0.31 * (q + 1), q));
  Statevector round = run(compose(ip, adjoint(ip)), s);
  double worst = 0;
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    worst = std::max(worst, std::abs(round.amplitude(i) - s.amplitude(i)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("compose concatenates layers and preserves semantics") {
  Circuit c = two_qubit_demo();
  Circuit empty(2, {{"idx", 0, 2}});
  CHECK(structurally_equal(compose(c, empty), c));
  CHECK(structurally_equal(compose(empty, c), c));
  CHECK(compose(c, c).layer_count() == 2 * c.layer_count());

  Statevector s = run(compose(c, adjoint(c)), basis_state(2, 2));
  CHECK(std::abs(s.amplitude(2) - std::complex<double>(1)) <= 1e-12);

  Circuit narrow(1, {{"idx", 0, 1}});
  CHECK_THROWS_AS(compose(c, narrow), std::invalid_argument);
  Circuit renamed(2, {{"other", 0, 2}});
  CHECK_THROWS_AS(compose(c, renamed), std::invalid_argument);
}

TEST_CASE("assembling the clique oracle from its pieces matches the builder") {
  Graph g = Graph::complete(4);
  const int n = g.node_count();
  std::vector<Register> regs = {{"idx", 0, n}, {"inp", n, n}, {"rem", 2 * n, 2}};
  Circuit ip = build_input_preparator(n);
  Circuit alpha = shifted(build_alpha(g), 2 * n + 2, n, regs);
  Circuit reflect(2 * n + 2, regs);
  reflect.append_layer({Gate::x(2 * n + 1)});
  std::vector<Control> controls;
  for (int q = n; q < 2 * n + 1; ++q) controls.push_back({q, true});
  reflect.append_layer({Gate::mcz(std::move(controls), 2 * n + 1)});
  reflect.append_layer({Gate::x(2 * n + 1)});

  Circuit assembled = compose(
      compose(compose(compose(compose(compose(ip, alpha), adjoint(ip)), reflect), ip), alpha),
      adjoint(ip));
  CHECK(structurally_equal(assembled, build_gamma(g)));
}

TEST_CASE("shifted relocates gates and registers") {
  Circuit a = build_alpha(Graph::complete(3));
  Circuit moved = shifted(a, 8, 5, {{"inp", 5, 3}});
  CHECK(moved.qubit_count() == 8);
  for (const auto& layer : moved.layers()) {
    for (const Gate& g : layer) {
      for (int q : g.qubits()) CHECK(q >= 5);
    }
  }
  CHECK_THROWS_AS(shifted(a, 4, 2, {{"inp", 2, 3}}), std::invalid_argument);
}

TEST_CASE("dump emits one line per gate with register header") {
  Circuit c = two_qubit_demo();
  std::string text = dump(c);
  CHECK(text.find("# qubits 2") != std::string::npos);
  CHECK(text.find("# register idx offset 0 size 2") != std::string::npos);
  CHECK(text.find("0 H -> 0") != std::string::npos);
  CHECK(text.find("1 CX +0 -> 1") != std::string::npos);

  Circuit det = build_edge_detector(Graph::complete(4));
  std::string dtext = dump(det);
  CHECK(dtext.find("MCX -4 -5 -> 6") != std::string::npos);
}
