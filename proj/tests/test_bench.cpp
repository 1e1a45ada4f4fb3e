#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "qclique/bench.hpp"
#include "qclique/dicke_aa.hpp"
#include "qclique/util.hpp"

using namespace qclique;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents = "")
      : path("qclique_test_" + name) {
    if (!contents.empty()) {
      std::ofstream out(path);
      out << contents;
    }
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("edge list loading: plain, header, 1-based, comments, weights") {
  TempFile plain("plain.txt", "0 1\n1 2\n");
  auto r = load_edge_list(plain.path);
  CHECK(r.graph.node_count() == 3);
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.graph.has_edge(0, 1));
  CHECK(r.graph.has_edge(1, 2));

  TempFile header("header.txt", "4 3\n1 2\n2 3\n3 4\n");
  auto h = load_edge_list(header.path, {.one_based = true, .has_header = true});
  CHECK(h.graph.node_count() == 4);
  CHECK(h.graph.edge_count() == 3);
  CHECK(h.graph.has_edge(0, 1));
  CHECK(h.graph.has_edge(2, 3));

  TempFile commented("comments.txt", "% a comment\n# another\n0 1 0.75\n\n2 3\n");
  auto c = load_edge_list(commented.path);
  CHECK(c.graph.edge_count() == 2);
  CHECK(c.graph.node_count() == 4);
}

TEST_CASE("edge list loading: self-loops and duplicates are dropped with counts") {
  TempFile messy("messy.txt", "1 1\n0 1\n1 0\n0 1\n");
  auto r = load_edge_list(messy.path);
  CHECK(r.graph.edge_count() == 1);
  CHECK(r.dropped_self_loops == 1);
  CHECK(r.dropped_duplicates == 2);
}

TEST_CASE("edge list loading: errors carry the path and line number") {
  CHECK_THROWS_WITH_AS(load_edge_list("missing_file_9z.txt"),
                       doctest::Contains("missing_file_9z.txt"), std::runtime_error);
  TempFile bad("bad.txt", "0 1\nnot numbers\n");
  try {
    load_edge_list(bad.path);
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
}

TEST_CASE("synthetic graphs: extreme densities and binomial concentration") {
  CHECK(generate_synthetic(10, 1.0, 1).edge_count() == 45);
  CHECK(generate_synthetic(10, 0.0, 1).edge_count() == 0);
  CHECK(generate_synthetic(60, 0.5, 42).edges() == generate_synthetic(60, 0.5, 42).edges());

  double mean = 0;
  const int draws = 100;
  for (int i = 0; i < draws; ++i) {
    mean += generate_synthetic(60, 0.5, mix_seed(7, static_cast<std::uint64_t>(i))).edge_count();
  }
  mean /= draws;
  const double expectation = 0.5 * 1770.0;
  const double sigma = std::sqrt(1770.0 * 0.25 / draws);
  CHECK(std::abs(mean - expectation) <= 3.0 * sigma);
}

TEST_CASE("geometric mean") {
  CHECK(*geometric_mean({1, 1, 1}) == doctest::Approx(1.0));
  CHECK(*geometric_mean({2, 0.5}) == doctest::Approx(1.0));
  CHECK(*geometric_mean({1, 2, 4}) == doctest::Approx(2.0));
  CHECK_FALSE(geometric_mean({}).has_value());
  CHECK_THROWS_AS(geometric_mean({1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(geometric_mean({-2.0}), std::invalid_argument);
}

TEST_CASE("benchmark on a complete source succeeds immediately") {
  ExperimentConfig cfg;
  cfg.source = GraphSource::synthetic(1.0, 12);
  cfg.n = 6;
  cfg.k = 3;
  cfg.instances = 3;
  cfg.shots = 500;
  cfg.seed = 5;
  auto result = run_benchmark(cfg);
  REQUIRE(result.report.cells.size() == 1);
  const CellAggregate& cell = result.report.cells[0];
  CHECK(cell.qubits == 22);
  CHECK(cell.iteration_cap == 8);
  CHECK(cell.with_clique == 3);
  CHECK(cell.successes == 3);
  CHECK(cell.success_rate == doctest::Approx(1.0));
  for (const auto& rec : result.records) {
    REQUIRE(rec.success);
    CHECK(*rec.gamma_iterations == 1);  // every outcome is a clique
    CHECK(rec.clique_count == 20);
    CHECK(*rec.baseline_iterations == 1);
    CHECK(*rec.ratio == doctest::Approx(1.0));
  }
}

TEST_CASE("benchmark respects the success cap and skips clique-less instances") {
  ExperimentConfig cfg;
  cfg.source = GraphSource::synthetic(0.15, 30);
  cfg.n = 5;
  cfg.k = 3;
  cfg.instances = 12;
  cfg.shots = 300;
  cfg.seed = 21;
  auto result = run_benchmark(cfg);
  const int cap = aa_iteration_cap(5, 3);
  int cliqueful = 0;
  for (const auto& rec : result.records) {
    if (rec.clique_count == 0) {
      CHECK_FALSE(rec.success);
      CHECK_FALSE(rec.gamma_iterations.has_value());
      CHECK_FALSE(rec.ratio.has_value());
    } else {
      ++cliqueful;
      if (rec.success) {
        CHECK(*rec.gamma_iterations <= cap);
        CHECK(*rec.ratio > 0.0);
      }
    }
  }
  CHECK(result.report.cells[0].with_clique == cliqueful);
}

TEST_CASE("benchmark with the exact oracle finds every clique-containing instance") {
  ExperimentConfig cfg;
  cfg.source = GraphSource::synthetic(0.6, 24);
  cfg.n = 5;
  cfg.k = 3;
  cfg.instances = 10;
  cfg.shots = 1000;
  cfg.seed = 31;
  cfg.oracle = OracleKind::ExactMark;
  auto result = run_benchmark(cfg);
  const CellAggregate& cell = result.report.cells[0];
  CHECK(cell.with_clique > 0);
  CHECK(cell.successes == cell.with_clique);
}

TEST_CASE("benchmark configuration errors") {
  ExperimentConfig cfg;
  cfg.source = GraphSource::synthetic(0.5, 10);
  cfg.n = 12;
  cfg.k = 3;  // 2*(12+4)+2 = 34 qubits: refused before any simulation
  CHECK_THROWS_AS(run_benchmark(cfg), ResourceError);

  cfg.n = 6;
  cfg.k = 7;
  CHECK_THROWS_AS(run_benchmark(cfg), std::invalid_argument);

  cfg.k = 3;
  cfg.shots = 5;
  cfg.top_window = 10;
  CHECK_THROWS_AS(run_benchmark(cfg), std::invalid_argument);

  ExperimentConfig missing;
  missing.source = GraphSource::file("no_such_edge_list.txt");
  missing.instances = 1;
  CHECK_THROWS_WITH_AS(run_benchmark(missing), doctest::Contains("no_such_edge_list.txt"),
                       std::runtime_error);
}

TEST_CASE("stop_after_cliqueful bounds the generated instances") {
  ExperimentConfig cfg;
  cfg.source = GraphSource::synthetic(0.9, 20);
  cfg.n = 4;
  cfg.k = 3;
  cfg.instances = 50;
  cfg.stop_after_cliqueful = 5;
  cfg.shots = 200;
  cfg.seed = 3;
  auto result = run_benchmark(cfg);
  CHECK(result.report.cells[0].with_clique == 5);
  CHECK(result.report.cells[0].generated <= 50);
  CHECK(result.report.cells[0].generated == static_cast<int>(result.records.size()));
}

TEST_CASE("reports round-trip through json and csv") {
  ExperimentConfig cfg;
  cfg.source = GraphSource::synthetic(0.7, 16);
  cfg.n = 5;
  cfg.k = 3;
  cfg.instances = 6;
  cfg.shots = 300;
  cfg.seed = 77;
  auto result = run_benchmark(cfg);

  TempFile json_file("report.json");
  export_report(result.report, result.records, json_file.path, "json");
  auto back = import_report_json(json_file.path);
  CHECK(back.report.cells[0].successes == result.report.cells[0].successes);
  CHECK(back.report.cells[0].qubits == result.report.cells[0].qubits);
  CHECK(back.report.config.seed == cfg.seed);
  CHECK(back.report.config.n == cfg.n);
  REQUIRE(back.records.size() == result.records.size());
  for (size_t i = 0; i < back.records.size(); ++i) {
    CHECK(back.records[i].instance_id == result.records[i].instance_id);
    CHECK(back.records[i].original_nodes == result.records[i].original_nodes);
    CHECK(back.records[i].clique_count == result.records[i].clique_count);
    CHECK(back.records[i].success == result.records[i].success);
    CHECK(back.records[i].gamma_iterations == result.records[i].gamma_iterations);
    CHECK(back.records[i].ratio == result.records[i].ratio);
  }

  TempFile csv_file("report.csv");
  export_report(result.report, result.records, csv_file.path, "csv");
  auto rows = import_records_csv(csv_file.path);
  REQUIRE(rows.size() == result.records.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].instance_id == result.records[i].instance_id);
    CHECK(rows[i].original_nodes == result.records[i].original_nodes);
    CHECK(rows[i].ratio == result.records[i].ratio);
    CHECK(rows[i].success == result.records[i].success);
  }

  // an empty record set still produces a valid, re-readable file
  TempFile empty_file("empty.json");
  export_report(result.report, {}, empty_file.path, "json");
  CHECK(import_report_json(empty_file.path).records.empty());

  CHECK_THROWS_AS(export_report(result.report, result.records, json_file.path, "xml"),
                  std::invalid_argument);
}

TEST_CASE("identical config and seed give byte-identical reports") {
  ExperimentConfig cfg;
  cfg.source = GraphSource::synthetic(0.8, 14);
  cfg.n = 5;
  cfg.k = 4;
  cfg.instances = 4;
  cfg.shots = 400;
  cfg.seed = 99;

  auto first = run_benchmark(cfg);
  auto second = run_benchmark(cfg);
  TempFile f1("repro1.json");
  TempFile f2("repro2.json");
  export_report(first.report, first.records, f1.path, "json");
  export_report(second.report, second.records, f2.path, "json");
  std::ifstream a(f1.path), b(f2.path);
  std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(sa == sb);
  CHECK(!sa.empty());
}
