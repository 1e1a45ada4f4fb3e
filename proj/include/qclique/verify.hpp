#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qclique {

struct SuiteOptions {
  int max_n = 24;        // factorization range
  std::uint64_t seed = 7;
  int instances = 30;    // clique-containing instances per replication cell
  int max_instances = 400;
  long long shots = 1000;
  int top_window = 10;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Named check suites backing `qclique verify` and the acceptance run.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace qclique
