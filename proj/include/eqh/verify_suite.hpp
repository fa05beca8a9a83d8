#pragma once

#include "eqh/corpus.hpp"

namespace eqh {

struct SuiteLine {
  std::string family;
  int pass = 0;
  int total = 0;
  std::vector<std::string> failures;  // one named entry per failing check
  bool ok() const { return pass == total; }
};

struct SuiteReport {
  std::vector<SuiteLine> lines;
  std::vector<std::string> warnings;
  bool all_ok = true;
};

// Runs every invariant family over the given corpus. Failures are collected
// and named, never thrown. An empty corpus passes vacuously with a warning.
SuiteReport run_verify_suite(const std::vector<CorpusInstance>& corpus,
                             int max_degree = 2);

}  // namespace eqh
