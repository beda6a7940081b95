#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loopkit/corpus.hpp"
#include "loopkit/group.hpp"

namespace loopkit {

struct VerifyOptions {
  std::size_t group_cap = kDefaultGroupCap;
  /// Loops above this order are skipped by the Mlt/triality-heavy suites.
  int mlt_order_limit = 32;
  /// Corpus-level coverage checks ("at least one pipeline run"); disabled for
  /// single-loop reports.
  bool require_runs = true;
};

struct SuiteCheck {
  std::string label;
  bool pass = false;
  std::string detail;  // witness on failure, statistics otherwise
};

struct SuiteResult {
  std::string suite;
  bool pass = true;
  std::vector<SuiteCheck> checks;
  void add(std::string label, bool ok, std::string detail = "") {
    pass = pass && ok;
    checks.push_back({std::move(label), ok, std::move(detail)});
  }
};

/// Suites named after the paper results they sweep: thm-2.2, thm-2.5,
/// prop-2.3, prop-2.4, eq-3.5, prop-3.4, cor-3.6, lem-4.1, prop-4.2,
/// thm-5.2, prop-5.5, prop-5.6, thm-5.7. Throws UnknownSuite.
SuiteResult run_suite(const std::string& name, const std::vector<CorpusEntry>& corpus,
                      const VerifyOptions& opts = {});

std::vector<std::string> suite_names();

}  // namespace loopkit
