#pragma once

#include <string>
#include <vector>

#include "loopkit/congruence.hpp"
#include "loopkit/verify.hpp"

namespace loopkit {

/// Full structural report for a single loop.
struct Report {
  std::string id;
  int order = 0;
  bool moufang = false;
  std::vector<int> moufang_witness;  // violating triple when not Moufang
  bool associative = false;
  bool power_associative = false;
  bool three_divisible = false;
  int nucleus_size = 0;
  int center_size = 0;
  std::vector<int> normal_subloop_sizes;
  bool classically_solvable = false;
  std::vector<int> classical_series_sizes;
  bool congruence_solvable = false;
  std::vector<int> congruence_series_sizes;
  std::vector<SuiteResult> theorem_checks;  // applicable suites run on this loop
};

Report analyze(const FiniteLoop& q, const std::string& id, const VerifyOptions& opts = {});

std::string report_text(const Report& r);
std::string report_json(const Report& r);

std::string suites_text(const std::vector<SuiteResult>& suites);
std::string suites_json(const std::vector<SuiteResult>& suites, std::uint64_t seed);

}  // namespace loopkit
