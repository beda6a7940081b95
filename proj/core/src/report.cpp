#include "loopkit/report.hpp"

#include <sstream>

#include <json.hpp>

#include "loopkit/errors.hpp"

namespace loopkit {

Report analyze(const FiniteLoop& q, const std::string& id, const VerifyOptions& opts) {
  Report r;
  r.id = id;
  r.order = q.size();
  MoufangCheck mc = is_moufang(q);
  r.moufang = mc.holds;
  if (!mc.holds) r.moufang_witness = {mc.witness[0], mc.witness[1], mc.witness[2]};
  r.associative = is_associative(q);
  r.power_associative = is_power_associative(q);
  r.three_divisible = r.power_associative && is_d_divisible(q, 3);
  Nuclei nuc = nuclei(q);
  r.nucleus_size = nuc.nucleus.size();
  r.center_size = nuc.center.size();
  for (const auto& s : normal_subloops(q)) r.normal_subloop_sizes.push_back(s.size());
  auto cls = is_classically_solvable(q);
  r.classically_solvable = cls.solvable;
  for (const auto& s : cls.series) r.classical_series_sizes.push_back(s.size());
  auto cng = is_congruence_solvable(q);
  r.congruence_solvable = cng.solvable;
  for (const auto& s : cng.series) r.congruence_series_sizes.push_back(s.size());

  std::vector<CorpusEntry> self{{id, q}};
  VerifyOptions per_loop = opts;
  per_loop.require_runs = false;
  for (const auto& name : suite_names()) r.theorem_checks.push_back(run_suite(name, self, per_loop));
  return r;
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  out << "loop " << r.id << " (order " << r.order << ")\n";
  out << "  moufang: " << (r.moufang ? "yes" : "no");
  if (!r.moufang)
    out << "  witness (" << r.moufang_witness[0] << "," << r.moufang_witness[1] << ","
        << r.moufang_witness[2] << ")";
  out << "\n  associative: " << (r.associative ? "yes" : "no");
  out << "\n  power associative: " << (r.power_associative ? "yes" : "no");
  out << "\n  3-divisible: " << (r.three_divisible ? "yes" : "no");
  out << "\n  |Nuc| = " << r.nucleus_size << ", |Z| = " << r.center_size;
  out << "\n  normal subloop sizes:";
  for (int s : r.normal_subloop_sizes) out << ' ' << s;
  out << "\n  classically solvable: " << (r.classically_solvable ? "yes" : "no");
  if (r.classically_solvable) {
    out << "  series";
    for (int s : r.classical_series_sizes) out << ' ' << s;
  }
  out << "\n  congruence solvable: " << (r.congruence_solvable ? "yes" : "no");
  if (r.congruence_solvable) {
    out << "  series";
    for (int s : r.congruence_series_sizes) out << ' ' << s;
  }
  out << '\n';
  out << suites_text(r.theorem_checks);
  return out.str();
}

namespace {

nlohmann::ordered_json suite_to_json(const SuiteResult& s) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : s.checks)
    checks.push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", s.suite}, {"pass", s.pass}, {"checks", checks}};
}

}  // namespace

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["order"] = r.order;
  j["moufang"] = r.moufang;
  if (!r.moufang) j["moufang_witness"] = r.moufang_witness;
  j["associative"] = r.associative;
  j["power_associative"] = r.power_associative;
  j["three_divisible"] = r.three_divisible;
  j["nucleus_size"] = r.nucleus_size;
  j["center_size"] = r.center_size;
  j["normal_subloop_sizes"] = r.normal_subloop_sizes;
  j["classically_solvable"] = r.classically_solvable;
  j["classical_series_sizes"] = r.classical_series_sizes;
  j["congruence_solvable"] = r.congruence_solvable;
  j["congruence_series_sizes"] = r.congruence_series_sizes;
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& s : r.theorem_checks) suites.push_back(suite_to_json(s));
  j["theorem_checks"] = suites;
  return j.dump(2) + "\n";
}

std::string suites_text(const std::vector<SuiteResult>& suites) {
  std::ostringstream out;
  for (const auto& s : suites) {
    out << "suite " << s.suite << ": " << (s.pass ? "PASS" : "FAIL") << '\n';
    for (const auto& c : s.checks) {
      out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.label;
      if (!c.detail.empty()) out << "  [" << c.detail << "]";
      out << '\n';
    }
  }
  return out.str();
}

std::string suites_json(const std::vector<SuiteResult>& suites, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : suites) arr.push_back(suite_to_json(s));
  j["suites"] = arr;
  return j.dump(2) + "\n";
}

}  // namespace loopkit
