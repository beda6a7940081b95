#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "loopkit/construct.hpp"
#include "loopkit/corpus.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/report.hpp"
#include "loopkit/table_io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

std::vector<loopkit::CorpusEntry> load_corpus(const loopkit::CorpusOptions& opts,
                                              const std::vector<std::string>& tables) {
  if (tables.empty()) return loopkit::default_corpus(opts);
  std::vector<loopkit::CorpusEntry> out;
  for (const auto& path : tables)
    out.push_back({std::filesystem::path(path).filename().string(), loopkit::read_table_file(path)});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Moufang loop structure and solvability toolkit"};
  app.require_subcommand(1);

  std::size_t group_cap = loopkit::kDefaultGroupCap;
  std::uint64_t seed = loopkit::kDefaultCorpusSeed;
  bool json = false;
  app.add_option("--max-group-order", group_cap, "cap on enumerated group orders");
  app.add_option("--seed", seed, "seed for the randomized corpus extensions");
  app.add_flag("--json", json, "machine-readable output");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full structural report for a .tbl file");
  std::string analyze_path;
  analyze->add_option("table", analyze_path, "Cayley table file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run a named theorem suite over the corpus");
  std::string suite;
  std::vector<std::string> corpus_tables;
  verify->add_option("--suite", suite, "suite name (see --list)")->required();
  verify->add_option("--tables", corpus_tables, "replace the default corpus with these .tbl files");

  // list suites
  auto* list = app.add_subcommand("list-suites", "print the available suite names");

  // gen
  auto* gen = app.add_subcommand("gen", "generate .tbl files");
  std::string gen_kind, gen_group_kind, gen_input, gen_out = ".";
  int gen_order = 0;
  int gen_count = 1;
  gen->add_option("kind", gen_kind, "group | chein | extension")->required();
  gen->add_option("--family", gen_group_kind, "group family (cyclic, dihedral, quaternion, symmetric)");
  gen->add_option("--order", gen_order, "group order");
  gen->add_option("--input", gen_input, "input group .tbl (chein)");
  gen->add_option("--count", gen_count, "number of random extensions");
  gen->add_option("-o,--out", gen_out, "output directory or file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      loopkit::FiniteLoop q = loopkit::read_table_file(analyze_path);
      loopkit::VerifyOptions opts;
      opts.group_cap = group_cap;
      loopkit::Report r = loopkit::analyze(q, analyze_path, opts);
      std::cout << (json ? loopkit::report_json(r) : loopkit::report_text(r));
      for (const auto& s : r.theorem_checks)
        if (!s.pass) return kExitCheckFailed;
      return kExitPass;
    }
    if (*verify) {
      loopkit::CorpusOptions copts;
      copts.seed = seed;
      loopkit::VerifyOptions opts;
      opts.group_cap = group_cap;
      auto corpus = load_corpus(copts, corpus_tables);
      loopkit::SuiteResult res = loopkit::run_suite(suite, corpus, opts);
      if (json)
        std::cout << loopkit::suites_json({res}, seed);
      else
        std::cout << loopkit::suites_text({res});
      return res.pass ? kExitPass : kExitCheckFailed;
    }
    if (*list) {
      for (const auto& n : loopkit::suite_names()) std::cout << n << '\n';
      return kExitPass;
    }
    if (*gen) {
      namespace fs = std::filesystem;
      if (gen_kind == "group") {
        if (gen_group_kind.empty() || gen_order <= 0)
          throw loopkit::Error("gen group requires --family and --order");
        loopkit::FiniteLoop g = loopkit::builtin_group(gen_group_kind, gen_order);
        fs::path out = fs::is_directory(gen_out)
                           ? fs::path(gen_out) / (gen_group_kind + "-" + std::to_string(gen_order) + ".tbl")
                           : fs::path(gen_out);
        loopkit::write_table_file(out, g, gen_group_kind + " group of order " + std::to_string(gen_order));
        std::cout << out.string() << '\n';
      } else if (gen_kind == "chein") {
        if (gen_input.empty()) throw loopkit::Error("gen chein requires --input");
        loopkit::FiniteLoop g = loopkit::read_table_file(gen_input);
        loopkit::FiniteLoop m = loopkit::chein_double(g);
        fs::path out = fs::is_directory(gen_out)
                           ? fs::path(gen_out) / ("chein-" + fs::path(gen_input).stem().string() + ".tbl")
                           : fs::path(gen_out);
        loopkit::write_table_file(out, m, "Chein double of " + gen_input);
        std::cout << out.string() << '\n';
      } else if (gen_kind == "extension") {
        loopkit::CorpusOptions copts;
        copts.seed = seed;
        copts.extensions = gen_count;
        auto corpus = loopkit::default_corpus(copts);
        fs::path dir = gen_out;
        if (!fs::is_directory(dir)) throw loopkit::Error("gen extension requires -o <directory>");
        int written = 0;
        for (const auto& entry : corpus) {
          if (entry.name.rfind("ext-", 0) != 0) continue;
          fs::path out = dir / (entry.name + ".tbl");
          loopkit::write_table_file(out, entry.loop, entry.name + " (seed " + std::to_string(seed) + ")");
          std::cout << out.string() << '\n';
          if (++written >= gen_count) break;
        }
      } else {
        throw loopkit::Error("unknown gen kind '" + gen_kind + "'");
      }
      return kExitPass;
    }
  } catch (const loopkit::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const loopkit::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const loopkit::BadTable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const loopkit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
