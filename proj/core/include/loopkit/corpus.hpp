#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loopkit/loop.hpp"

namespace loopkit {

inline constexpr std::uint64_t kDefaultCorpusSeed = 20240311;

struct CorpusEntry {
  std::string name;
  FiniteLoop loop;
};

struct CorpusOptions {
  std::uint64_t seed = kDefaultCorpusSeed;
  int extensions = 20;
};

/// Default corpus: every built-in group of order <= 16, Chein doubles of the
/// nonabelian built-ins of order <= 12 (isomorphic duplicates dropped), and
/// `extensions` seeded random abelian extensions.
std::vector<CorpusEntry> default_corpus(const CorpusOptions& opts = {});

}  // namespace loopkit
