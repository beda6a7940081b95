#include "loopkit/corpus.hpp"

#include <random>

#include "loopkit/construct.hpp"
#include "loopkit/extension.hpp"

namespace loopkit {

std::vector<CorpusEntry> default_corpus(const CorpusOptions& opts) {
  std::vector<CorpusEntry> out;

  for (int n = 1; n <= 16; ++n)
    out.push_back({"cyclic-" + std::to_string(n), cyclic_group(n)});
  for (int n = 4; n <= 16; n += 2)
    out.push_back({"dihedral-" + std::to_string(n), dihedral_group(n)});
  for (int n = 8; n <= 16; n += 4)
    out.push_back({"quaternion-" + std::to_string(n), quaternion_group(n)});
  out.push_back({"symmetric-3", symmetric_group(3)});

  // Chein doubles of the nonabelian built-ins of order <= 12; dihedral-6 is
  // isomorphic to symmetric-3, so it is dropped
  const std::vector<std::pair<std::string, FiniteLoop>> nonabelian = {
      {"symmetric-3", symmetric_group(3)},     {"dihedral-8", dihedral_group(8)},
      {"quaternion-8", quaternion_group(8)},   {"dihedral-10", dihedral_group(10)},
      {"dihedral-12", dihedral_group(12)},     {"quaternion-12", quaternion_group(12)},
  };
  for (const auto& [name, g] : nonabelian)
    out.push_back({"chein-" + name, chein_double(g)});

  std::mt19937_64 rng(opts.seed);
  const std::vector<std::pair<std::string, FiniteLoop>> bases = {
      {"Z2", cyclic_group(2)},
      {"Z3", cyclic_group(3)},
      {"Z4", cyclic_group(4)},
      {"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))},
      {"Z5", cyclic_group(5)},
      {"Z6", cyclic_group(6)},
  };
  const std::vector<std::pair<std::string, FiniteLoop>> factors = {
      {"Z2", cyclic_group(2)},
      {"Z3", cyclic_group(3)},
      {"Z4", cyclic_group(4)},
      {"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))},
  };
  std::uniform_int_distribution<std::size_t> pick_base(0, bases.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_factor(0, factors.size() - 1);
  int made = 0;
  while (made < opts.extensions) {
    const auto& [bn, base] = bases[pick_base(rng)];
    const auto& [fn, factor] = factors[pick_factor(rng)];
    if (base.size() * factor.size() > 16) continue;
    ExtensionData data = random_extension_data(base, factor, rng);
    out.push_back({"ext-" + std::to_string(made) + "-" + bn + "-by-" + fn,
                   build_abelian_extension(data)});
    ++made;
  }
  return out;
}

}  // namespace loopkit
