#pragma once

#include <string>

#include "loopkit/group.hpp"
#include "loopkit/perm.hpp"

namespace loopkit {

struct PermOps {
  using Element = Perm;
  int degree = 0;
  Perm mul(const Perm& a, const Perm& b) const { return a * b; }
  Perm inverse(const Perm& a) const { return a.inverse(); }
  Perm identity() const { return Perm::identity(degree); }
};

using PermGroup = EnumeratedGroup<PermOps>;

inline PermGroup close_perms(std::vector<Perm> gens, std::size_t cap = kDefaultGroupCap) {
  if (gens.empty()) throw Error("close_perms: at least one generator required to fix the degree");
  PermOps ops{gens.front().degree()};
  return PermGroup::close(ops, std::move(gens), cap);
}

/// Debug dump: one image sequence per line.
inline std::string dump_group(const PermGroup& g) {
  std::string out;
  for (const auto& p : g.elements()) {
    out += p.str();
    out += '\n';
  }
  return out;
}

}  // namespace loopkit
