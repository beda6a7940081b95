#pragma once

#include <concepts>
#include <cstddef>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "loopkit/errors.hpp"

namespace loopkit {

inline constexpr std::size_t kDefaultGroupCap = 200000;

/// Multiplication context for a family of group elements. Elements must be
/// hashable via std::hash and comparable with ==.
template <class Ops>
concept GroupOps = requires(const Ops& ops, const typename Ops::Element& a,
                            const typename Ops::Element& b) {
  typename Ops::Element;
  { ops.mul(a, b) } -> std::same_as<typename Ops::Element>;
  { ops.inverse(a) } -> std::same_as<typename Ops::Element>;
  { ops.identity() } -> std::same_as<typename Ops::Element>;
};

/// A finite group held as a fully enumerated element list with a membership
/// index. Element 0 is the identity. BFS provenance (parent, generator) is
/// kept for every element so witness words can be reconstructed.
template <GroupOps Ops>
class EnumeratedGroup {
 public:
  using Element = typename Ops::Element;

  EnumeratedGroup() = default;

  /// Worklist closure of the generators. Throws CapExceeded past `cap`.
  static EnumeratedGroup close(const Ops& ops, std::vector<Element> gens,
                               std::size_t cap = kDefaultGroupCap) {
    EnumeratedGroup g;
    g.ops_ = ops;
    g.gens_ = dedupe(ops, std::move(gens));
    g.push(ops.identity(), -1, -1);
    std::deque<int> todo{0};
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop_front();
      for (std::size_t s = 0; s < g.gens_.size(); ++s) {
        Element t = ops.mul(g.elems_[static_cast<std::size_t>(cur)], g.gens_[s]);
        if (g.index_.find(t) == g.index_.end()) {
          if (g.elems_.size() >= cap) throw CapExceeded(g.elems_.size());
          todo.push_back(g.push(std::move(t), cur, static_cast<int>(s)));
        }
      }
    }
    return g;
  }

  /// Wrap an explicit element set as a group. Verifies the set is closed by
  /// finding a reduced generating set whose closure reproduces it exactly;
  /// throws NotASubgroup otherwise.
  static EnumeratedGroup from_elements(const Ops& ops, const std::vector<Element>& elems,
                                       std::size_t cap = kDefaultGroupCap) {
    std::unordered_map<Element, int> index;
    for (const auto& e : elems) index.emplace(e, static_cast<int>(index.size()));
    if (index.find(ops.identity()) == index.end()) throw NotASubgroup();
    std::vector<Element> gens;
    EnumeratedGroup g = close(ops, gens, cap);
    for (const auto& e : elems) {
      if (!g.contains(e)) {
        gens.push_back(e);
        g = close(ops, gens, cap);
      }
    }
    if (g.order() != index.size()) throw NotASubgroup();
    for (const auto& e : g.elems_)
      if (index.find(e) == index.end()) throw NotASubgroup();
    return g;
  }

  std::size_t order() const { return elems_.size(); }
  bool trivial() const { return elems_.size() <= 1; }
  const std::vector<Element>& elements() const { return elems_; }
  const std::vector<Element>& generators() const { return gens_; }
  const Ops& ops() const { return ops_; }
  const Element& identity() const { return elems_[0]; }

  bool contains(const Element& e) const { return index_.find(e) != index_.end(); }
  int index_of(const Element& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? -1 : it->second;
  }

  /// Generator-index word producing elements()[i] (left-to-right product).
  std::vector<int> word(int i) const {
    std::vector<int> out;
    while (i > 0) {
      out.push_back(prov_[static_cast<std::size_t>(i)].second);
      i = prov_[static_cast<std::size_t>(i)].first;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  int push(Element e, int parent, int gen) {
    int id = static_cast<int>(elems_.size());
    index_.emplace(e, id);
    elems_.push_back(std::move(e));
    prov_.emplace_back(parent, gen);
    return id;
  }

  static std::vector<Element> dedupe(const Ops& ops, std::vector<Element> gens) {
    std::vector<Element> out;
    std::unordered_map<Element, int> seen;
    for (auto& g : gens) {
      if (g == ops.identity()) continue;
      if (seen.emplace(g, 0).second) out.push_back(std::move(g));
    }
    return out;
  }

  Ops ops_{};
  std::vector<Element> elems_;
  std::unordered_map<Element, int> index_;
  std::vector<Element> gens_;
  std::vector<std::pair<int, int>> prov_;
};

template <GroupOps Ops>
int element_order(const Ops& ops, const typename Ops::Element& e) {
  auto acc = e;
  int k = 1;
  while (!(acc == ops.identity())) {
    acc = ops.mul(acc, e);
    ++k;
  }
  return k;
}

template <GroupOps Ops>
bool is_commutative_group(const EnumeratedGroup<Ops>& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(g.ops().mul(gens[i], gens[j]) == g.ops().mul(gens[j], gens[i]))) return false;
  return true;
}

template <GroupOps Ops>
bool is_subgroup_of(const EnumeratedGroup<Ops>& h, const EnumeratedGroup<Ops>& g) {
  if (h.order() > g.order()) return false;
  for (const auto& e : h.elements())
    if (!g.contains(e)) return false;
  return true;
}

/// H must be membership-contained in G. Conjugates every element of H by G's
/// generators (and their inverses).
template <GroupOps Ops>
bool is_normal_in(const EnumeratedGroup<Ops>& h, const EnumeratedGroup<Ops>& g) {
  if (!is_subgroup_of(h, g)) throw NotASubgroup();
  for (const auto& s : g.generators()) {
    auto si = g.ops().inverse(s);
    for (const auto& e : h.elements()) {
      if (!h.contains(g.ops().mul(si, g.ops().mul(e, s)))) return false;
      if (!h.contains(g.ops().mul(s, g.ops().mul(e, si)))) return false;
    }
  }
  return true;
}

/// Smallest subgroup of G containing `seed` and closed under conjugation by G.
template <GroupOps Ops>
EnumeratedGroup<Ops> normal_closure(const std::vector<typename Ops::Element>& seed,
                                    const EnumeratedGroup<Ops>& g,
                                    std::size_t cap = kDefaultGroupCap) {
  auto gens = seed;
  auto n = EnumeratedGroup<Ops>::close(g.ops(), gens, cap);
  for (;;) {
    std::vector<typename Ops::Element> fresh;
    for (const auto& s : g.generators()) {
      auto si = g.ops().inverse(s);
      for (const auto& e : n.elements()) {
        auto c = g.ops().mul(si, g.ops().mul(e, s));
        if (!n.contains(c)) fresh.push_back(std::move(c));
      }
    }
    if (fresh.empty()) return n;
    gens.insert(gens.end(), fresh.begin(), fresh.end());
    n = EnumeratedGroup<Ops>::close(g.ops(), gens, cap);
  }
}

template <GroupOps Ops>
struct SubnormalChain {
  bool subnormal = false;
  /// Orders of G = N_0 |> N_1 |> ... |> N_k = H when subnormal; the chain of
  /// iterated normal closures otherwise.
  std::vector<std::size_t> orders;
  std::vector<EnumeratedGroup<Ops>> groups;
};

/// Iterated normal closures of H descending from G; H is subnormal iff the
/// chain reaches H.
template <GroupOps Ops>
SubnormalChain<Ops> subnormal_chain(const EnumeratedGroup<Ops>& h, const EnumeratedGroup<Ops>& g,
                                    std::size_t cap = kDefaultGroupCap) {
  if (!is_subgroup_of(h, g)) throw NotASubgroup();
  SubnormalChain<Ops> out;
  out.groups.push_back(g);
  out.orders.push_back(g.order());
  while (out.groups.back().order() > h.order()) {
    auto next = normal_closure(h.generators(), out.groups.back(), cap);
    if (next.order() == out.groups.back().order()) {
      out.subnormal = false;
      return out;
    }
    out.groups.push_back(std::move(next));
    out.orders.push_back(out.groups.back().order());
  }
  out.subnormal = true;
  return out;
}

template <GroupOps Ops>
bool is_p_group(const EnumeratedGroup<Ops>& g, int p) {
  std::size_t n = g.order();
  while (n % static_cast<std::size_t>(p) == 0) n /= static_cast<std::size_t>(p);
  return n == 1;
}

inline bool is_p_power(std::size_t n, int p) {
  while (n % static_cast<std::size_t>(p) == 0) n /= static_cast<std::size_t>(p);
  return n == 1;
}

/// Largest normal p-subgroup, computed as the subgroup generated by every
/// element of p-power order whose normal closure in G is a p-group.
/// Conjugacy classes are deduplicated and closures abort early past the
/// p-part of |G|.
template <GroupOps Ops>
EnumeratedGroup<Ops> p_core(const EnumeratedGroup<Ops>& g, int p,
                            std::size_t cap = kDefaultGroupCap) {
  std::size_t p_part = 1;
  {
    std::size_t n = g.order();
    while (n % static_cast<std::size_t>(p) == 0) {
      n /= static_cast<std::size_t>(p);
      p_part *= static_cast<std::size_t>(p);
    }
  }
  std::vector<typename Ops::Element> core_gens;
  std::unordered_map<typename Ops::Element, char> visited;
  std::vector<typename Ops::Element> inv_gens;
  for (const auto& s : g.generators()) inv_gens.push_back(g.ops().inverse(s));
  for (const auto& e : g.elements()) {
    if (visited.find(e) != visited.end()) continue;
    int ord = element_order(g.ops(), e);
    if (ord == 1 || !is_p_power(static_cast<std::size_t>(ord), p)) {
      visited.emplace(e, 1);
      continue;
    }
    // conjugacy class orbit under the generators
    std::vector<typename Ops::Element> cls{e};
    visited.emplace(e, 1);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t s = 0; s < g.generators().size(); ++s) {
        auto c = g.ops().mul(inv_gens[s], g.ops().mul(cls[i], g.generators()[s]));
        if (visited.emplace(c, 1).second) cls.push_back(std::move(c));
      }
    }
    // normal closure of the class; abort once it cannot be a p-group
    bool pgrp = true;
    try {
      auto ncl = EnumeratedGroup<Ops>::close(g.ops(), cls, p_part);
      pgrp = is_p_power(ncl.order(), p);
    } catch (const CapExceeded&) {
      pgrp = false;
    }
    if (pgrp) core_gens.insert(core_gens.end(), cls.begin(), cls.end());
  }
  return EnumeratedGroup<Ops>::close(g.ops(), core_gens, cap);
}

template <GroupOps Ops>
EnumeratedGroup<Ops> center(const EnumeratedGroup<Ops>& g) {
  std::vector<typename Ops::Element> z;
  for (const auto& e : g.elements()) {
    bool central = true;
    for (const auto& s : g.generators()) {
      if (!(g.ops().mul(e, s) == g.ops().mul(s, e))) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(e);
  }
  return EnumeratedGroup<Ops>::from_elements(g.ops(), z);
}

/// Elements of p-power order of a commutative group (Lemma-3.3 style primary
/// component). Throws NotCommutative.
template <GroupOps Ops>
EnumeratedGroup<Ops> p_component(const EnumeratedGroup<Ops>& a, int p) {
  if (!is_commutative_group(a)) throw NotCommutative();
  std::vector<typename Ops::Element> part;
  for (const auto& e : a.elements())
    if (is_p_power(static_cast<std::size_t>(element_order(a.ops(), e)), p)) part.push_back(e);
  return EnumeratedGroup<Ops>::from_elements(a.ops(), part);
}

/// p-torsion subgroup {a : a^p = 1} of an abelian p-group.
template <GroupOps Ops>
EnumeratedGroup<Ops> elementary_abelian_socle(const EnumeratedGroup<Ops>& a, int p) {
  if (!is_commutative_group(a)) throw NotCommutative();
  if (!is_p_group(a, p)) throw NotASubgroup();
  std::vector<typename Ops::Element> soc;
  for (const auto& e : a.elements()) {
    auto acc = e;
    for (int i = 1; i < p; ++i) acc = a.ops().mul(acc, e);
    if (acc == a.ops().identity()) soc.push_back(e);
  }
  return EnumeratedGroup<Ops>::from_elements(a.ops(), soc);
}

template <GroupOps Ops>
EnumeratedGroup<Ops> intersection(const EnumeratedGroup<Ops>& a, const EnumeratedGroup<Ops>& b) {
  const auto& small = a.order() <= b.order() ? a : b;
  const auto& big = a.order() <= b.order() ? b : a;
  std::vector<typename Ops::Element> common;
  for (const auto& e : small.elements())
    if (big.contains(e)) common.push_back(e);
  return EnumeratedGroup<Ops>::from_elements(a.ops(), common);
}

}  // namespace loopkit
