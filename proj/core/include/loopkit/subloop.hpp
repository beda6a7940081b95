#pragma once

#include <span>
#include <vector>

#include "loopkit/loop.hpp"

namespace loopkit {

/// A subloop as a sorted element set (always contains 0) plus membership mask.
struct SubloopHandle {
  std::vector<int> elements;
  std::vector<char> mask;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const { return mask[static_cast<std::size_t>(x)] != 0; }
  bool operator==(const SubloopHandle& o) const { return elements == o.elements; }
  bool is_whole(const FiniteLoop& q) const { return size() == q.size(); }
  bool is_trivial() const { return size() == 1; }

  static SubloopHandle from_elements(const FiniteLoop& q, std::vector<int> elems);
};

/// Worklist closure of seed (plus 0) under mul, ldiv and rdiv.
SubloopHandle subloop_closure(const FiniteLoop& q, std::span<const int> seed);

bool is_subloop(const FiniteLoop& q, const SubloopHandle& s);

/// Invariance under every standard generator of Inn(Q).
bool is_normal_subloop(const FiniteLoop& q, const SubloopHandle& s);

/// Smallest normal subloop containing seed: combined closure under
/// mul/divisions and the standard inner generators.
SubloopHandle normal_subloop_closure(const FiniteLoop& q, std::span<const int> seed);

/// The complete list of normal subloops: normal closures of singletons, then
/// closure of that family under joins. Sorted by size, then lexicographically.
std::vector<SubloopHandle> normal_subloops(const FiniteLoop& q);

/// Every subloop, found by closing the generating-set lattice. Guarded to
/// n <= 24 (used for cross-checks only).
std::vector<SubloopHandle> all_subloops(const FiniteLoop& q);

struct Nuclei {
  SubloopHandle nucleus;
  SubloopHandle left_nucleus;
  SubloopHandle center;
};

/// Exhaustive membership scan for Nuc, Nuc_l and Z. For Moufang loops the
/// equality Nuc = Nuc_l is asserted.
Nuclei nuclei(const FiniteLoop& q);

struct QuotientLoop {
  FiniteLoop loop;
  std::vector<int> projection;  // element of Q -> element of Q/X
};

/// Cosets labeled by least element (coset of 0 is 0). Verifies X is normal
/// and that the coset product is well defined. Throws NotNormal.
QuotientLoop quotient(const FiniteLoop& q, const SubloopHandle& x);

struct SubLoopView {
  FiniteLoop loop;
  std::vector<int> to_parent;  // element of the subloop -> element of Q
};

SubLoopView restrict_to(const FiniteLoop& q, const SubloopHandle& s);

}  // namespace loopkit
