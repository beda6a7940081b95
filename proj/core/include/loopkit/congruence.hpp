#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "loopkit/extension.hpp"
#include "loopkit/subloop.hpp"

namespace loopkit {

struct OracleResult {
  bool abelian = false;
  std::string clause;        // violated clause, empty on success
  std::vector<int> witness;  // witness tuple for the violated clause
  explicit operator bool() const { return abelian; }
};

/// Theorem-2.1(ii) oracle: every standard generator of Inn(Q) restricts to an
/// automorphism of X (plus a 100-sample of full inner mappings), and the
/// commutator/associator clauses hold. Throws NotNormal.
OracleResult abelian_oracle(const FiniteLoop& q, const SubloopHandle& x);

/// Moufang criterion: automorphism restriction plus u(xy) = (uy)x.
/// Throws NotMoufang, NotNormal.
OracleResult abelian_moufang(const FiniteLoop& q, const SubloopHandle& x);

/// 3-divisible Moufang criterion: u(xy) = (uy)x only.
/// Throws NotMoufang, NotThreeDivisible, NotNormal.
OracleResult abelian_3div(const FiniteLoop& q, const SubloopHandle& x);

/// Extracts the abelian-extension data of Q over X for the given transversal
/// (tables are forced by the transversal; the reconstruction identity and
/// normalizations are verified, and on Moufang Q the closed forms
/// phi = L_{r,s} T_s^-1 L_{s^-1,r}|X and psi = L_{r,s}|X are asserted).
/// Throws NotAbelianCongruence, BadTransversal.
ExtensionData extract_extension(const FiniteLoop& q, const SubloopHandle& x,
                                std::span<const int> transversal);

/// Least-element-per-coset transversal.
std::vector<int> canonical_transversal(const FiniteLoop& q, const SubloopHandle& x);

struct SolvabilitySeries {
  bool solvable = false;
  /// Q = S_0 > S_1 > ... > S_k = {0} as subsets of Q (present when solvable).
  std::vector<SubloopHandle> series;
};

/// Derived chain: D(Q) = normal closure of all commutators and associators.
SolvabilitySeries is_classically_solvable(const FiniteLoop& q);

/// Recursion on abelian-congruence-inducing normal subloops, minimal first.
SolvabilitySeries is_congruence_solvable(const FiniteLoop& q);

struct TrialitySeed {
  int p = 0;
  SubloopHandle s;
};

/// First nontrivial term A of the classical series, a prime p | |A|, and the
/// p-primary component of A (normal in Q by the Lemma-3.3 argument; the
/// invariance is re-verified). Throws NucleusNotTrivial, NotSolvable.
/// `require_trivial_nucleus = false` lifts the nucleus precondition (the seed
/// itself only needs classical solvability).
TrialitySeed find_triality_seed(const FiniteLoop& q, bool require_trivial_nucleus = true);

}  // namespace loopkit
