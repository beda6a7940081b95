#pragma once

#include <random>
#include <vector>

#include "loopkit/loop.hpp"
#include "loopkit/perm.hpp"

namespace loopkit {

/// Data of an abelian extension of X by F: per (r,s) in F x F an automorphism
/// pair (phi, psi) of X and an element theta of X, normalized by
/// phi[r][1] = psi[1][s] = id and theta[1][s] = theta[r][1] = 1.
struct ExtensionData {
  FiniteLoop base;    // X, a commutative group
  FiniteLoop factor;  // F
  std::vector<std::vector<Perm>> phi, psi;
  std::vector<std::vector<int>> theta;
  /// t: F-element -> Q-element with t(1) = 1. For loops built from abstract
  /// data this is the canonical embedding r -> (r, 1).
  std::vector<int> transversal;
};

/// Checks the ExtensionData invariants (normalizations, automorphism
/// property of every phi/psi entry). Throws on violation.
void validate_extension_data(const ExtensionData& data);

bool is_automorphism(const FiniteLoop& q, const Perm& p);

/// All automorphisms of a small loop (n <= 16), by backtracking.
std::vector<Perm> automorphism_group(const FiniteLoop& q);

/// Loop on pairs (r, x) (element index r*|X| + x) with
/// (r,x)(s,y) = (rs, phi[r][s](x) psi[r][s](y) theta[r][s]).
/// Validates the result; throws NotALoop with a witness if the data fails to
/// produce a Latin square.
FiniteLoop build_abelian_extension(const ExtensionData& data);

/// Seeded random data over Aut(X): identity actions on the r=1 and s=1
/// fringes, uniform otherwise.
ExtensionData random_extension_data(const FiniteLoop& x, const FiniteLoop& f, std::mt19937_64& rng);

}  // namespace loopkit
