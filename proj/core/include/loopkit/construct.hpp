#pragma once

#include <string>
#include <vector>

#include "loopkit/loop.hpp"

namespace loopkit {

FiniteLoop cyclic_group(int n);
/// Dihedral group of the given (even) order 2m, m >= 1.
FiniteLoop dihedral_group(int order);
/// Dicyclic (generalized quaternion for 2-power orders) group of order 4m.
FiniteLoop quaternion_group(int order);
FiniteLoop symmetric_group(int k);
FiniteLoop direct_product(const FiniteLoop& a, const FiniteLoop& b);

/// Chein double M(G,2) on G u Gu: g*h = gh, g*(hu) = (hg)u,
/// (gu)*h = (g h^-1)u, (gu)*(hu) = h^-1 g. Requires G associative.
FiniteLoop chein_double(const FiniteLoop& g);

/// "group <kind> <order>" as exposed by the CLI generator.
FiniteLoop builtin_group(const std::string& kind, int order);
std::vector<std::string> builtin_group_kinds();

/// Exhaustive backtracking over identity-preserving bijections; n <= 16.
bool is_isomorphic(const FiniteLoop& a, const FiniteLoop& b);

}  // namespace loopkit
