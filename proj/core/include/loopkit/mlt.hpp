#pragma once

#include <string>
#include <vector>

#include "loopkit/loop.hpp"
#include "loopkit/permgroup.hpp"
#include "loopkit/subloop.hpp"

namespace loopkit {

/// A standard generator of Inn(Q) tagged with its (u,v) provenance.
struct TaggedGenerator {
  enum class Kind { T, L, R };
  Kind kind;
  int u = 0;
  int v = 0;
  Perm perm;
  std::string name() const;
};

/// Translations, Mlt(Q), and Inn(Q) with its tagged standard generators.
/// Construction asserts that the stabilizer of 0 in Mlt(Q) equals the closure
/// of the standard generators.
class MltContext {
 public:
  static MltContext build(const FiniteLoop& q, std::size_t cap = kDefaultGroupCap);

  const FiniteLoop& loop() const { return loop_; }
  const PermGroup& mlt() const { return mlt_; }
  const PermGroup& inn() const { return inn_; }
  const std::vector<TaggedGenerator>& standard_generators() const { return std_gens_; }
  const Perm& left(int x) const { return left_[static_cast<std::size_t>(x)]; }
  const Perm& right(int x) const { return right_[static_cast<std::size_t>(x)]; }
  Perm middle(int x) const { return left(x) * right(x); }

 private:
  FiniteLoop loop_;
  std::vector<Perm> left_, right_;
  PermGroup mlt_, inn_;
  std::vector<TaggedGenerator> std_gens_;
};

/// Relative multiplication group Mlt_Q(S) = <L_s, R_s : s in S>.
PermGroup mlt_rel(const MltContext& ctx, const SubloopHandle& s, std::size_t cap = kDefaultGroupCap);
/// Same, straight from the translations (no enumerated Mlt needed).
PermGroup mlt_rel(const FiniteLoop& q, const SubloopHandle& s, std::size_t cap = kDefaultGroupCap);

/// C(Q,S): the elements of Mlt(Q) that centralize the cosets of S, together
/// with the coset labeling used. Construction cross-checks the filter against
/// the kernel of the induced homomorphism Mlt(Q) -> Mlt(Q/S).
struct CosetKernel {
  SubloopHandle s;
  std::vector<int> coset_of;  // Q-element -> quotient label
  PermGroup group;
};

CosetKernel coset_kernel(const MltContext& ctx, const SubloopHandle& s);

struct LsigmaDecomposition {
  int s;       // phi(0), asserted to lie in S
  Perm sigma;  // L_s^-1 phi, asserted to lie in Inn(Q) cap C(Q,S)
};

/// Lemma-3.1 decomposition phi = L_s sigma of an element of C(Q,S).
LsigmaDecomposition decompose_lsigma(const MltContext& ctx, const CosetKernel& c, const Perm& phi);

}  // namespace loopkit
