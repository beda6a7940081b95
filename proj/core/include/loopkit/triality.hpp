#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "loopkit/mlt.hpp"

namespace loopkit {

/// The triality automorphisms sigma: L_x -> R_x^-1, R_x -> L_x^-1 and
/// rho: L_x -> R_x, R_x -> M_x^-1 extended to all of Mlt(Q), stored as index
/// maps on the enumerated group (they are abstract automorphisms, generally
/// not induced by relabeling points). s3_map[w] is the automorphism attached
/// to the S3 element w (permutations of 3 symbols, identity first,
/// rho = (0 1 2), sigma = (0 1)).
struct TrialityAction {
  const MltContext* ctx = nullptr;
  std::vector<std::int32_t> sigma, rho;
  std::vector<std::int32_t> alpha, beta;  // alpha = sigma rho, beta = sigma rho^2
  std::array<std::vector<std::int32_t>, 6> s3_map;

  int apply(int w, int mlt_index) const { return s3_map[static_cast<std::size_t>(w)][static_cast<std::size_t>(mlt_index)]; }
};

/// S3 multiplication/inversion tables for the fixed symbol order
/// {e, rho, rho^2, sigma, sigma rho, sigma rho^2}.
int s3_mul(int a, int b);
int s3_inv(int a);
inline constexpr int kS3Identity = 0;
inline constexpr int kS3Rho = 1;
inline constexpr int kS3Sigma = 3;

/// Extends the generator assignment by breadth-first simultaneous closure.
/// A conflict proves no extension exists and raises NotExtendable with the
/// conflicting word pair. Success verifies the S3 relations and the
/// translation images.
TrialityAction extend_triality(const MltContext& ctx);

/// Element (g, w) of Mlt(Q) x S3 with product (g,w)(h,v) = (g w(h), wv).
struct SdElem {
  std::int32_t g = 0;
  std::int8_t w = 0;
  bool operator==(const SdElem&) const = default;
};

struct SdOps {
  using Element = SdElem;
  const TrialityAction* act = nullptr;
  SdElem mul(const SdElem& a, const SdElem& b) const;
  SdElem inverse(const SdElem& a) const;
  SdElem identity() const { return {0, 0}; }
};

using SdGroup = EnumeratedGroup<SdOps>;

/// The full 6|Mlt(Q)|-element semidirect product (the underlying set is
/// always Mlt x S3; the S3 action may be non-faithful). Group axioms are
/// spot-checked: identity and inverses exhaustively, associativity on seeded
/// random triples.
SdGroup build_semidirect(const TrialityAction& act, std::size_t cap = kDefaultGroupCap);

/// sigma(U) = U and rho(U) = U; when U is normal in Mlt(Q) the equivalence
/// with U normal in Mlt(Q) x| S3 is additionally asserted.
bool is_triality_subgroup(const TrialityAction& act, const PermGroup& u);

/// Lemma 4.1: S = U(1) for normal triality U; asserts S is a normal subloop
/// and Mlt_Q(S) <= U.
SubloopHandle orbit_subloop(const TrialityAction& act, const PermGroup& u);

/// Proposition 4.2: for 3-divisible Moufang Q and a nontrivial commutative
/// normal triality subgroup U, X = U(1) induces an abelian congruence
/// (re-verified through the 3-divisible criterion).
SubloopHandle abelian_from_triality(const TrialityAction& act, const PermGroup& u);

/// Proposition 5.6 pipeline: check Mlt_Q(S) is a p-group, verify series
/// (3.1), extend by S3, take the p-core of the semidirect product, intersect
/// with Mlt(Q), and return the socle of the center. Asserts the result is
/// nontrivial, commutative, normal in Mlt(Q) and triality-invariant.
PermGroup find_normal_triality_p_subgroup(const TrialityAction& act, const SubloopHandle& s, int p,
                                          std::size_t cap = kDefaultGroupCap);

}  // namespace loopkit

template <>
struct std::hash<loopkit::SdElem> {
  std::size_t operator()(const loopkit::SdElem& e) const noexcept {
    return static_cast<std::size_t>(e.g) * 6u + static_cast<std::size_t>(e.w);
  }
};
