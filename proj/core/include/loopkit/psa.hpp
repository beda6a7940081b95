#pragma once

#include <optional>
#include <vector>

#include "loopkit/mlt.hpp"

namespace loopkit {

/// A certified left pseudoautomorphism with companion: (c phi(x)) phi(y) =
/// c phi(xy) for all x, y.
struct PsaPair {
  int c = 0;
  Perm phi;
};

bool certify_psa(const FiniteLoop& q, int c, const Perm& phi);

/// Certifying constructor. Throws CertificationFailed.
PsaPair make_psa(const FiniteLoop& q, int c, Perm phi);

/// All companions of phi; empty or the coset Nuc_l(Q) c (asserted).
std::vector<int> companions(const FiniteLoop& q, const Perm& phi);

/// (c,phi)(d,psi) = (c phi(d), phi psi); the product is re-certified.
PsaPair psa_mul(const FiniteLoop& q, const PsaPair& a, const PsaPair& b);
/// (c,phi)^-1 = (phi^-1(c^-1), phi^-1).
PsaPair psa_inv(const FiniteLoop& q, const PsaPair& a);

struct Autotopism {
  Perm alpha, beta, gamma;
};

bool is_autotopism(const FiniteLoop& q, const Autotopism& t);

/// (c,phi) -> (L_c phi, phi, L_c phi).
Autotopism psa_to_atp(const FiniteLoop& q, const PsaPair& a);
/// Requires beta(1) = 1; then alpha = gamma and the pair is (alpha(1), beta).
PsaPair atp_to_psa(const FiniteLoop& q, const Autotopism& t);

/// Lemma 3.2: (c^{phi(x^-1)}, L_{phi(x)}^-1 phi L_x), where c^y = y^-1 c y.
PsaPair conj_psa(const FiniteLoop& q, int x, const PsaPair& a);

/// phi(1) = 1 and phi(x y x) = phi(x) phi(y) phi(x) for all pairs.
bool is_semiautomorphism(const FiniteLoop& q, const Perm& phi);

/// C0(Q,S): those L_s sigma in C(Q,S) whose sigma has a companion in S.
/// Asserted to be a subgroup normal in C(Q,S).
PermGroup c0_subgroup(const MltContext& ctx, const CosetKernel& c);

/// Proposition-3.4 homomorphism f : C(Q,S) -> Q/(Nuc(Q) S).
struct PsaHomReport {
  std::vector<int> image;  // per C(Q,S) element index: coset label in Q/(Nuc(Q)S)
  std::vector<int> nucs_coset_of;
  bool companion_choice_free = false;
  bool homomorphism = false;
  bool kernel_is_c0 = false;
  std::size_t kernel_order = 0;
};

PsaHomReport prop_d2_hom(const MltContext& ctx, const CosetKernel& c);

/// Corollary 3.6 chain Mlt_Q(S) <| C0(Q,S) <| C(Q,S) <| Mlt(Q) for normal,
/// 3-divisible S.
struct SeriesReport {
  std::size_t mlt_rel_order = 0, c0_order = 0, c_order = 0, mlt_order = 0;
  bool inclusions = false;
  bool mlt_rel_normal_in_c0 = false;
  bool c0_normal_in_c = false;
  bool c_normal_in_mlt = false;
  bool all() const { return inclusions && mlt_rel_normal_in_c0 && c0_normal_in_c && c_normal_in_mlt; }
};

SeriesReport verify_series(const MltContext& ctx, const SubloopHandle& s);

}  // namespace loopkit
