#include "loopkit/psa.hpp"

#include <algorithm>
#include <unordered_map>

#include "loopkit/errors.hpp"
#include "loopkit/loop.hpp"

namespace loopkit {

bool certify_psa(const FiniteLoop& q, int c, const Perm& phi) {
  if (phi.degree() != q.size() || !phi.is_bijection()) return false;
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y)
      if (q.mul(q.mul(c, phi[x]), phi[y]) != q.mul(c, phi[q.mul(x, y)])) return false;
  return true;
}

PsaPair make_psa(const FiniteLoop& q, int c, Perm phi) {
  if (!certify_psa(q, c, phi))
    throw CertificationFailed("companion " + std::to_string(c) + ", phi " + phi.str());
  return {c, std::move(phi)};
}

std::vector<int> companions(const FiniteLoop& q, const Perm& phi) {
  std::vector<int> out;
  for (int c = 0; c < q.size(); ++c)
    if (certify_psa(q, c, phi)) out.push_back(c);
  if (!out.empty()) {
    // the set must be Nuc_l(Q) c for any fixed member c
    auto nucl = nuclei(q).left_nucleus;
    std::vector<int> coset;
    for (int m : nucl.elements) coset.push_back(q.mul(m, out.front()));
    std::sort(coset.begin(), coset.end());
    if (coset != out) throw Error("companions: set is not a Nuc_l coset");
  }
  return out;
}

PsaPair psa_mul(const FiniteLoop& q, const PsaPair& a, const PsaPair& b) {
  return make_psa(q, q.mul(a.c, a.phi[b.c]), a.phi * b.phi);
}

PsaPair psa_inv(const FiniteLoop& q, const PsaPair& a) {
  Perm inv = a.phi.inverse();
  return make_psa(q, inv[q.inv(a.c)], std::move(inv));
}

bool is_autotopism(const FiniteLoop& q, const Autotopism& t) {
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y)
      if (q.mul(t.alpha[x], t.beta[y]) != t.gamma[q.mul(x, y)]) return false;
  return true;
}

Autotopism psa_to_atp(const FiniteLoop& q, const PsaPair& a) {
  Perm lc_phi = q.left_translation(a.c) * a.phi;
  Autotopism t{lc_phi, a.phi, lc_phi};
  if (!is_autotopism(q, t)) throw CertificationFailed("psa_to_atp produced a non-autotopism");
  return t;
}

PsaPair atp_to_psa(const FiniteLoop& q, const Autotopism& t) {
  if (!is_autotopism(q, t)) throw CertificationFailed("atp_to_psa input is not an autotopism");
  if (t.beta[0] != 0) throw BetaDoesNotFixIdentity();
  if (!(t.alpha == t.gamma)) throw Error("atp_to_psa: alpha != gamma despite beta(1) = 1");
  return make_psa(q, t.alpha[0], t.beta);
}

PsaPair conj_psa(const FiniteLoop& q, int x, const PsaPair& a) {
  int fx = a.phi[x];
  int fxinv = a.phi[q.inv(x)];
  // c^y = y^-1 c y, unambiguous in the diassociative hull
  int cc = q.mul(q.mul(q.inv(fxinv), a.c), fxinv);
  Perm psi = q.left_translation(fx).inverse() * a.phi * q.left_translation(x);
  return make_psa(q, cc, std::move(psi));
}

bool is_semiautomorphism(const FiniteLoop& q, const Perm& phi) {
  if (phi.degree() != q.size() || !phi.is_bijection() || phi[0] != 0) return false;
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y)
      if (phi[q.mul(x, q.mul(y, x))] != q.mul(phi[x], q.mul(phi[y], phi[x]))) return false;
  return true;
}

namespace {

// companion sets memoized per sigma (shared by c0_subgroup and prop_d2_hom)
class CompanionCache {
 public:
  explicit CompanionCache(const FiniteLoop& q) : q_(q) {}
  const std::vector<int>& of(const Perm& sigma) {
    auto it = cache_.find(sigma);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(sigma, companions(q_, sigma)).first->second;
  }

 private:
  const FiniteLoop& q_;
  std::unordered_map<Perm, std::vector<int>> cache_;
};

}  // namespace

PermGroup c0_subgroup(const MltContext& ctx, const CosetKernel& c) {
  const FiniteLoop& q = ctx.loop();
  CompanionCache cache(q);
  std::vector<Perm> elems;
  for (const Perm& phi : c.group.elements()) {
    auto dec = decompose_lsigma(ctx, c, phi);
    bool hit = false;
    for (int comp : cache.of(dec.sigma))
      if (c.s.contains(comp)) {
        hit = true;
        break;
      }
    if (hit) elems.push_back(phi);
  }
  PermOps ops{q.size()};
  PermGroup c0 = PermGroup::from_elements(ops, elems);  // throws NotASubgroup if not closed
  if (!is_normal_in(c0, c.group)) throw Error("c0_subgroup: C0 is not normal in C(Q,S)");
  return c0;
}

PsaHomReport prop_d2_hom(const MltContext& ctx, const CosetKernel& c) {
  const FiniteLoop& q = ctx.loop();
  PsaHomReport rep;

  // Nuc(Q)S as a normal subloop and its coset labels
  auto nuc = nuclei(q).nucleus;
  std::vector<int> seed = nuc.elements;
  seed.insert(seed.end(), c.s.elements.begin(), c.s.elements.end());
  SubloopHandle nucs = normal_subloop_closure(q, seed);
  QuotientLoop quo = quotient(q, nucs);
  rep.nucs_coset_of = quo.projection;

  CompanionCache cache(q);
  const auto& elems = c.group.elements();
  rep.image.resize(elems.size());
  rep.companion_choice_free = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto dec = decompose_lsigma(ctx, c, elems[i]);
    const auto& comps = cache.of(dec.sigma);
    if (comps.empty()) throw NoCompanion();
    int label = rep.nucs_coset_of[static_cast<std::size_t>(comps.front())];
    for (int d : comps)
      if (rep.nucs_coset_of[static_cast<std::size_t>(d)] != label) rep.companion_choice_free = false;
    rep.image[i] = label;
  }

  rep.homomorphism = true;
  for (std::size_t i = 0; i < elems.size() && rep.homomorphism; ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      Perm prod = elems[i] * elems[j];
      int k = c.group.index_of(prod);
      if (k < 0) throw Error("prop_d2_hom: C(Q,S) not closed");
      if (rep.image[static_cast<std::size_t>(k)] !=
          quo.loop.mul(rep.image[i], rep.image[j])) {
        rep.homomorphism = false;
        break;
      }
    }

  PermGroup c0 = c0_subgroup(ctx, c);
  rep.kernel_order = 0;
  rep.kernel_is_c0 = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool in_kernel = rep.image[i] == 0;
    if (in_kernel) ++rep.kernel_order;
    if (in_kernel != c0.contains(elems[i])) rep.kernel_is_c0 = false;
  }
  return rep;
}

SeriesReport verify_series(const MltContext& ctx, const SubloopHandle& s) {
  const FiniteLoop& q = ctx.loop();
  {
    SubLoopView view = restrict_to(q, s);
    if (!is_d_divisible(view.loop, 3)) throw NotThreeDivisible();
  }
  CosetKernel c = coset_kernel(ctx, s);  // throws NotNormal
  PermGroup rel = mlt_rel(ctx, s);
  PermGroup c0 = c0_subgroup(ctx, c);

  SeriesReport rep;
  rep.mlt_rel_order = rel.order();
  rep.c0_order = c0.order();
  rep.c_order = c.group.order();
  rep.mlt_order = ctx.mlt().order();
  rep.inclusions = is_subgroup_of(rel, c0) && is_subgroup_of(c0, c.group) &&
                   is_subgroup_of(c.group, ctx.mlt());
  rep.mlt_rel_normal_in_c0 = is_normal_in(rel, c0);
  rep.c0_normal_in_c = is_normal_in(c0, c.group);
  rep.c_normal_in_mlt = is_normal_in(c.group, ctx.mlt());
  return rep;
}

}  // namespace loopkit
