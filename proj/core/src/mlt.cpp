#include "loopkit/mlt.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "loopkit/errors.hpp"

namespace loopkit {

std::string TaggedGenerator::name() const {
  switch (kind) {
    case Kind::T: return "T_" + std::to_string(u);
    case Kind::L: return "L_{" + std::to_string(u) + "," + std::to_string(v) + "}";
    default: return "R_{" + std::to_string(u) + "," + std::to_string(v) + "}";
  }
}

MltContext MltContext::build(const FiniteLoop& q, std::size_t cap) {
  MltContext ctx;
  ctx.loop_ = q;
  const int n = q.size();
  ctx.left_.reserve(static_cast<std::size_t>(n));
  ctx.right_.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    ctx.left_.push_back(q.left_translation(x));
    ctx.right_.push_back(q.right_translation(x));
  }

  std::vector<Perm> trans;
  trans.insert(trans.end(), ctx.left_.begin(), ctx.left_.end());
  trans.insert(trans.end(), ctx.right_.begin(), ctx.right_.end());
  ctx.mlt_ = close_perms(std::move(trans), cap);

  std::set<std::vector<std::uint8_t>> seen;
  for (int u = 0; u < n; ++u) {
    Perm t = inner_t(q, u);
    if (seen.insert(t.images()).second) ctx.std_gens_.push_back({TaggedGenerator::Kind::T, u, 0, t});
    for (int v = 0; v < n; ++v) {
      Perm l = inner_l(q, u, v);
      if (seen.insert(l.images()).second) ctx.std_gens_.push_back({TaggedGenerator::Kind::L, u, v, l});
      Perm r = inner_r(q, u, v);
      if (seen.insert(r.images()).second) ctx.std_gens_.push_back({TaggedGenerator::Kind::R, u, v, r});
    }
  }
  std::vector<Perm> inn_gens;
  inn_gens.reserve(ctx.std_gens_.size());
  for (const auto& g : ctx.std_gens_) inn_gens.push_back(g.perm);
  if (inn_gens.empty()) inn_gens.push_back(Perm::identity(n));
  ctx.inn_ = close_perms(std::move(inn_gens), cap);

  // Inn(Q) must equal the stabilizer of 0 in Mlt(Q)
  std::size_t stab = 0;
  for (const Perm& p : ctx.mlt_.elements())
    if (p[0] == 0) {
      ++stab;
      if (!ctx.inn_.contains(p)) throw Error("MltContext: stabilizer element outside <standard generators>");
    }
  if (stab != ctx.inn_.order())
    throw Error("MltContext: |stabilizer of 0| != |<standard generators>|");
  return ctx;
}

PermGroup mlt_rel(const MltContext& ctx, const SubloopHandle& s, std::size_t cap) {
  return mlt_rel(ctx.loop(), s, cap);
}

PermGroup mlt_rel(const FiniteLoop& q, const SubloopHandle& s, std::size_t cap) {
  std::vector<Perm> gens;
  for (int e : s.elements) {
    gens.push_back(q.left_translation(e));
    gens.push_back(q.right_translation(e));
  }
  return close_perms(std::move(gens), cap);
}

CosetKernel coset_kernel(const MltContext& ctx, const SubloopHandle& s) {
  const FiniteLoop& q = ctx.loop();
  QuotientLoop quo = quotient(q, s);  // throws NotNormal

  CosetKernel out;
  out.s = s;
  out.coset_of = quo.projection;

  std::vector<Perm> kernel_elems;
  for (const Perm& p : ctx.mlt().elements()) {
    bool centralizes = true;
    for (int x = 0; x < q.size(); ++x)
      if (out.coset_of[static_cast<std::size_t>(p[x])] != out.coset_of[static_cast<std::size_t>(x)]) {
        centralizes = false;
        break;
      }
    if (centralizes) kernel_elems.push_back(p);
  }

  // cross-check: the same set must be the kernel of the induced map
  // Mlt(Q) -> Mlt(Q/S), computed via BFS provenance words
  {
    const FiniteLoop& qs = quo.loop;
    const PermGroup& mlt = ctx.mlt();
    std::vector<Perm> gen_images;
    for (const Perm& g : mlt.generators()) {
      // generators of Mlt are translations; map L_x -> L_xS, R_x -> R_xS.
      // identify which translation g is by looking it up
      bool mapped = false;
      for (int x = 0; x < q.size() && !mapped; ++x) {
        if (g == ctx.left(x)) {
          gen_images.push_back(qs.left_translation(out.coset_of[static_cast<std::size_t>(x)]));
          mapped = true;
        } else if (g == ctx.right(x)) {
          gen_images.push_back(qs.right_translation(out.coset_of[static_cast<std::size_t>(x)]));
          mapped = true;
        }
      }
      if (!mapped) throw Error("coset_kernel: Mlt generator is not a translation");
    }
    std::unordered_set<Perm> filtered(kernel_elems.begin(), kernel_elems.end());
    std::size_t kernel_count = 0;
    std::vector<Perm> image_of(mlt.order());
    image_of[0] = Perm::identity(qs.size());
    for (std::size_t i = 1; i < mlt.order(); ++i) {
      auto w = mlt.word(static_cast<int>(i));
      Perm img = image_of[0];
      // incremental: parent image * generator image; reconstruct cheaply
      // from the stored provenance word
      for (int gi : w) img = img * gen_images[static_cast<std::size_t>(gi)];
      image_of[i] = img;
      if (img.is_identity()) ++kernel_count;
    }
    ++kernel_count;  // the identity itself
    if (kernel_count != filtered.size())
      throw Error("coset_kernel: filter and kernel computations disagree");
    for (std::size_t i = 0; i < mlt.order(); ++i)
      if (image_of[i].is_identity() != (filtered.count(mlt.elements()[i]) > 0))
        throw Error("coset_kernel: filter and kernel disagree elementwise");
  }

  PermOps ops{q.size()};
  out.group = PermGroup::from_elements(ops, kernel_elems);
  return out;
}

LsigmaDecomposition decompose_lsigma(const MltContext& ctx, const CosetKernel& c, const Perm& phi) {
  if (!c.group.contains(phi)) throw NotInKernel();
  int s = phi[0];
  if (!c.s.contains(s)) throw Error("decompose_lsigma: phi(0) outside S");
  Perm sigma = ctx.left(s).inverse() * phi;
  if (!ctx.inn().contains(sigma)) throw Error("decompose_lsigma: sigma not in Inn(Q)");
  if (!c.group.contains(sigma)) throw Error("decompose_lsigma: sigma not in C(Q,S)");
  return {s, std::move(sigma)};
}

}  // namespace loopkit
