#include "loopkit/triality.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "loopkit/congruence.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/psa.hpp"

namespace loopkit {

namespace {

// S3 as permutations of 3 symbols: {e, rho, rho^2, sigma, sigma rho, sigma rho^2}
// with rho = (0 1 2) and sigma = (0 1); composition applies the right factor first.
struct S3Tables {
  int mul[6][6];
  int inv[6];
  int decomp_i[6];  // w = sigma^i rho^j
  int decomp_j[6];
  S3Tables() {
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2},  // e
        {1, 2, 0},  // rho
        {2, 0, 1},  // rho^2
        {1, 0, 2},  // sigma
        {0, 2, 1},  // sigma rho
        {2, 1, 0},  // sigma rho^2
    }};
    auto find = [&](const std::array<int, 3>& p) {
      for (int k = 0; k < 6; ++k)
        if (perms[static_cast<std::size_t>(k)] == p) return k;
      return -1;
    };
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i)
          c[static_cast<std::size_t>(i)] =
              perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                  perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
        mul[a][b] = find(c);
      }
    for (int a = 0; a < 6; ++a) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i)
        c[static_cast<std::size_t>(perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)])] = i;
      inv[a] = find(c);
    }
    const int di[6] = {0, 0, 0, 1, 1, 1};
    const int dj[6] = {0, 1, 2, 0, 1, 2};
    for (int a = 0; a < 6; ++a) {
      decomp_i[a] = di[a];
      decomp_j[a] = dj[a];
    }
  }
};

const S3Tables& s3() {
  static const S3Tables t;
  return t;
}

std::string word_name(const MltContext& ctx, const PermGroup& mlt,
                      const std::vector<std::string>& gen_names, int index) {
  if (index == 0) return "1";
  std::string out;
  for (int g : mlt.word(index)) {
    if (!out.empty()) out += ' ';
    out += gen_names[static_cast<std::size_t>(g)];
  }
  (void)ctx;
  return out;
}

}  // namespace

int s3_mul(int a, int b) { return s3().mul[a][b]; }
int s3_inv(int a) { return s3().inv[a]; }

TrialityAction extend_triality(const MltContext& ctx) {
  const PermGroup& mlt = ctx.mlt();
  const FiniteLoop& q = ctx.loop();
  const int n = q.size();
  const std::size_t m = mlt.order();

  std::vector<std::string> gen_names;
  for (const Perm& g : mlt.generators()) {
    std::string name = "?";
    for (int x = 0; x < n; ++x) {
      if (g == ctx.left(x)) {
        name = "L_" + std::to_string(x);
        break;
      }
      if (g == ctx.right(x)) {
        name = "R_" + std::to_string(x);
        break;
      }
    }
    gen_names.push_back(name);
  }

  auto extend = [&](const char* label,
                    const std::vector<std::pair<int, int>>& seed) -> std::vector<std::int32_t> {
    std::vector<std::int32_t> image(m, -1);
    image[0] = 0;
    for (auto [src, dst] : seed) {
      if (image[static_cast<std::size_t>(src)] >= 0 &&
          image[static_cast<std::size_t>(src)] != dst)
        throw NotExtendable(std::string(label) + ": generator " +
                            word_name(ctx, mlt, gen_names, src) +
                            " is assigned two distinct images");
      image[static_cast<std::size_t>(src)] = dst;
    }
    // generator images under the map, in generator order
    std::vector<int> gen_image;
    for (const Perm& g : mlt.generators()) {
      int gi = mlt.index_of(g);
      gen_image.push_back(image[static_cast<std::size_t>(gi)]);
    }
    std::deque<int> todo{0};
    std::vector<char> queued(m, 0);
    queued[0] = 1;
    while (!todo.empty()) {
      int g = todo.front();
      todo.pop_front();
      for (std::size_t s = 0; s < mlt.generators().size(); ++s) {
        int t = mlt.index_of(mlt.elements()[static_cast<std::size_t>(g)] * mlt.generators()[s]);
        int ti = mlt.index_of(mlt.elements()[static_cast<std::size_t>(image[static_cast<std::size_t>(g)])] *
                              mlt.elements()[static_cast<std::size_t>(gen_image[s])]);
        if (image[static_cast<std::size_t>(t)] < 0)
          image[static_cast<std::size_t>(t)] = ti;
        else if (image[static_cast<std::size_t>(t)] != ti)
          throw NotExtendable(std::string(label) + ": conflict at words (" +
                              word_name(ctx, mlt, gen_names, g) + ") * " + gen_names[s] +
                              " vs " + word_name(ctx, mlt, gen_names, t));
        if (!queued[static_cast<std::size_t>(t)]) {
          queued[static_cast<std::size_t>(t)] = 1;
          todo.push_back(t);
        }
      }
    }
    std::vector<char> hit(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (image[i] < 0) throw NotExtendable(std::string(label) + ": map not total");
      if (hit[static_cast<std::size_t>(image[i])])
        throw NotExtendable(std::string(label) + ": map not bijective");
      hit[static_cast<std::size_t>(image[i])] = 1;
    }
    return image;
  };

  std::vector<std::pair<int, int>> sigma_seed, rho_seed;
  for (int x = 0; x < n; ++x) {
    int lx = mlt.index_of(ctx.left(x));
    int rx = mlt.index_of(ctx.right(x));
    int lxi = mlt.index_of(ctx.left(x).inverse());
    int rxi = mlt.index_of(ctx.right(x).inverse());
    int mxi = mlt.index_of(ctx.middle(x).inverse());
    sigma_seed.emplace_back(lx, rxi);
    sigma_seed.emplace_back(rx, lxi);
    rho_seed.emplace_back(lx, rx);
    rho_seed.emplace_back(rx, mxi);
  }

  TrialityAction act;
  act.ctx = &ctx;
  act.sigma = extend("sigma", sigma_seed);
  act.rho = extend("rho", rho_seed);

  auto compose_map = [&](const std::vector<std::int32_t>& f, const std::vector<std::int32_t>& g) {
    std::vector<std::int32_t> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = f[static_cast<std::size_t>(g[i])];
    return out;
  };
  auto is_id = [&](const std::vector<std::int32_t>& f) {
    for (std::size_t i = 0; i < m; ++i)
      if (f[i] != static_cast<std::int32_t>(i)) return false;
    return true;
  };

  // S3 relations (possibly degenerately)
  if (!is_id(compose_map(act.sigma, act.sigma)))
    throw NotExtendable("sigma^2 != id");
  if (!is_id(compose_map(act.rho, compose_map(act.rho, act.rho))))
    throw NotExtendable("rho^3 != id");
  {
    auto srs = compose_map(act.sigma, compose_map(act.rho, act.sigma));
    auto r2 = compose_map(act.rho, act.rho);
    if (srs != r2) throw NotExtendable("sigma rho sigma != rho^-1");
  }

  act.alpha = compose_map(act.sigma, act.rho);
  act.beta = compose_map(act.sigma, compose_map(act.rho, act.rho));

  act.s3_map[0].resize(m);
  for (std::size_t i = 0; i < m; ++i) act.s3_map[0][i] = static_cast<std::int32_t>(i);
  act.s3_map[1] = act.rho;
  act.s3_map[2] = compose_map(act.rho, act.rho);
  act.s3_map[3] = act.sigma;
  act.s3_map[4] = act.alpha;
  act.s3_map[5] = act.beta;

  // the assignment w -> map must be a homomorphism under the fixed tables
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      auto lhs = act.s3_map[static_cast<std::size_t>(s3_mul(a, b))];
      auto rhs = compose_map(act.s3_map[static_cast<std::size_t>(a)],
                             act.s3_map[static_cast<std::size_t>(b)]);
      if (lhs != rhs) throw Error("extend_triality: S3 action tables inconsistent");
    }
  return act;
}

SdElem SdOps::mul(const SdElem& a, const SdElem& b) const {
  const PermGroup& mlt = act->ctx->mlt();
  int wb = act->apply(a.w, b.g);
  int g = mlt.index_of(mlt.elements()[static_cast<std::size_t>(a.g)] *
                       mlt.elements()[static_cast<std::size_t>(wb)]);
  return {g, static_cast<std::int8_t>(s3_mul(a.w, b.w))};
}

SdElem SdOps::inverse(const SdElem& a) const {
  const PermGroup& mlt = act->ctx->mlt();
  int wi = s3_inv(a.w);
  int gi = mlt.index_of(mlt.elements()[static_cast<std::size_t>(a.g)].inverse());
  return {act->apply(wi, gi), static_cast<std::int8_t>(wi)};
}

SdGroup build_semidirect(const TrialityAction& act, std::size_t cap) {
  const PermGroup& mlt = act.ctx->mlt();
  if (6 * mlt.order() > cap) throw CapExceeded(6 * mlt.order());
  SdOps ops{&act};
  std::vector<SdElem> gens;
  for (const Perm& g : mlt.generators()) gens.push_back({mlt.index_of(g), 0});
  gens.push_back({0, static_cast<std::int8_t>(kS3Sigma)});
  gens.push_back({0, static_cast<std::int8_t>(kS3Rho)});
  SdGroup sd = SdGroup::close(ops, gens, cap);
  if (sd.order() != 6 * mlt.order())
    throw Error("build_semidirect: order != 6 |Mlt(Q)|");

  // spot-checks: inverses exhaustively, associativity on seeded random triples
  for (const SdElem& e : sd.elements())
    if (!(ops.mul(e, ops.inverse(e)) == ops.identity()))
      throw Error("build_semidirect: inverse check failed");
  std::mt19937_64 rng(0x5eedull ^ sd.order());
  std::uniform_int_distribution<std::size_t> pick(0, sd.order() - 1);
  for (int i = 0; i < 2000; ++i) {
    const SdElem &a = sd.elements()[pick(rng)], &b = sd.elements()[pick(rng)],
                 &c = sd.elements()[pick(rng)];
    if (!(ops.mul(ops.mul(a, b), c) == ops.mul(a, ops.mul(b, c))))
      throw Error("build_semidirect: associativity spot-check failed");
  }
  return sd;
}

bool is_triality_subgroup(const TrialityAction& act, const PermGroup& u) {
  const PermGroup& mlt = act.ctx->mlt();
  std::vector<char> member(mlt.order(), 0);
  for (const Perm& p : u.elements()) {
    int i = mlt.index_of(p);
    if (i < 0) throw NotASubgroup();
    member[static_cast<std::size_t>(i)] = 1;
  }
  for (const Perm& p : u.elements()) {
    int i = mlt.index_of(p);
    if (!member[static_cast<std::size_t>(act.sigma[static_cast<std::size_t>(i)])]) return false;
    if (!member[static_cast<std::size_t>(act.rho[static_cast<std::size_t>(i)])]) return false;
  }
  return true;
}

SubloopHandle orbit_subloop(const TrialityAction& act, const PermGroup& u) {
  const MltContext& ctx = *act.ctx;
  if (!is_triality_subgroup(act, u)) throw NotTriality();
  if (!is_normal_in(u, ctx.mlt())) throw NotNormal();
  std::vector<int> orbit;
  for (const Perm& p : u.elements()) orbit.push_back(p[0]);
  SubloopHandle s = SubloopHandle::from_elements(ctx.loop(), orbit);
  if (!is_subloop(ctx.loop(), s) || !is_normal_subloop(ctx.loop(), s))
    throw Error("orbit_subloop: orbit of 1 is not a normal subloop");
  PermGroup rel = mlt_rel(ctx, s);
  for (const Perm& p : rel.elements())
    if (!u.contains(p)) throw Error("orbit_subloop: Mlt_Q(S) not contained in U");
  return s;
}

SubloopHandle abelian_from_triality(const TrialityAction& act, const PermGroup& u) {
  const MltContext& ctx = *act.ctx;
  const FiniteLoop& q = ctx.loop();
  if (!is_moufang(q).holds) throw NotMoufang();
  if (!is_d_divisible(q, 3)) throw NotThreeDivisible();
  if (u.trivial()) throw Error("abelian_from_triality: U is trivial");
  if (!is_commutative_group(u)) throw NotCommutative();
  SubloopHandle x = orbit_subloop(act, u);
  if (x.is_trivial()) throw OrbitTrivial();
  if (!abelian_3div(q, x))
    throw Error("abelian_from_triality: X = U(1) fails the 3-divisible criterion");
  SubLoopView view = restrict_to(q, x);
  if (!is_associative(view.loop) || !is_commutative(view.loop))
    throw Error("abelian_from_triality: X is not a commutative group");
  return x;
}

PermGroup find_normal_triality_p_subgroup(const TrialityAction& act, const SubloopHandle& s,
                                          int p, std::size_t cap) {
  const MltContext& ctx = *act.ctx;
  const FiniteLoop& q = ctx.loop();
  if (p == 3) throw Error("find_normal_triality_p_subgroup: p = 3 excluded");
  if (!is_d_divisible(q, 3)) throw NotThreeDivisible();
  if (s.is_trivial()) throw Error("find_normal_triality_p_subgroup: S is trivial");
  if (!is_p_power(static_cast<std::size_t>(s.size()), p))
    throw Error("find_normal_triality_p_subgroup: S is not a p-subloop");
  if (!is_normal_subloop(q, s)) throw NotNormal();

  PermGroup rel = mlt_rel(ctx, s, cap);
  if (!is_p_group(rel, p))
    throw Error("find_normal_triality_p_subgroup: Mlt_Q(S) is not a p-group");
  SeriesReport series = verify_series(ctx, s);
  if (!series.all())
    throw Error("find_normal_triality_p_subgroup: series (3.1) failed to verify");

  SdGroup sd = build_semidirect(act, cap);
  SdGroup u0 = p_core(sd, p, cap);
  if (u0.trivial()) throw EmptyCore("p-core of Mlt(Q) x| S3 is trivial");

  std::vector<Perm> u1_elems;
  for (const SdElem& e : u0.elements())
    if (e.w == 0) u1_elems.push_back(ctx.mlt().elements()[static_cast<std::size_t>(e.g)]);
  if (u1_elems.size() <= 1) throw EmptyCore("p-core meets Mlt(Q) trivially");
  PermOps ops{q.size()};
  PermGroup u1 = PermGroup::from_elements(ops, u1_elems);

  PermGroup z = center(u1);
  PermGroup soc = elementary_abelian_socle(z, p);
  if (soc.trivial()) throw EmptyCore("socle of the center is trivial");
  if (!is_commutative_group(soc)) throw NotCommutative();
  if (!is_normal_in(soc, ctx.mlt()))
    throw Error("find_normal_triality_p_subgroup: result not normal in Mlt(Q)");
  if (!is_triality_subgroup(act, soc)) throw NotTriality();
  return soc;
}

}  // namespace loopkit
