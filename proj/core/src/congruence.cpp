#include "loopkit/congruence.hpp"

#include <algorithm>

#include "loopkit/errors.hpp"

namespace loopkit {

namespace {

std::vector<Perm> standard_generator_perms(const FiniteLoop& q) {
  std::vector<Perm> gens;
  for (int u = 0; u < q.size(); ++u) {
    gens.push_back(inner_t(q, u));
    for (int v = 0; v < q.size(); ++v) {
      gens.push_back(inner_l(q, u, v));
      gens.push_back(inner_r(q, u, v));
    }
  }
  return gens;
}

bool restricts_to_automorphism(const FiniteLoop& q, const SubloopHandle& x, const Perm& g) {
  for (int e : x.elements)
    if (!x.contains(g[e])) return false;
  for (int a : x.elements)
    for (int b : x.elements)
      if (g[q.mul(a, b)] != q.mul(g[a], g[b])) return false;
  return true;
}

OracleResult fail(std::string clause, std::vector<int> witness) {
  OracleResult r;
  r.abelian = false;
  r.clause = std::move(clause);
  r.witness = std::move(witness);
  return r;
}

OracleResult automorphism_clause(const FiniteLoop& q, const SubloopHandle& x) {
  auto gens = standard_generator_perms(q);
  for (const Perm& g : gens)
    if (!restricts_to_automorphism(q, x, g))
      return fail("standard generator does not restrict to an automorphism of X", {});

  // Composing automorphisms stays an automorphism, so generators suffice;
  // asserted rather than assumed: sample 100 random full inner mappings.
  std::mt19937_64 rng(0xC0FFEEull ^ (static_cast<std::uint64_t>(q.size()) << 20) ^
                      static_cast<std::uint64_t>(x.size()));
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 6);
  for (int i = 0; i < 100; ++i) {
    Perm w = Perm::identity(q.size());
    int l = len(rng);
    for (int j = 0; j < l; ++j) w = w * gens[pick(rng)];
    if (!restricts_to_automorphism(q, x, w))
      return fail("sampled inner mapping does not restrict to an automorphism of X", {});
  }
  OracleResult ok;
  ok.abelian = true;
  return ok;
}

}  // namespace

OracleResult abelian_oracle(const FiniteLoop& q, const SubloopHandle& x) {
  if (!is_normal_subloop(q, x)) throw NotNormal();

  if (auto a = automorphism_clause(q, x); !a) return a;

  const int n = q.size();
  for (int a : x.elements)
    for (int b : x.elements) {
      if (commutator(q, a, b) != 0) return fail("[x,y] != 1", {a, b});
      for (int u = 0; u < n; ++u) {
        if (associator(q, a, b, u) != 0) return fail("[x,y,u] != 1", {a, b, u});
        if (associator(q, a, u, b) != 0) return fail("[x,u,y] != 1", {a, u, b});
        if (associator(q, u, a, b) != 0) return fail("[u,x,y] != 1", {u, a, b});
      }
    }

  // [x,u,v] = [x,u,w] whenever vX = wX; v fixed as the coset representative,
  // w ranging over vX
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<int> coset;
    for (int s : x.elements) {
      int w = q.mul(v, s);
      seen[static_cast<std::size_t>(w)] = 1;
      coset.push_back(w);
    }
    for (int a : x.elements)
      for (int u = 0; u < n; ++u) {
        int base = associator(q, a, u, v);
        for (int w : coset)
          if (associator(q, a, u, w) != base) return fail("[x,u,v] != [x,u,w]", {a, u, v, w});
      }
  }
  OracleResult ok;
  ok.abelian = true;
  return ok;
}

OracleResult abelian_moufang(const FiniteLoop& q, const SubloopHandle& x) {
  if (!is_moufang(q).holds) throw NotMoufang();
  if (!is_normal_subloop(q, x)) throw NotNormal();
  if (auto a = automorphism_clause(q, x); !a) return a;
  for (int u = 0; u < q.size(); ++u)
    for (int a : x.elements)
      for (int b : x.elements)
        if (q.mul(u, q.mul(a, b)) != q.mul(q.mul(u, b), a))
          return fail("u(xy) != (uy)x", {u, a, b});
  OracleResult ok;
  ok.abelian = true;
  return ok;
}

OracleResult abelian_3div(const FiniteLoop& q, const SubloopHandle& x) {
  if (!is_moufang(q).holds) throw NotMoufang();
  if (!is_d_divisible(q, 3)) throw NotThreeDivisible();
  if (!is_normal_subloop(q, x)) throw NotNormal();
  for (int u = 0; u < q.size(); ++u)
    for (int a : x.elements)
      for (int b : x.elements)
        if (q.mul(u, q.mul(a, b)) != q.mul(q.mul(u, b), a))
          return fail("u(xy) != (uy)x", {u, a, b});
  OracleResult ok;
  ok.abelian = true;
  return ok;
}

std::vector<int> canonical_transversal(const FiniteLoop& q, const SubloopHandle& x) {
  QuotientLoop quo = quotient(q, x);
  int m = quo.loop.size();
  std::vector<int> t(static_cast<std::size_t>(m), -1);
  for (int e = 0; e < q.size(); ++e) {
    int c = quo.projection[static_cast<std::size_t>(e)];
    if (t[static_cast<std::size_t>(c)] < 0 || e < t[static_cast<std::size_t>(c)])
      t[static_cast<std::size_t>(c)] = e;
  }
  return t;
}

ExtensionData extract_extension(const FiniteLoop& q, const SubloopHandle& x,
                                std::span<const int> transversal) {
  if (!abelian_oracle(q, x))
    throw NotAbelianCongruence("abelian_oracle rejected (Q, X)");

  QuotientLoop quo = quotient(q, x);
  const int m = quo.loop.size();
  const int nx = x.size();

  // organize the transversal by coset label; 1 in T, one hit per coset
  std::vector<int> t(static_cast<std::size_t>(m), -1);
  for (int e : transversal) {
    if (e < 0 || e >= q.size()) throw BadTransversal("element out of range");
    int c = quo.projection[static_cast<std::size_t>(e)];
    if (t[static_cast<std::size_t>(c)] >= 0) throw BadTransversal("coset hit twice");
    t[static_cast<std::size_t>(c)] = e;
  }
  for (int c = 0; c < m; ++c)
    if (t[static_cast<std::size_t>(c)] < 0) throw BadTransversal("coset not hit");
  if (t[0] != 0) throw BadTransversal("transversal must contain the identity");

  SubLoopView base = restrict_to(q, x);
  std::vector<int> lx(static_cast<std::size_t>(q.size()), -1);
  for (int i = 0; i < nx; ++i) lx[static_cast<std::size_t>(base.to_parent[static_cast<std::size_t>(i)])] = i;

  ExtensionData data;
  data.base = base.loop;
  data.factor = quo.loop;
  data.transversal.assign(t.begin(), t.end());
  Perm id = Perm::identity(nx);
  data.phi.assign(static_cast<std::size_t>(m), std::vector<Perm>(static_cast<std::size_t>(m), id));
  data.psi.assign(static_cast<std::size_t>(m), std::vector<Perm>(static_cast<std::size_t>(m), id));
  data.theta.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));

  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) {
      int tr = t[static_cast<std::size_t>(r)], ts = t[static_cast<std::size_t>(s)];
      int tt = t[static_cast<std::size_t>(quo.loop.mul(r, s))];
      int theta_q = q.ldiv(tt, q.mul(tr, ts));
      if (!x.contains(theta_q)) throw Error("extract_extension: theta outside X");
      int theta_l = lx[static_cast<std::size_t>(theta_q)];
      data.theta[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = theta_l;

      std::vector<std::uint8_t> phi_img(static_cast<std::size_t>(nx)), psi_img(static_cast<std::size_t>(nx));
      for (int i = 0; i < nx; ++i) {
        int xe = base.to_parent[static_cast<std::size_t>(i)];
        int v = q.ldiv(tt, q.mul(q.mul(tr, xe), ts));  // phi(x) theta
        int w = q.ldiv(tt, q.mul(tr, q.mul(ts, xe)));  // psi(x) theta
        if (!x.contains(v) || !x.contains(w)) throw Error("extract_extension: action value outside X");
        phi_img[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(base.loop.rdiv(lx[static_cast<std::size_t>(v)], theta_l));
        psi_img[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(base.loop.rdiv(lx[static_cast<std::size_t>(w)], theta_l));
      }
      Perm phi(std::move(phi_img)), psi(std::move(psi_img));
      if (!is_automorphism(base.loop, phi) || !is_automorphism(base.loop, psi))
        throw Error("extract_extension: extracted action is not an automorphism");
      data.phi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = phi;
      data.psi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = std::move(psi);
    }

  validate_extension_data(data);  // normalizations included

  // reconstruction identity rx * sy = t(phi(x) psi(y) theta) over all tuples
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) {
      int tr = t[static_cast<std::size_t>(r)], ts = t[static_cast<std::size_t>(s)];
      int tt = t[static_cast<std::size_t>(quo.loop.mul(r, s))];
      const Perm& phi = data.phi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      const Perm& psi = data.psi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      int theta_l = data.theta[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nx; ++j) {
          int lhs = q.mul(q.mul(tr, base.to_parent[static_cast<std::size_t>(i)]),
                          q.mul(ts, base.to_parent[static_cast<std::size_t>(j)]));
          int inner = base.loop.mul(base.loop.mul(phi[i], psi[j]), theta_l);
          int rhs = q.mul(tt, base.to_parent[static_cast<std::size_t>(inner)]);
          if (lhs != rhs) throw Error("extract_extension: reconstruction identity failed");
        }
    }

  // on Moufang loops the proof's closed forms must agree
  if (is_moufang(q).holds) {
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) {
        int tr = t[static_cast<std::size_t>(r)], ts = t[static_cast<std::size_t>(s)];
        Perm lrs = inner_l(q, tr, ts);
        Perm closed_phi = lrs * inner_t(q, ts).inverse() * inner_l(q, q.inv(ts), tr);
        const Perm& phi = data.phi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
        const Perm& psi = data.psi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
        for (int i = 0; i < nx; ++i) {
          int xe = base.to_parent[static_cast<std::size_t>(i)];
          if (closed_phi[xe] != base.to_parent[static_cast<std::size_t>(phi[i])])
            throw Error("extract_extension: closed form for phi disagrees");
          if (lrs[xe] != base.to_parent[static_cast<std::size_t>(psi[i])])
            throw Error("extract_extension: closed form for psi disagrees");
        }
      }
  }
  return data;
}

SolvabilitySeries is_classically_solvable(const FiniteLoop& q) {
  SolvabilitySeries out;
  std::vector<int> whole(static_cast<std::size_t>(q.size()));
  for (int i = 0; i < q.size(); ++i) whole[static_cast<std::size_t>(i)] = i;
  out.series.push_back(SubloopHandle::from_elements(q, whole));

  FiniteLoop cur = q;
  std::vector<int> to_q = whole;  // current-loop element -> Q element
  while (cur.size() > 1) {
    std::vector<int> seed;
    for (int a = 0; a < cur.size(); ++a)
      for (int b = 0; b < cur.size(); ++b) {
        seed.push_back(commutator(cur, a, b));
        for (int c = 0; c < cur.size(); ++c) seed.push_back(associator(cur, a, b, c));
      }
    SubloopHandle derived = normal_subloop_closure(cur, seed);
    if (derived.size() == cur.size()) {
      out.solvable = false;
      out.series.clear();
      return out;
    }
    // the quotient by the derived subloop must be a commutative group
    QuotientLoop quo = quotient(cur, derived);
    if (!is_associative(quo.loop) || !is_commutative(quo.loop))
      throw Error("is_classically_solvable: derived quotient is not a commutative group");

    std::vector<int> in_q;
    for (int e : derived.elements) in_q.push_back(to_q[static_cast<std::size_t>(e)]);
    out.series.push_back(SubloopHandle::from_elements(q, in_q));

    SubLoopView view = restrict_to(cur, derived);
    std::vector<int> next_to_q;
    for (int e : view.to_parent) next_to_q.push_back(to_q[static_cast<std::size_t>(e)]);
    cur = view.loop;
    to_q = std::move(next_to_q);
  }
  out.solvable = true;
  if (out.series.back().size() != 1)
    out.series.push_back(SubloopHandle::from_elements(q, {0}));
  return out;
}

namespace {

bool congruence_solve(const FiniteLoop& q, std::vector<std::vector<int>>& series_out) {
  if (q.size() == 1) {
    series_out = {{0}};
    return true;
  }
  auto normals = normal_subloops(q);  // ascending by size
  for (const auto& x : normals) {
    if (x.is_trivial()) continue;
    if (!abelian_oracle(q, x)) continue;
    QuotientLoop quo = quotient(q, x);
    std::vector<std::vector<int>> sub;
    if (!congruence_solve(quo.loop, sub)) continue;
    // lift the quotient series through the projection
    series_out.clear();
    for (const auto& level : sub) {
      std::vector<char> keep(static_cast<std::size_t>(quo.loop.size()), 0);
      for (int e : level) keep[static_cast<std::size_t>(e)] = 1;
      std::vector<int> lifted;
      for (int e = 0; e < q.size(); ++e)
        if (keep[static_cast<std::size_t>(quo.projection[static_cast<std::size_t>(e)])])
          lifted.push_back(e);
      series_out.push_back(std::move(lifted));
    }
    series_out.push_back({0});
    return true;
  }
  return false;
}

}  // namespace

SolvabilitySeries is_congruence_solvable(const FiniteLoop& q) {
  SolvabilitySeries out;
  std::vector<std::vector<int>> series;
  out.solvable = congruence_solve(q, series);
  if (out.solvable)
    for (auto& level : series) out.series.push_back(SubloopHandle::from_elements(q, level));
  return out;
}

TrialitySeed find_triality_seed(const FiniteLoop& q, bool require_trivial_nucleus) {
  if (require_trivial_nucleus && nuclei(q).nucleus.size() > 1) throw NucleusNotTrivial();
  auto cls = is_classically_solvable(q);
  if (!cls.solvable) throw NotSolvable();

  // last nontrivial term of the derived chain
  const SubloopHandle* a = nullptr;
  for (const auto& s : cls.series)
    if (s.size() > 1) a = &s;
  if (a == nullptr) throw Error("find_triality_seed: trivial loop");

  SubLoopView view = restrict_to(q, *a);
  if (!is_associative(view.loop) || !is_commutative(view.loop))
    throw Error("find_triality_seed: last derived term is not a commutative group");

  int size = a->size();
  int p = 0;
  for (int cand = 2; cand <= size; ++cand)
    if (size % cand == 0) {
      p = cand;
      break;
    }
  if (is_d_divisible(q, 3) && p == 3)
    throw Error("find_triality_seed: p = 3 in a 3-divisible loop");

  // p-primary component of A (Lemma-3.3): elements of p-power order
  std::vector<int> part;
  for (int i = 0; i < view.loop.size(); ++i) {
    int ord = 1, acc = i;
    while (acc != 0) {
      acc = view.loop.mul(acc, i);
      ++ord;
    }
    while (ord % p == 0) ord /= p;
    if (ord == 1) part.push_back(view.to_parent[static_cast<std::size_t>(i)]);
  }
  SubloopHandle s = SubloopHandle::from_elements(q, part);
  if (!is_subloop(q, s)) throw Error("find_triality_seed: primary component is not a subloop");
  if (!is_normal_subloop(q, s)) throw Error("find_triality_seed: primary component is not normal");
  if (s.is_trivial()) throw Error("find_triality_seed: primary component is trivial");
  return {p, s};
}

}  // namespace loopkit
