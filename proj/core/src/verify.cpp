#include "loopkit/verify.hpp"

#include <algorithm>
#include <set>

#include "loopkit/congruence.hpp"
#include "loopkit/construct.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/psa.hpp"
#include "loopkit/triality.hpp"

namespace loopkit {

namespace {

std::string tuple_str(const std::vector<int>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[static_cast<std::size_t>(i)]);
  }
  out += ')';
  return out;
}

bool subloop_3divisible(const FiniteLoop& q, const SubloopHandle& s) {
  return is_d_divisible(restrict_to(q, s).loop, 3);
}

bool subloop_commutative_group(const FiniteLoop& q, const SubloopHandle& s) {
  SubLoopView v = restrict_to(q, s);
  return is_associative(v.loop) && is_commutative(v.loop);
}

// --- suites ---------------------------------------------------------------

SuiteResult suite_thm_2_2(const std::vector<CorpusEntry>& corpus, const VerifyOptions&) {
  SuiteResult res{"thm-2.2"};
  for (const auto& entry : corpus) {
    if (!is_moufang(entry.loop).holds) continue;
    int pairs = 0;
    bool ok = true;
    std::string detail;
    for (const auto& x : normal_subloops(entry.loop)) {
      ++pairs;
      bool a = abelian_oracle(entry.loop, x).abelian;
      bool b = abelian_moufang(entry.loop, x).abelian;
      if (a != b) {
        ok = false;
        detail = "|X| = " + std::to_string(x.size()) + ": oracle " + (a ? "true" : "false") +
                 ", moufang criterion " + (b ? "true" : "false");
        break;
      }
    }
    res.add(entry.name, ok, ok ? std::to_string(pairs) + " subloops agree" : detail);
  }
  return res;
}

SuiteResult suite_thm_2_5(const std::vector<CorpusEntry>& corpus, const VerifyOptions&) {
  SuiteResult res{"thm-2.5"};
  for (const auto& entry : corpus) {
    if (!is_moufang(entry.loop).holds || !is_d_divisible(entry.loop, 3)) continue;
    int pairs = 0;
    bool ok = true;
    std::string detail;
    for (const auto& x : normal_subloops(entry.loop)) {
      ++pairs;
      bool a = abelian_oracle(entry.loop, x).abelian;
      bool b = abelian_3div(entry.loop, x).abelian;
      if (a != b) {
        ok = false;
        detail = "|X| = " + std::to_string(x.size()) + ": oracle " + (a ? "true" : "false") +
                 ", 3-divisible criterion " + (b ? "true" : "false");
        break;
      }
    }
    res.add(entry.name, ok, ok ? std::to_string(pairs) + " subloops agree" : detail);
  }
  return res;
}

// u^{3i}x * u^{3j}y = u^{3(i+j)} T_u^{-i-2j}( T_u^{i-j}(x) T_u^{i+2j}(y) );
// at i=1, j=0 this is the paper's u^3x*y = u^3 T_u^-1(T_u(x) T_u(y)).
bool gagola_holds(const FiniteLoop& q, int i, int j, std::vector<int>* witness) {
  const int n = q.size();
  for (int u = 0; u < n; ++u) {
    Perm t = inner_t(q, u);
    Perm outer = t.power(-i - 2 * j);
    Perm tx = t.power(i - j);
    Perm ty = t.power(i + 2 * j);
    int u3i = q.power(u, 3 * i), u3j = q.power(u, 3 * j), u3ij = q.power(u, 3 * (i + j));
    for (int x = 0; x < n; ++x) {
      int lhs0 = q.mul(u3i, x);
      for (int y = 0; y < n; ++y) {
        int lhs = q.mul(lhs0, q.mul(u3j, y));
        int rhs = q.mul(u3ij, outer[q.mul(tx[x], ty[y])]);
        if (lhs != rhs) {
          if (witness) *witness = {u, x, y, i, j};
          return false;
        }
      }
    }
  }
  return true;
}

SuiteResult suite_prop_2_3(const std::vector<CorpusEntry>& corpus, const VerifyOptions&) {
  SuiteResult res{"prop-2.3"};
  for (const auto& entry : corpus) {
    if (!is_moufang(entry.loop).holds) continue;
    std::vector<int> w;
    bool ok = gagola_holds(entry.loop, 1, 0, &w);
    for (int i = -1; i <= 2 && ok; ++i)
      for (int j = -1; j <= 2 && ok; ++j) ok = gagola_holds(entry.loop, i, j, &w);
    res.add(entry.name, ok, ok ? "i=1,j=0 and all (i,j) in {-1..2}^2" : "witness (u,x,y,i,j) = " + tuple_str(w));
  }
  return res;
}

SuiteResult suite_prop_2_4(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts) {
  SuiteResult res{"prop-2.4"};
  for (const auto& entry : corpus) {
    const FiniteLoop& q = entry.loop;
    if (!is_moufang(q).holds || !is_d_divisible(q, 3)) continue;
    std::vector<Perm> tu, std_gens;
    for (int u = 0; u < q.size(); ++u) {
      tu.push_back(inner_t(q, u));
      std_gens.push_back(inner_t(q, u));
      for (int v = 0; v < q.size(); ++v) {
        std_gens.push_back(inner_l(q, u, v));
        std_gens.push_back(inner_r(q, u, v));
      }
    }
    std::size_t tu_order = close_perms(tu, opts.group_cap).order();
    std::size_t inn_order = close_perms(std_gens, opts.group_cap).order();
    res.add(entry.name, tu_order == inn_order,
            "|<T_u>| = " + std::to_string(tu_order) + ", |Inn| = " + std::to_string(inn_order));
  }
  return res;
}

SuiteResult suite_eq_3_5(const std::vector<CorpusEntry>& corpus, const VerifyOptions&) {
  SuiteResult res{"eq-3.5"};
  for (const auto& entry : corpus) {
    const FiniteLoop& q = entry.loop;
    if (!is_moufang(q).holds) continue;
    const int n = q.size();
    bool ok = true;
    std::string detail;

    for (int x = 0; x < n && ok; ++x)
      if (!certify_psa(q, q.power(x, -3), inner_t(q, x))) {
        ok = false;
        detail = "(x^-3, T_x) fails at x = " + std::to_string(x);
      }
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        int c = classical_commutator(q, q.inv(x), y);
        Perm phi = perm_commutator(q.left_translation(x), q.right_translation(y));
        if (!certify_psa(q, c, phi)) {
          ok = false;
          detail = "([x^-1,y],[L_x,R_y]) fails at " + tuple_str({x, y});
        }
      }
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        Perm lx = q.left_translation(x), ly = q.left_translation(y);
        Perm rx = q.right_translation(x), ry = q.right_translation(y);
        if (inner_l(q, x, y) != perm_commutator(lx, ry.inverse()) ||
            inner_l(q, x, y) != perm_commutator(rx.inverse(), ly) ||
            inner_r(q, x, y) != perm_commutator(ly.inverse(), rx) ||
            inner_r(q, x, y) != perm_commutator(ry, lx.inverse())) {
          ok = false;
          detail = "L/R_{x,y} commutator identity fails at " + tuple_str({x, y});
        }
      }
    // Eq 3.6 autotopism triples
    for (int x = 0; x < n && ok; ++x) {
      Perm lx = q.left_translation(x), rx = q.right_translation(x);
      Perm mx = lx * rx;
      if (!is_autotopism(q, {lx, rx, mx}) || !is_autotopism(q, {mx, lx.inverse(), lx}) ||
          !is_autotopism(q, {rx.inverse(), mx, rx})) {
        ok = false;
        detail = "eq-3.6 triple fails at x = " + std::to_string(x);
      }
    }
    res.add(entry.name, ok, ok ? "eq-3.5 and eq-3.6 sweeps" : detail);
  }
  return res;
}

SuiteResult suite_prop_3_4(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts) {
  SuiteResult res{"prop-3.4"};
  int pairs = 0;
  for (const auto& entry : corpus) {
    const FiniteLoop& q = entry.loop;
    if (!is_moufang(q).holds || is_associative(q)) continue;
    if (q.size() > 16) continue;  // quadratic sweep in |C(Q,S)|
    MltContext ctx = MltContext::build(q, opts.group_cap);
    for (const auto& s : normal_subloops(q)) {
      if (s.is_trivial() || s.is_whole(q)) continue;
      CosetKernel c = coset_kernel(ctx, s);
      PsaHomReport rep = prop_d2_hom(ctx, c);
      ++pairs;
      bool ok = rep.companion_choice_free && rep.homomorphism && rep.kernel_is_c0;
      res.add(entry.name + " |S| = " + std::to_string(s.size()), ok,
              "well-defined " + std::string(rep.companion_choice_free ? "yes" : "NO") +
                  ", homomorphism " + (rep.homomorphism ? "yes" : "NO") + ", kernel = C0 " +
                  (rep.kernel_is_c0 ? "yes" : "NO") + ", |ker| = " + std::to_string(rep.kernel_order));
    }
  }
  if (opts.require_runs) res.add("pair count >= 3", pairs >= 3, std::to_string(pairs) + " pairs");
  return res;
}

SuiteResult suite_cor_3_6(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts) {
  SuiteResult res{"cor-3.6"};
  for (const auto& entry : corpus) {
    const FiniteLoop& q = entry.loop;
    if (!is_moufang(q).holds || q.size() > opts.mlt_order_limit) continue;
    MltContext ctx = MltContext::build(q, opts.group_cap);
    for (const auto& s : normal_subloops(q)) {
      if (!subloop_3divisible(q, s)) continue;
      SeriesReport rep = verify_series(ctx, s);
      res.add(entry.name + " |S| = " + std::to_string(s.size()), rep.all(),
              std::to_string(rep.mlt_rel_order) + " <| " + std::to_string(rep.c0_order) + " <| " +
                  std::to_string(rep.c_order) + " <| " + std::to_string(rep.mlt_order));
    }
  }
  return res;
}

SuiteResult suite_lem_4_1(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts) {
  SuiteResult res{"lem-4.1"};
  int actions = 0;
  for (const auto& entry : corpus) {
    const FiniteLoop& q = entry.loop;
    if (!is_moufang(q).holds || q.size() > opts.mlt_order_limit) continue;
    MltContext ctx = MltContext::build(q, opts.group_cap);
    TrialityAction act;
    try {
      act = extend_triality(ctx);
    } catch (const NotExtendable&) {
      continue;
    }
    ++actions;
    // candidate normal triality subgroups: Mlt, its center, p-cores
    std::vector<std::pair<std::string, PermGroup>> candidates;
    candidates.emplace_back("Mlt", ctx.mlt());
    candidates.emplace_back("Z(Mlt)", center(ctx.mlt()));
    std::set<int> primes;
    for (std::size_t o = ctx.mlt().order(), p = 2; o > 1; ++p)
      while (o % p == 0) {
        primes.insert(static_cast<int>(p));
        o /= p;
      }
    for (int p : primes)
      candidates.emplace_back("O_" + std::to_string(p) + "(Mlt)", p_core(ctx.mlt(), p, opts.group_cap));
    for (auto& [label, u] : candidates) {
      if (u.trivial()) continue;
      if (!is_normal_in(u, ctx.mlt()) || !is_triality_subgroup(act, u)) continue;
      bool ok = true;
      std::string detail;
      try {
        SubloopHandle s = orbit_subloop(act, u);
        detail = "|U| = " + std::to_string(u.order()) + ", |U(1)| = " + std::to_string(s.size());
      } catch (const Error& e) {
        ok = false;
        detail = e.what();
      }
      res.add(entry.name + " " + label, ok, detail);
    }
  }
  if (opts.require_runs)
    res.add("at least one triality action", actions > 0, std::to_string(actions) + " loops admit triality");
  return res;
}

SuiteResult suite_prop_4_2(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts) {
  SuiteResult res{"prop-4.2"};
  int runs = 0;
  for (const auto& entry : corpus) {
    const FiniteLoop& q = entry.loop;
    if (!is_moufang(q).holds || !is_d_divisible(q, 3) || q.size() > opts.mlt_order_limit) continue;
    TrialitySeed seed;
    try {
      seed = find_triality_seed(q);
    } catch (const Error&) {
      continue;
    }
    MltContext ctx = MltContext::build(q, opts.group_cap);
    TrialityAction act;
    try {
      act = extend_triality(ctx);
    } catch (const NotExtendable&) {
      continue;
    }
    ++runs;
    bool ok = true;
    std::string detail;
    try {
      PermGroup u = find_normal_triality_p_subgroup(act, seed.s, seed.p, opts.group_cap);
      SubloopHandle x = abelian_from_triality(act, u);
      ok = abelian_oracle(q, x).abelian && !x.is_trivial();
      detail = "p = " + std::to_string(seed.p) + ", |U| = " + std::to_string(u.order()) +
               ", |X| = " + std::to_string(x.size());
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    res.add(entry.name, ok, detail);
  }
  if (opts.require_runs)
    res.add("at least one full run", runs > 0, std::to_string(runs) + " loops ran the pipeline");
  return res;
}

SuiteResult suite_thm_5_2(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts) {
  SuiteResult res{"thm-5.2"};
  for (const auto& entry : corpus) {
    const FiniteLoop& q = entry.loop;
    if (!is_moufang(q).holds) continue;
    int checked = 0;
    bool ok = true;
    std::string detail;
    for (const auto& s : all_subloops(q)) {
      if (s.is_trivial()) continue;
      int p = 0;
      for (int cand = 2; cand <= s.size(); ++cand)
        if (s.size() % cand == 0) {
          p = cand;
          break;
        }
      if (!is_p_power(static_cast<std::size_t>(s.size()), p)) continue;
      ++checked;
      PermGroup rel = mlt_rel(q, s, opts.group_cap);
      if (!is_p_group(rel, p)) {
        ok = false;
        detail = "|S| = " + std::to_string(s.size()) + ", |Mlt_Q(S)| = " + std::to_string(rel.order());
        break;
      }
    }
    res.add(entry.name, ok, ok ? std::to_string(checked) + " p-subloops" : detail);
  }
  return res;
}

SuiteResult suite_prop_5_5(const std::vector<CorpusEntry>& corpus, const VerifyOptions&) {
  SuiteResult res{"prop-5.5"};
  for (const auto& entry : corpus) {
    const FiniteLoop& q = entry.loop;
    if (!is_moufang(q).holds) continue;
    SubloopHandle nuc = nuclei(q).nucleus;
    int checked = 0;
    bool ok = true;
    std::string detail;
    for (const auto& x : normal_subloops(q)) {
      bool inside = true;
      for (int e : x.elements)
        if (!nuc.contains(e)) {
          inside = false;
          break;
        }
      if (!inside || !subloop_commutative_group(q, x)) continue;
      ++checked;
      if (!abelian_oracle(q, x).abelian) {
        ok = false;
        detail = "|X| = " + std::to_string(x.size()) + " fails the oracle";
        break;
      }
    }
    res.add(entry.name, ok, ok ? std::to_string(checked) + " nucleus-contained X" : detail);
  }
  return res;
}

SuiteResult suite_prop_5_6(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts) {
  SuiteResult res{"prop-5.6"};
  int runs = 0;
  for (const auto& entry : corpus) {
    const FiniteLoop& q = entry.loop;
    if (!is_moufang(q).holds || !is_d_divisible(q, 3) || q.size() > opts.mlt_order_limit) continue;
    // need a nontrivial normal p-subloop, p != 3
    std::vector<std::pair<int, SubloopHandle>> seeds;
    for (const auto& s : normal_subloops(q)) {
      if (s.is_trivial() || s.is_whole(q)) continue;
      int p = 2;
      while (s.size() % p != 0) ++p;
      if (p != 3 && is_p_power(static_cast<std::size_t>(s.size()), p)) seeds.emplace_back(p, s);
    }
    if (seeds.empty()) continue;
    MltContext ctx = MltContext::build(q, opts.group_cap);
    TrialityAction act;
    try {
      act = extend_triality(ctx);
    } catch (const NotExtendable&) {
      continue;
    }
    for (const auto& [p, s] : seeds) {
      ++runs;
      bool ok = true;
      std::string detail;
      try {
        PermGroup u = find_normal_triality_p_subgroup(act, s, p, opts.group_cap);
        bool elementary = true;
        for (const Perm& e : u.elements())
          if (!e.is_identity() && perm_order(e) != p) elementary = false;
        ok = !u.trivial() && elementary && is_p_group(u, p);
        detail = "p = " + std::to_string(p) + ", |S| = " + std::to_string(s.size()) +
                 ", |U| = " + std::to_string(u.order());
      } catch (const Error& e) {
        ok = false;
        detail = e.what();
      }
      res.add(entry.name + " |S| = " + std::to_string(s.size()), ok, detail);
    }
  }
  if (opts.require_runs)
    res.add("at least one pipeline run", runs > 0, std::to_string(runs) + " (Q,S,p) runs");
  return res;
}

SuiteResult suite_thm_5_7(const std::vector<CorpusEntry>& corpus, const VerifyOptions&) {
  SuiteResult res{"thm-5.7"};
  for (const auto& entry : corpus) {
    const FiniteLoop& q = entry.loop;
    if (!is_moufang(q).holds || !is_d_divisible(q, 3)) continue;
    bool classical = is_classically_solvable(q).solvable;
    bool congruence = is_congruence_solvable(q).solvable;
    res.add(entry.name, classical == congruence,
            std::string("classical ") + (classical ? "true" : "false") + ", congruence " +
                (congruence ? "true" : "false"));
  }
  return res;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"thm-2.2", "thm-2.5", "prop-2.3", "prop-2.4", "eq-3.5", "prop-3.4", "cor-3.6",
          "lem-4.1", "prop-4.2", "thm-5.2", "prop-5.5", "prop-5.6", "thm-5.7"};
}

SuiteResult run_suite(const std::string& name, const std::vector<CorpusEntry>& corpus,
                      const VerifyOptions& opts) {
  if (name == "thm-2.2") return suite_thm_2_2(corpus, opts);
  if (name == "thm-2.5") return suite_thm_2_5(corpus, opts);
  if (name == "prop-2.3") return suite_prop_2_3(corpus, opts);
  if (name == "prop-2.4") return suite_prop_2_4(corpus, opts);
  if (name == "eq-3.5") return suite_eq_3_5(corpus, opts);
  if (name == "prop-3.4") return suite_prop_3_4(corpus, opts);
  if (name == "cor-3.6") return suite_cor_3_6(corpus, opts);
  if (name == "lem-4.1") return suite_lem_4_1(corpus, opts);
  if (name == "prop-4.2") return suite_prop_4_2(corpus, opts);
  if (name == "thm-5.2") return suite_thm_5_2(corpus, opts);
  if (name == "prop-5.5") return suite_prop_5_5(corpus, opts);
  if (name == "prop-5.6") return suite_prop_5_6(corpus, opts);
  if (name == "thm-5.7") return suite_thm_5_7(corpus, opts);
  throw UnknownSuite(name);
}

}  // namespace loopkit
