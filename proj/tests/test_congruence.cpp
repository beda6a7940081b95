#include <doctest.h>

#include "loopkit/congruence.hpp"
#include "loopkit/errors.hpp"
#include "test_helpers.hpp"

using namespace loopkit;

TEST_CASE("abelian oracle on trivial and full subloops") {
  FiniteLoop z6 = cyclic_group(6);
  auto normals = normal_subloops(z6);
  CHECK(abelian_oracle(z6, normals.front()).abelian);  // X = 1
  CHECK(abelian_oracle(z6, normals.back()).abelian);   // X = Q commutative group
}

TEST_CASE("abelian oracle rejects non-normal input") {
  FiniteLoop s3 = symmetric_group(3);
  for (const auto& s : all_subloops(s3))
    if (s.size() == 2) {
      CHECK_THROWS_AS(abelian_oracle(s3, s), NotNormal);
      break;
    }
}

TEST_CASE("M(S3,2): C3 induces an abelian congruence, the order-6 subloops do not") {
  FiniteLoop m12 = testing::moufang_12();
  for (const auto& x : normal_subloops(m12)) {
    OracleResult a = abelian_oracle(m12, x);
    OracleResult b = abelian_moufang(m12, x);
    CHECK(a.abelian == b.abelian);
    if (x.size() == 3) CHECK(a.abelian);
    if (x.size() == 6) {
      CHECK_FALSE(a.abelian);
      CHECK_FALSE(a.clause.empty());
    }
  }
}

TEST_CASE("a failed oracle returns a concrete witness") {
  FiniteLoop m12 = testing::moufang_12();
  for (const auto& x : normal_subloops(m12))
    if (x.size() == 6) {
      OracleResult r = abelian_moufang(m12, x);
      REQUIRE_FALSE(r.abelian);
      if (r.clause == "u(xy) != (uy)x") {
        REQUIRE(r.witness.size() == 3);
        int u = r.witness[0], a = r.witness[1], b = r.witness[2];
        CHECK(m12.mul(u, m12.mul(a, b)) != m12.mul(m12.mul(u, b), a));
      }
    }
}

TEST_CASE("3-divisible criterion agrees with the oracle on M(D4,2) and M(Q8,2)") {
  for (const FiniteLoop& q : {testing::moufang_16d(), testing::moufang_16q()}) {
    int checked = 0;
    for (const auto& x : normal_subloops(q)) {
      CHECK(abelian_3div(q, x).abelian == abelian_oracle(q, x).abelian);
      ++checked;
    }
    CHECK(checked == 17);
  }
}

TEST_CASE("abelian_3div refuses loops of order divisible by 3") {
  FiniteLoop m12 = testing::moufang_12();
  CHECK_THROWS_AS(abelian_3div(m12, normal_subloops(m12)[1]), NotThreeDivisible);
}

TEST_CASE("abelian_moufang refuses non-Moufang loops") {
  FiniteLoop bad = testing::order5_nonassociative_loop();
  CHECK_THROWS_AS(abelian_moufang(bad, normal_subloops(bad).front()), NotMoufang);
}

TEST_CASE("oracle success implies X is a commutative group") {
  for (const FiniteLoop& q : {testing::moufang_12(), testing::moufang_16d()})
    for (const auto& x : normal_subloops(q))
      if (abelian_oracle(q, x).abelian) {
        SubLoopView v = restrict_to(q, x);
        CHECK(is_associative(v.loop));
        CHECK(is_commutative(v.loop));
      }
}

TEST_CASE("negative control: a commutative normal subgroup that fails the oracle") {
  FiniteLoop m16 = testing::moufang_16d();
  bool found = false;
  for (const auto& x : normal_subloops(m16)) {
    if (x.is_trivial() || x.is_whole(m16)) continue;
    SubLoopView v = restrict_to(m16, x);
    if (is_associative(v.loop) && is_commutative(v.loop) && !abelian_oracle(m16, x).abelian)
      found = true;
  }
  CHECK(found);
}

TEST_CASE("extract_extension on a direct product is trivial data") {
  FiniteLoop x = cyclic_group(4), f = cyclic_group(2);
  FiniteLoop q = direct_product(f, x);  // pairs (r, e), index r*4+e
  std::vector<int> base_elems{0, 1, 2, 3};
  SubloopHandle base = SubloopHandle::from_elements(q, base_elems);
  REQUIRE(is_normal_subloop(q, base));
  std::vector<int> t = canonical_transversal(q, base);
  ExtensionData d = extract_extension(q, base, t);
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      CHECK(d.phi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)].is_identity());
      CHECK(d.psi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)].is_identity());
      CHECK(d.theta[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] == 0);
    }
}

TEST_CASE("extract/build round-trip reproduces the loop up to the pairing bijection") {
  for (const FiniteLoop& q : {testing::moufang_12(), testing::moufang_16q()}) {
    for (const auto& x : normal_subloops(q)) {
      if (x.is_trivial() || x.is_whole(q)) continue;
      if (!abelian_oracle(q, x).abelian) continue;
      std::vector<int> t = canonical_transversal(q, x);
      ExtensionData d = extract_extension(q, x, t);
      FiniteLoop rebuilt = build_abelian_extension(d);
      REQUIRE(rebuilt.size() == q.size());
      // pairing (r, i) -> t(r) * X[i] must be an isomorphism
      SubLoopView base = restrict_to(q, x);
      const int nx = x.size();
      std::vector<int> to_q(static_cast<std::size_t>(q.size()));
      for (int r = 0; r < d.factor.size(); ++r)
        for (int i = 0; i < nx; ++i)
          to_q[static_cast<std::size_t>(r * nx + i)] =
              q.mul(t[static_cast<std::size_t>(r)], base.to_parent[static_cast<std::size_t>(i)]);
      for (int a = 0; a < q.size(); ++a)
        for (int b = 0; b < q.size(); ++b)
          CHECK(to_q[static_cast<std::size_t>(rebuilt.mul(a, b))] ==
                q.mul(to_q[static_cast<std::size_t>(a)], to_q[static_cast<std::size_t>(b)]));
    }
  }
}

TEST_CASE("extract_extension rejects bad transversals and non-abelian congruences") {
  FiniteLoop m12 = testing::moufang_12();
  auto normals = normal_subloops(m12);
  const SubloopHandle& c3 = normals[1];
  std::vector<int> t = canonical_transversal(m12, c3);

  SUBCASE("duplicate coset hit") {
    std::vector<int> bad = t;
    bad.push_back(0);
    CHECK_THROWS_AS(extract_extension(m12, c3, bad), BadTransversal);
  }
  SUBCASE("missing coset") {
    std::vector<int> bad(t.begin(), t.end() - 1);
    CHECK_THROWS_AS(extract_extension(m12, c3, bad), BadTransversal);
  }
  SUBCASE("transversal must contain the identity") {
    std::vector<int> bad = t;
    bad[0] = c3.elements[1];  // a different element of the identity coset
    CHECK_THROWS_AS(extract_extension(m12, c3, bad), BadTransversal);
  }
  SUBCASE("non-abelian-inducing X is refused") {
    for (const auto& x : normals)
      if (x.size() == 6)
        CHECK_THROWS_AS(extract_extension(m12, x, canonical_transversal(m12, x)),
                        NotAbelianCongruence);
  }
}

TEST_CASE("classical solvability") {
  SUBCASE("abelian groups: one derived step") {
    auto r = is_classically_solvable(cyclic_group(8));
    CHECK(r.solvable);
    REQUIRE(r.series.size() == 2);
    CHECK(r.series[0].size() == 8);
    CHECK(r.series[1].size() == 1);
  }
  SUBCASE("S3: two steps") {
    auto r = is_classically_solvable(symmetric_group(3));
    CHECK(r.solvable);
    REQUIRE(r.series.size() == 3);
    CHECK(r.series[1].size() == 3);
  }
  SUBCASE("M(S3,2) is classically solvable") {
    auto r = is_classically_solvable(testing::moufang_12());
    CHECK(r.solvable);
    std::vector<int> sizes;
    for (const auto& s : r.series) sizes.push_back(s.size());
    CHECK(sizes == std::vector<int>{12, 3, 1});
  }
  SUBCASE("series terms are normal subloops of Q with commutative group factors") {
    FiniteLoop q = testing::moufang_16q();
    auto r = is_classically_solvable(q);
    REQUIRE(r.solvable);
    for (const auto& s : r.series) CHECK(is_normal_subloop(q, s));
  }
}

TEST_CASE("congruence solvability") {
  SUBCASE("groups from the oracle-driven run") {
    for (const FiniteLoop& q : {symmetric_group(3), dihedral_group(8), quaternion_group(8)})
      CHECK(is_congruence_solvable(q).solvable);
  }
  SUBCASE("M(S3,2) is congruence solvable via C3") {
    auto r = is_congruence_solvable(testing::moufang_12());
    CHECK(r.solvable);
    std::vector<int> sizes;
    for (const auto& s : r.series) sizes.push_back(s.size());
    CHECK(sizes == std::vector<int>{12, 6, 3, 1});
  }
  SUBCASE("the returned series is a genuine abelian series") {
    FiniteLoop q = testing::moufang_12();
    auto r = is_congruence_solvable(q);
    REQUIRE(r.solvable);
    // independent re-verification: each term normal in Q, and each factor
    // induces an abelian congruence of the corresponding quotient
    for (std::size_t i = 0; i + 1 < r.series.size(); ++i) {
      CHECK(is_normal_subloop(q, r.series[i]));
      QuotientLoop quo = quotient(q, r.series[i + 1]);
      std::vector<int> factor;
      for (int e : r.series[i].elements)
        factor.push_back(quo.projection[static_cast<std::size_t>(e)]);
      SubloopHandle f = SubloopHandle::from_elements(quo.loop, factor);
      REQUIRE(is_normal_subloop(quo.loop, f));
      CHECK(abelian_oracle(quo.loop, f).abelian);
    }
  }
  SUBCASE("congruence solvable implies classically solvable") {
    for (const FiniteLoop& q : {testing::moufang_12(), testing::moufang_16d(),
                                testing::moufang_20()}) {
      auto c = is_congruence_solvable(q);
      if (c.solvable) CHECK(is_classically_solvable(q).solvable);
    }
  }
}

TEST_CASE("find_triality_seed") {
  SUBCASE("M(D5,2): p = 5, S = C5") {
    TrialitySeed seed = find_triality_seed(testing::moufang_20());
    CHECK(seed.p == 5);
    CHECK(seed.s.size() == 5);
  }
  SUBCASE("abelian p-group gives S = Q once the nucleus gate is lifted") {
    TrialitySeed seed = find_triality_seed(cyclic_group(8), false);
    CHECK(seed.p == 2);
    CHECK(seed.s.size() == 8);
  }
  SUBCASE("|A| = 6 splits into its 2-part") {
    TrialitySeed seed = find_triality_seed(cyclic_group(6), false);
    CHECK(seed.p == 2);
    CHECK(seed.s.size() == 2);
    CHECK(is_normal_subloop(cyclic_group(6), seed.s));
  }
  SUBCASE("nontrivial nucleus is rejected by default") {
    CHECK_THROWS_AS(find_triality_seed(dihedral_group(8)), NucleusNotTrivial);
  }
}
