#include <doctest.h>

#include <array>

#include "loopkit/errors.hpp"
#include "loopkit/subloop.hpp"
#include "test_helpers.hpp"

using namespace loopkit;

TEST_CASE("subloop closure and membership") {
  FiniteLoop z12 = cyclic_group(12);
  SubloopHandle s = subloop_closure(z12, std::array<int, 1>{4});
  CHECK(s.elements == std::vector<int>{0, 4, 8});
  CHECK(is_subloop(z12, s));

  SubloopHandle bad = SubloopHandle::from_elements(z12, {0, 4});
  CHECK_FALSE(is_subloop(z12, bad));
}

TEST_CASE("nuclei of a group is the whole group") {
  FiniteLoop d4 = dihedral_group(8);
  Nuclei n = nuclei(d4);
  CHECK(n.nucleus.size() == 8);
  CHECK(n.left_nucleus.size() == 8);
  CHECK(n.center.size() == 2);
}

TEST_CASE("nuclei of Chein doubles") {
  // Nuc(M(G,2)) = Z(G) for nonabelian G
  Nuclei m12 = nuclei(testing::moufang_12());
  CHECK(m12.nucleus.size() == 1);
  CHECK(m12.center.size() == 1);

  Nuclei m16 = nuclei(testing::moufang_16d());
  CHECK(m16.nucleus.size() == 2);

  Nuclei m20 = nuclei(testing::moufang_20());
  CHECK(m20.nucleus.size() == 1);

  // direct product bumps the nucleus by the group factor
  FiniteLoop prod = direct_product(cyclic_group(2), testing::moufang_12());
  CHECK(nuclei(prod).nucleus.size() == 2);
}

TEST_CASE("normal subloops of small groups") {
  auto zp = normal_subloops(cyclic_group(5));
  REQUIRE(zp.size() == 2);
  CHECK(zp.front().size() == 1);
  CHECK(zp.back().size() == 5);

  auto v4 = normal_subloops(direct_product(cyclic_group(2), cyclic_group(2)));
  CHECK(v4.size() == 5);
}

TEST_CASE("normal subloops of Chein doubles") {
  auto m12 = normal_subloops(testing::moufang_12());
  std::vector<int> sizes;
  for (const auto& s : m12) sizes.push_back(s.size());
  CHECK(sizes == std::vector<int>{1, 3, 6, 6, 6, 12});

  auto m20 = normal_subloops(testing::moufang_20());
  sizes.clear();
  for (const auto& s : m20) sizes.push_back(s.size());
  CHECK(sizes == std::vector<int>{1, 5, 10, 10, 10, 20});

  auto m16 = normal_subloops(testing::moufang_16d());
  CHECK(m16.size() == 17);
}

TEST_CASE("normal subloops equal the invariant all-subloops filter") {
  for (const FiniteLoop& q : {symmetric_group(3), dihedral_group(8), cyclic_group(12),
                              testing::moufang_12()}) {
    auto normals = normal_subloops(q);
    std::vector<std::vector<int>> expected;
    for (const auto& s : all_subloops(q))
      if (is_normal_subloop(q, s)) expected.push_back(s.elements);
    REQUIRE(normals.size() == expected.size());
    for (std::size_t i = 0; i < normals.size(); ++i) CHECK(normals[i].elements == expected[i]);
  }
}

TEST_CASE("all_subloops counts subgroups of S3") {
  auto subs = all_subloops(symmetric_group(3));
  CHECK(subs.size() == 6);  // 1, three Z2, Z3, S3
}

TEST_CASE("quotients") {
  FiniteLoop z4 = cyclic_group(4);
  QuotientLoop q = quotient(z4, subloop_closure(z4, std::array<int, 1>{2}));
  CHECK(q.loop.size() == 2);
  CHECK(is_isomorphic(q.loop, cyclic_group(2)));

  FiniteLoop m12 = testing::moufang_12();
  auto normals = normal_subloops(m12);
  QuotientLoop whole = quotient(m12, normals.back());
  CHECK(whole.loop.size() == 1);

  // order-2 normal subloop of M(D4,2) gives an order-8 loop
  FiniteLoop m16 = testing::moufang_16d();
  for (const auto& s : normal_subloops(m16))
    if (s.size() == 2) {
      QuotientLoop quo = quotient(m16, s);
      CHECK(quo.loop.size() == 8);
      break;
    }

  // quotient by the order-3 normal subloop of M(S3,2) is the Klein group
  for (const auto& s : normals)
    if (s.size() == 3) {
      QuotientLoop quo = quotient(m12, s);
      CHECK(quo.loop.size() == 4);
      CHECK(is_isomorphic(quo.loop, direct_product(cyclic_group(2), cyclic_group(2))));
    }
}

TEST_CASE("quotient rejects non-normal subloops") {
  FiniteLoop s3 = symmetric_group(3);
  for (const auto& s : all_subloops(s3))
    if (s.size() == 2) {
      CHECK_THROWS_AS(quotient(s3, s), NotNormal);
      break;
    }
}

TEST_CASE("restrict_to produces the subloop as a loop") {
  FiniteLoop m12 = testing::moufang_12();
  for (const auto& s : normal_subloops(m12))
    if (s.size() == 6) {
      SubLoopView v = restrict_to(m12, s);
      CHECK(v.loop.size() == 6);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          CHECK(v.to_parent[static_cast<std::size_t>(v.loop.mul(i, j))] ==
                m12.mul(v.to_parent[static_cast<std::size_t>(i)], v.to_parent[static_cast<std::size_t>(j)]));
      break;
    }
}
