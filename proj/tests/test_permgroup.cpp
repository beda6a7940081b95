#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "loopkit/errors.hpp"
#include "loopkit/permgroup.hpp"
#include "test_helpers.hpp"

using namespace loopkit;

namespace {

PermGroup regular_rep(const FiniteLoop& g) {
  std::vector<Perm> gens;
  for (int x = 0; x < g.size(); ++x) gens.push_back(g.left_translation(x));
  return close_perms(gens);
}

std::set<std::vector<std::uint8_t>> element_set(const PermGroup& g) {
  std::set<std::vector<std::uint8_t>> out;
  for (const Perm& p : g.elements()) out.insert(p.images());
  return out;
}

// independent oracle: all subgroups by closing the generating-set lattice
std::vector<std::set<std::vector<std::uint8_t>>> brute_all_subgroups(const PermGroup& g) {
  std::set<std::set<std::vector<std::uint8_t>>> found;
  std::vector<std::vector<Perm>> work;
  PermOps ops = g.ops();
  auto add = [&](std::vector<Perm> gens) {
    PermGroup h = PermGroup::close(ops, gens);
    if (found.insert(element_set(h)).second) work.push_back(h.elements());
  };
  add({});
  while (!work.empty()) {
    std::vector<Perm> base = std::move(work.back());
    work.pop_back();
    std::set<std::vector<std::uint8_t>> base_set;
    for (const Perm& p : base) base_set.insert(p.images());
    for (const Perm& p : g.elements()) {
      if (base_set.count(p.images())) continue;
      std::vector<Perm> gens = base;
      gens.push_back(p);
      add(std::move(gens));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

TEST_CASE("perm basics") {
  Perm a{1, 0, 2};
  Perm b{0, 2, 1};
  // apply right factor first: (a*b)(1) = a(b(1)) = a(2) = 2
  CHECK((a * b)[1] == 2);
  CHECK(a.inverse() * a == Perm::identity(3));
  CHECK(perm_order(a) == 2);
  CHECK(a.power(-1) == a);
  CHECK(perm_commutator(a, b) == a.inverse() * b.inverse() * a * b);
}

TEST_CASE("closure of a transposition") {
  PermGroup g = close_perms({Perm{1, 0, 2}});
  CHECK(g.order() == 2);
}

TEST_CASE("translations of Z_n close to the cyclic group") {
  FiniteLoop z7 = cyclic_group(7);
  std::vector<Perm> gens;
  for (int x = 0; x < 7; ++x) {
    gens.push_back(z7.left_translation(x));
    CHECK(z7.left_translation(x) == z7.right_translation(x));
  }
  CHECK(close_perms(gens).order() == 7);
}

TEST_CASE("closure is order-independent") {
  FiniteLoop m12 = testing::moufang_12();
  std::vector<Perm> gens;
  for (int x = 0; x < 12; ++x) {
    gens.push_back(m12.left_translation(x));
    gens.push_back(m12.right_translation(x));
  }
  PermGroup a = close_perms(gens);
  CHECK(a.order() == 2592);
  std::mt19937_64 rng(5);
  std::shuffle(gens.begin(), gens.end(), rng);
  PermGroup b = close_perms(gens);
  CHECK(b.order() == 2592);
  CHECK(element_set(a) == element_set(b));
}

TEST_CASE("close respects the cap") {
  FiniteLoop m12 = testing::moufang_12();
  std::vector<Perm> gens;
  for (int x = 0; x < 12; ++x) gens.push_back(m12.left_translation(x));
  CHECK_THROWS_AS(close_perms(gens, 100), CapExceeded);
  try {
    close_perms(gens, 100);
  } catch (const CapExceeded& e) {
    CHECK(e.partial >= 100);
  }
}

TEST_CASE("from_elements verifies closure") {
  PermOps ops{3};
  PermGroup s3 = close_perms({Perm{1, 0, 2}, Perm{0, 2, 1}});
  CHECK(PermGroup::from_elements(ops, s3.elements()).order() == 6);
  std::vector<Perm> not_closed{Perm::identity(3), Perm{1, 0, 2}, Perm{0, 2, 1}};
  CHECK_THROWS_AS(PermGroup::from_elements(ops, not_closed), NotASubgroup);
}

TEST_CASE("normality and normal closure in S3") {
  PermGroup s3 = close_perms({Perm{1, 0, 2}, Perm{0, 2, 1}});
  PermGroup a3 = close_perms({Perm{1, 2, 0}});
  PermGroup flip = close_perms({Perm{1, 0, 2}});
  CHECK(is_normal_in(a3, s3));
  CHECK_FALSE(is_normal_in(flip, s3));
  CHECK(normal_closure(flip.generators(), s3).order() == 6);
  CHECK(center(s3).order() == 1);

  auto chain = subnormal_chain(flip, s3);
  CHECK_FALSE(chain.subnormal);
  auto chain2 = subnormal_chain(a3, s3);
  CHECK(chain2.subnormal);
  CHECK(chain2.orders == std::vector<std::size_t>{6, 3});
}

TEST_CASE("subnormality agrees with brute-force chain search") {
  std::vector<PermGroup> groups;
  groups.push_back(close_perms({Perm{1, 0, 2, 3}, Perm{0, 1, 3, 2}, Perm{2, 3, 0, 1}}));  // D4
  groups.push_back(close_perms({Perm{1, 2, 3, 0}, Perm{1, 0, 3, 2}}));                    // D4 again, natural degree
  groups.push_back(regular_rep(symmetric_group(3)));
  groups.push_back(close_perms({Perm{1, 2, 0, 3}, Perm{0, 2, 3, 1}}));  // A4
  for (const PermGroup& g : groups) {
    REQUIRE(g.order() <= 200);
    auto subs = brute_all_subgroups(g);
    // reachability oracle: H subnormal iff a chain of normal steps reaches G
    auto set_of = element_set(g);
    for (const auto& helems : subs) {
      std::vector<Perm> hperv;
      for (const auto& img : helems) hperv.emplace_back(std::vector<std::uint8_t>(img));
      PermGroup h = PermGroup::from_elements(g.ops(), hperv);
      // brute force: iterate "is normal in some strictly bigger subgroup" steps
      std::set<std::set<std::vector<std::uint8_t>>> frontier{helems};
      bool reached = helems == set_of;
      for (int step = 0; step < 10 && !reached; ++step) {
        std::set<std::set<std::vector<std::uint8_t>>> next;
        for (const auto& cur : frontier) {
          std::vector<Perm> curv;
          for (const auto& img : cur) curv.emplace_back(std::vector<std::uint8_t>(img));
          PermGroup curg = PermGroup::from_elements(g.ops(), curv);
          for (const auto& bigger : subs) {
            if (bigger.size() <= cur.size()) continue;
            if (!std::includes(bigger.begin(), bigger.end(), cur.begin(), cur.end())) continue;
            std::vector<Perm> bigv;
            for (const auto& img : bigger) bigv.emplace_back(std::vector<std::uint8_t>(img));
            PermGroup bigg = PermGroup::from_elements(g.ops(), bigv);
            if (is_normal_in(curg, bigg)) {
              if (bigger == set_of) reached = true;
              next.insert(bigger);
            }
          }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
      }
      CHECK(subnormal_chain(h, g).subnormal == reached);
    }
  }
}

TEST_CASE("p-group predicates and p-core") {
  PermGroup s3 = regular_rep(symmetric_group(3));
  CHECK_FALSE(is_p_group(s3, 2));
  CHECK(p_core(s3, 3).order() == 3);
  CHECK(p_core(s3, 2).order() == 1);

  PermGroup d4 = regular_rep(dihedral_group(8));
  CHECK(is_p_group(d4, 2));
  CHECK(p_core(d4, 2).order() == 8);
}

TEST_CASE("p-core contains every normal p-subgroup found by element search") {
  std::vector<PermGroup> groups{regular_rep(symmetric_group(4)),
                                regular_rep(dihedral_group(12)),
                                regular_rep(direct_product(symmetric_group(3), cyclic_group(2)))};
  for (const PermGroup& g : groups) {
    REQUIRE(g.order() <= 5000);
    for (int p : {2, 3}) {
      PermGroup core = p_core(g, p);
      CHECK(is_p_group(core, p));
      CHECK(is_normal_in(core, g));
      for (const Perm& e : g.elements()) {
        PermGroup ncl = normal_closure({e}, g);
        if (is_p_group(ncl, p))
          for (const Perm& x : ncl.elements()) CHECK(core.contains(x));
      }
    }
  }
}

TEST_CASE("center, p_component and socle") {
  PermGroup d4 = regular_rep(dihedral_group(8));
  CHECK(center(d4).order() == 2);

  PermGroup z6 = regular_rep(cyclic_group(6));
  CHECK(p_component(z6, 2).order() == 2);
  CHECK(p_component(z6, 3).order() == 3);

  PermGroup z2z4 = regular_rep(direct_product(cyclic_group(2), cyclic_group(4)));
  CHECK(p_component(z2z4, 2).order() == 8);
  CHECK(elementary_abelian_socle(z2z4, 2).order() == 4);

  CHECK_THROWS_AS(p_component(regular_rep(symmetric_group(3)), 2), NotCommutative);
}

TEST_CASE("group intersection") {
  PermGroup s3 = close_perms({Perm{1, 0, 2}, Perm{0, 2, 1}});
  PermGroup a3 = close_perms({Perm{1, 2, 0}});
  PermGroup flip = close_perms({Perm{1, 0, 2}});
  CHECK(intersection(a3, flip).order() == 1);
  CHECK(intersection(s3, a3).order() == 3);
}

TEST_CASE("provenance words reproduce elements") {
  PermGroup s3 = close_perms({Perm{1, 0, 2}, Perm{0, 2, 1}});
  for (std::size_t i = 0; i < s3.order(); ++i) {
    Perm acc = Perm::identity(3);
    for (int gi : s3.word(static_cast<int>(i))) acc = acc * s3.generators()[static_cast<std::size_t>(gi)];
    CHECK(acc == s3.elements()[i]);
  }
}

TEST_CASE("debug dump lists one image sequence per line") {
  PermGroup g = close_perms({Perm{1, 0, 2}});
  std::string dump = dump_group(g);
  CHECK(dump == "[0 1 2]\n[1 0 2]\n");
}
