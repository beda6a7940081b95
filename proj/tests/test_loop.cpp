#include <doctest.h>

#include <sstream>

#include "loopkit/errors.hpp"
#include "loopkit/table_io.hpp"
#include "test_helpers.hpp"

using namespace loopkit;

namespace {

std::vector<std::vector<int>> z4_table() {
  return {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
}

}  // namespace

TEST_CASE("validate_loop accepts group tables") {
  FiniteLoop q = FiniteLoop::from_table(z4_table());
  CHECK(q.size() == 4);
  CHECK(q.mul(1, 3) == 0);
  CHECK(q.ldiv(1, 0) == 3);
  CHECK(q.rdiv(0, 1) == 3);
}

TEST_CASE("validate_loop rejects a forced row repeat") {
  auto t = z4_table();
  std::swap(t[1][1], t[1][2]);
  CHECK_THROWS_AS(FiniteLoop::from_table(t), NotLatinSquare);
  try {
    FiniteLoop::from_table(t);
  } catch (const NotLatinSquare& e) {
    CHECK(e.row >= 0);
    CHECK(e.col >= 0);
  }
}

TEST_CASE("validate_loop rejects tables without identity") {
  // rows and columns are permutations but no two-sided identity
  std::vector<std::vector<int>> t = {{1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  CHECK_THROWS_AS(FiniteLoop::from_table(t), NoIdentity);
}

TEST_CASE("identity is renumbered to 0") {
  // Z3 with identity living at index 2
  std::vector<std::vector<int>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  FiniteLoop q = FiniteLoop::from_table(t);
  for (int x = 0; x < 3; ++x) {
    CHECK(q.mul(0, x) == x);
    CHECK(q.mul(x, 0) == x);
  }
}

TEST_CASE("division identities hold on a mixed bag of loops") {
  for (const FiniteLoop& q : {cyclic_group(6), testing::moufang_12(),
                              testing::order5_nonassociative_loop()}) {
    for (int x = 0; x < q.size(); ++x)
      for (int y = 0; y < q.size(); ++y) {
        CHECK(q.ldiv(x, q.mul(x, y)) == y);
        CHECK(q.mul(x, q.ldiv(x, y)) == y);
        CHECK(q.rdiv(q.mul(y, x), x) == y);
        CHECK(q.mul(q.rdiv(y, x), x) == y);
      }
  }
}

TEST_CASE("chein double of S3 round-trips through the tbl format") {
  FiniteLoop q = testing::moufang_12();
  CHECK(q.size() == 12);
  std::ostringstream buf;
  write_table(buf, q, "M(S3,2)");
  std::istringstream in(buf.str());
  FiniteLoop back = read_table(in);
  CHECK(back.rows() == q.rows());
}

TEST_CASE("is_moufang") {
  CHECK(is_moufang(cyclic_group(8)).holds);
  CHECK(is_moufang(symmetric_group(3)).holds);
  CHECK(is_moufang(testing::moufang_12()).holds);

  FiniteLoop bad = testing::order5_nonassociative_loop();
  MoufangCheck mc = is_moufang(bad);
  CHECK_FALSE(mc.holds);
  auto [x, y, z] = mc.witness;
  CHECK(bad.mul(x, bad.mul(y, bad.mul(x, z))) != bad.mul(bad.mul(bad.mul(x, y), x), z));
}

TEST_CASE("the four Moufang identities agree on whole loops") {
  for (const FiniteLoop& q : {testing::moufang_12(), testing::moufang_16d(),
                              cyclic_group(9), testing::order5_nonassociative_loop()}) {
    bool first = moufang_identity_holds(q, 0);
    for (int which = 1; which < 4; ++which) CHECK(moufang_identity_holds(q, which) == first);
  }
}

TEST_CASE("identity suite") {
  IdentityReport z6 = check_identity_suite(cyclic_group(6));
  CHECK(z6.inverse_property);
  CHECK(z6.power_associative);
  CHECK(z6.diassociative);
  CHECK(z6.flexible);

  IdentityReport m12 = check_identity_suite(testing::moufang_12());
  CHECK(m12.inverse_property);
  CHECK(m12.power_associative);
  CHECK(m12.diassociative);
  CHECK(m12.flexible);

  IdentityReport bad = check_identity_suite(testing::order5_nonassociative_loop());
  CHECK_FALSE(bad.diassociative);
}

TEST_CASE("d-divisibility") {
  CHECK_FALSE(is_d_divisible(cyclic_group(3), 3));
  CHECK(is_d_divisible(cyclic_group(4), 3));
  CHECK_FALSE(is_d_divisible(testing::moufang_12(), 3));  // gcd(12,3) = 3
  CHECK(is_d_divisible(testing::moufang_16d(), 3));
  CHECK(is_d_divisible(testing::moufang_20(), 3));
}

TEST_CASE("cube map surjective iff order coprime to 3, for Moufang loops") {
  for (const FiniteLoop& q : {cyclic_group(5), cyclic_group(9), cyclic_group(12),
                              symmetric_group(3), testing::moufang_12(), testing::moufang_16d(),
                              testing::moufang_20()}) {
    bool coprime = q.size() % 3 != 0;
    CHECK(is_d_divisible(q, 3) == coprime);
  }
}

TEST_CASE("commutator and associator") {
  FiniteLoop z6 = cyclic_group(6);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) CHECK(commutator(z6, x, y) == 0);

  FiniteLoop s3 = symmetric_group(3);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      for (int z = 0; z < 6; ++z) CHECK(associator(s3, x, y, z) == 0);

  FiniteLoop m12 = testing::moufang_12();
  bool found = false;
  for (int x = 0; x < 12 && !found; ++x)
    for (int y = 0; y < 12 && !found; ++y)
      for (int z = 0; z < 12 && !found; ++z)
        if (associator(m12, x, y, z) != 0) found = true;
  CHECK(found);

  // [x,y] = 1 iff xy = yx and [x,y,z] = 1 iff xy.z = x.yz
  for (int x = 0; x < 12; ++x)
    for (int y = 0; y < 12; ++y) {
      CHECK((commutator(m12, x, y) == 0) == (m12.mul(x, y) == m12.mul(y, x)));
      for (int z = 0; z < 12; ++z)
        CHECK((associator(m12, x, y, z) == 0) ==
              (m12.mul(m12.mul(x, y), z) == m12.mul(x, m12.mul(y, z))));
    }
}

TEST_CASE("powers in a power-associative loop") {
  FiniteLoop m12 = testing::moufang_12();
  for (int x = 0; x < 12; ++x) {
    CHECK(m12.power(x, 0) == 0);
    CHECK(m12.power(x, 1) == x);
    CHECK(m12.mul(x, m12.power(x, -1)) == 0);
    CHECK(m12.power(x, 3) == m12.mul(x, m12.mul(x, x)));
    CHECK(m12.power(x, -2) == m12.inv(m12.power(x, 2)));
  }
}

TEST_CASE("tbl parser rejects bad input") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_table(in);
  };
  CHECK_THROWS_AS(parse("2\n0 1\n1 0 0\n"), BadTable);  // ragged
  CHECK_THROWS_AS(parse("2\n0 1\n1 2\n"), BadTable);    // out of range
  CHECK_THROWS_AS(parse("2\n0 1\n"), BadTable);         // truncated
  CHECK_THROWS_AS(parse("x\n"), BadTable);              // bad order
  CHECK_THROWS_AS(parse("2\n0 1\n1 x\n"), BadTable);    // non-numeric
  FiniteLoop ok = parse("# comment\n2\n# another\n0 1\n1 0\n");
  CHECK(ok.size() == 2);
}
