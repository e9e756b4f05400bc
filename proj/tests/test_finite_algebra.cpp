#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mcq/finite_algebra.hpp>

#include <random>

#include "test_support.hpp"

using namespace mcq;
using mcqtest::oracle_group_ok;
using mcqtest::symmetric_group_3;

TEST_CASE("cyclic_group basics") {
  const FiniteGroup g1 = cyclic_group(1);
  CHECK(g1.order == 1);
  CHECK(g1.identity == 0);

  const FiniteGroup g2 = cyclic_group(2);
  CHECK(g2.cayley == Table{{0, 1}, {1, 0}});

  const FiniteGroup g6 = cyclic_group(6);
  CHECK(g6.inverse[2] == 4);

  CHECK_THROWS_AS(cyclic_group(0), InvalidArgument);
}

TEST_CASE("constructed groups satisfy identity and inverse laws exhaustively") {
  for (const FiniteGroup& g :
       {cyclic_group(1), cyclic_group(4), cyclic_group(6), symmetric_group_3()}) {
    for (Index a = 0; a < g.order; ++a) {
      CHECK(g.cayley[g.identity][a] == a);
      CHECK(g.cayley[a][g.identity] == a);
      CHECK(g.cayley[a][g.inverse[a]] == g.identity);
      CHECK(g.cayley[g.inverse[a]][a] == g.identity);
    }
  }
}

TEST_CASE("verify_group accepts valid tables and names failed axioms") {
  const FiniteGroup z3 = cyclic_group(3);
  CHECK(verify_group({3, z3.cayley, 0, std::nullopt}).pass);

  // cayley(0,1)=1, cayley(1,0)=0 with identity 0: associative but 1*0 != 1
  GroupCandidate bad{2, Table{{0, 1}, {0, 1}}, 0, std::nullopt};
  const Verdict v = verify_group(bad);
  CHECK_FALSE(v.pass);
  CHECK(v.condition == "identity");
  CHECK(v.witness == std::vector<Index>{1});

  GroupCandidate out_of_range{2, Table{{0, 5}, {1, 0}}, 0, std::nullopt};
  CHECK_THROWS_AS(verify_group(out_of_range), MalformedInput);
  GroupCandidate ragged{2, Table{{0, 1}, {1}}, 0, std::nullopt};
  CHECK_THROWS_AS(verify_group(ragged), MalformedInput);
}

TEST_CASE("verify_group agrees with an independent axiom scan on random tables") {
  std::mt19937_64 rng(20240811);
  int accepted = 0;
  for (int sample = 0; sample < 400; ++sample) {
    const Index n = 1 + static_cast<Index>(rng() % 4);
    Table t(n, std::vector<Index>(n));
    for (auto& row : t)
      for (Index& cell : row) cell = static_cast<Index>(rng() % n);
    const Index e = static_cast<Index>(rng() % n);
    const bool expected = oracle_group_ok(t, e);
    const bool got = verify_group({n, t, e, std::nullopt}).pass;
    CHECK(got == expected);
    if (got) ++accepted;
  }
  // order-1 tables are always groups, so the sample must contain some passes
  CHECK(accepted > 0);
}

TEST_CASE("every single-entry mutation of a valid group table is rejected") {
  for (const FiniteGroup& g : {cyclic_group(4), symmetric_group_3()}) {
    for (Index a = 0; a < g.order; ++a)
      for (Index b = 0; b < g.order; ++b)
        for (Index v = 0; v < g.order; ++v) {
          if (v == g.cayley[a][b]) continue;
          Table t = g.cayley;
          t[a][b] = v;
          CHECK_FALSE(verify_group({g.order, t, g.identity, std::nullopt}).pass);
        }
  }
}

TEST_CASE("ring_zn units") {
  CHECK(ring_zn(2).units == std::vector<Index>{1});
  CHECK(ring_zn(6).units == std::vector<Index>{1, 5});
  CHECK(ring_zn(5).units == std::vector<Index>{1, 2, 3, 4});
  CHECK_THROWS_AS(ring_zn(1), InvalidArgument);
  CHECK_THROWS_AS(ring_zn(0), InvalidArgument);

  // two-sided inverse scan, independent of the constructor
  const FiniteRing z6 = ring_zn(6);
  std::vector<Index> units;
  for (Index u = 0; u < 6; ++u)
    for (Index v = 0; v < 6; ++v)
      if (z6.mul(u, v) == 1 && z6.mul(v, u) == 1) {
        units.push_back(u);
        break;
      }
  CHECK(units == z6.units);
}

TEST_CASE("verify_ring names the violated law") {
  const FiniteRing z4 = ring_zn(4);
  CHECK(verify_ring({4, z4.add_table, z4.mul_table, 0, 1}).pass);

  const FiniteRing z2 = ring_zn(2);
  Table bad_mul = z2.mul_table;
  bad_mul[1][1] = 0;
  const Verdict v = verify_ring({2, z2.add_table, bad_mul, 0, 1});
  CHECK_FALSE(v.pass);
  CHECK(v.condition == "mul-identity");

  const Verdict zero_is_one = verify_ring({2, z2.add_table, z2.mul_table, 0, 0});
  CHECK_FALSE(zero_is_one.pass);
  CHECK(zero_is_one.condition == "one-ne-zero");
}

TEST_CASE("shipped rings are distributive on all triples") {
  for (Index n : {2, 3, 4, 6}) {
    const FiniteRing r = ring_zn(n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c) {
          CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
          CHECK(r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c)));
        }
  }
}

TEST_CASE("every single-entry mutation of the Z_6 ring tables is rejected") {
  const FiniteRing z6 = ring_zn(6);
  for (int which = 0; which < 2; ++which)
    for (Index a = 0; a < 6; ++a)
      for (Index b = 0; b < 6; ++b)
        for (Index v = 0; v < 6; ++v) {
          Table add = z6.add_table;
          Table mul = z6.mul_table;
          Index& cell = which == 0 ? add[a][b] : mul[a][b];
          if (v == cell) continue;
          cell = v;
          CHECK_FALSE(verify_ring({6, add, mul, 0, 1}).pass);
        }
}

TEST_CASE("the 2x2 matrix ring over F_2 is a valid noncommutative ring") {
  const FiniteRing m2 = mcqtest::matrix_ring_2x2_f2();
  CHECK(m2.order == 16);
  CHECK(m2.one == 9);
  // |GL(2,2)| = 6, and the unit group is nonabelian
  CHECK(m2.units.size() == 6);
  bool commutative = true;
  bool units_commute = true;
  for (Index a = 0; a < 16; ++a)
    for (Index b = 0; b < 16; ++b)
      if (m2.mul(a, b) != m2.mul(b, a)) commutative = false;
  for (Index u : m2.units)
    for (Index v : m2.units)
      if (m2.mul(u, v) != m2.mul(v, u)) units_commute = false;
  CHECK_FALSE(commutative);
  CHECK_FALSE(units_commute);
  for (Index u : m2.units) {
    CHECK(m2.mul(u, m2.inv(u)) == m2.one);
    CHECK(m2.mul(m2.inv(u), u) == m2.one);
  }
}

TEST_CASE("module_self") {
  const FiniteRing z3 = ring_zn(3);
  const LeftModule m = module_self(z3);
  CHECK(m.action == z3.mul_table);
  CHECK(m.act(2, 2) == 1);
  const FiniteRing z5 = ring_zn(5);
  const LeftModule m5 = module_self(z5);
  for (Index u = 0; u < 5; ++u) CHECK(m5.act(z5.one, u) == u);
  CHECK(verify_module({{m.carrier.order, m.carrier.cayley, m.carrier.identity,
                        std::nullopt},
                       m.action},
                      z3)
            .pass);
}

TEST_CASE("module_power") {
  const FiniteRing z2 = ring_zn(2);
  const LeftModule m = module_power(z2, 2);
  CHECK(m.size() == 4);
  CHECK(verify_module({{4, m.carrier.cayley, 0, std::nullopt}, m.action}, z2).pass);

  const FiniteRing z3 = ring_zn(3);
  CHECK(module_power(z3, 1).action == module_self(z3).action);
  CHECK(module_power(z3, 1).carrier.cayley == module_self(z3).carrier.cayley);

  const LeftModule m3 = module_power(z2, 3);
  for (Index u = 0; u < m3.size(); ++u) CHECK(m3.act(z2.zero, u) == m3.zero());

  CHECK_THROWS_AS(module_power(z2, 0), InvalidArgument);
}

TEST_CASE("check_module rejects a broken action") {
  const FiniteRing z2 = ring_zn(2);
  LeftModule m = module_self(z2);
  m.action[1][1] = 0;  // 1*1 must be 1
  const Verdict v = verify_module(
      {{2, m.carrier.cayley, 0, std::nullopt}, m.action}, z2);
  CHECK_FALSE(v.pass);
  CHECK(v.condition == "action-unital");
}
