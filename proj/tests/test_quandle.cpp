#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mcq/quandle.hpp>

#include "test_support.hpp"

using namespace mcq;
using mcqtest::oracle_quandle_type;
using mcqtest::symmetric_group_3;

namespace {

FiniteQuandle trivial_quandle(Index n) {
  Table op(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) op[a][b] = a;
  return FiniteQuandle{n, op};
}

}  // namespace

TEST_CASE("verify_quandle examples") {
  CHECK(verify_quandle(dihedral_quandle(3).op).pass);
  CHECK(verify_quandle(trivial_quandle(4).op).pass);

  Table bad = dihedral_quandle(3).op;
  bad[0][0] = 1;
  const Verdict v = verify_quandle(bad);
  CHECK_FALSE(v.pass);
  CHECK(v.condition == "Q1");
  CHECK(v.witness == std::vector<Index>{0});

  CHECK_THROWS_AS(verify_quandle(Table{{0, 1}, {1}}), MalformedInput);
  CHECK_THROWS_AS(verify_quandle(Table{{0, 9}, {1, 1}}), MalformedInput);
}

TEST_CASE("make_quandle accepts valid tables and rejects the rest") {
  const FiniteQuandle q = make_quandle(dihedral_quandle(5).op);
  CHECK(q.order == 5);
  CHECK_THROWS_AS(make_quandle(Table{{1, 0}, {1, 1}}), InvalidArgument);
}

TEST_CASE("every single-entry mutation of a valid quandle table is rejected") {
  const FiniteQuandle q = dihedral_quandle(4);
  for (Index a = 0; a < q.order; ++a)
    for (Index b = 0; b < q.order; ++b)
      for (Index v = 0; v < q.order; ++v) {
        if (v == q.op[a][b]) continue;
        Table t = q.op;
        t[a][b] = v;
        CHECK_FALSE(verify_quandle(t).pass);
      }
}

TEST_CASE("conj_quandle") {
  const FiniteQuandle t = conj_quandle(cyclic_group(2));
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b) CHECK(t.op[a][b] == a);

  CHECK(conj_quandle(cyclic_group(1)).order == 1);

  const FiniteQuandle s3 = conj_quandle(symmetric_group_3());
  CHECK(verify_quandle(s3.op).pass);
  bool nontrivial = false;
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b)
      if (s3.op[a][b] != a) nontrivial = true;
  CHECK(nontrivial);
}

TEST_CASE("conj_quandle is trivial exactly for abelian groups") {
  auto is_trivial = [](const FiniteQuandle& q) {
    for (Index a = 0; a < q.order; ++a)
      for (Index b = 0; b < q.order; ++b)
        if (q.op[a][b] != a) return false;
    return true;
  };
  CHECK(is_trivial(conj_quandle(cyclic_group(4))));
  CHECK(is_trivial(conj_quandle(cyclic_group(6))));
  CHECK_FALSE(is_trivial(conj_quandle(symmetric_group_3())));
}

TEST_CASE("dihedral_quandle") {
  CHECK(dihedral_quandle(3).op[0][1] == 2);
  CHECK(dihedral_quandle(1).order == 1);
  CHECK(dihedral_quandle(4).op[1][3] == 1);
  CHECK_THROWS_AS(dihedral_quandle(0), InvalidArgument);
  for (Index n : {1, 2, 3, 4, 5, 6}) CHECK(verify_quandle(dihedral_quandle(n).op).pass);
}

TEST_CASE("alexander_quandle_zn") {
  CHECK(alexander_quandle_zn(3, 2).op == dihedral_quandle(3).op);
  CHECK(alexander_quandle_zn(5, 1).op == trivial_quandle(5).op);
  CHECK_THROWS_AS(alexander_quandle_zn(4, 2), InvalidArgument);
  CHECK(verify_quandle(alexander_quandle_zn(5, 2).op).pass);
  CHECK(verify_quandle(alexander_quandle_zn(5, 3).op).pass);
}

TEST_CASE("quandle_type with iteration oracle") {
  const FiniteQuandle r3 = dihedral_quandle(3);
  CHECK(quandle_type(r3) == 2);
  CHECK(oracle_quandle_type(r3) == 2);

  for (Index n : {1, 2, 4, 7}) CHECK(quandle_type(trivial_quandle(n)) == 1);

  const FiniteQuandle a52 = alexander_quandle_zn(5, 2);
  CHECK(quandle_type(a52) == 4);
  CHECK(oracle_quandle_type(a52) == 4);

  for (const FiniteQuandle& q :
       {dihedral_quandle(4), dihedral_quandle(6), alexander_quandle_zn(7, 3),
        conj_quandle(symmetric_group_3())})
    CHECK(quandle_type(q) == oracle_quandle_type(q));
}

TEST_CASE("applying the operation type-many times is the identity") {
  for (const FiniteQuandle& q :
       {dihedral_quandle(5), alexander_quandle_zn(5, 2),
        conj_quandle(symmetric_group_3()), trivial_quandle(3)}) {
    const long long type = quandle_type(q);
    for (Index a = 0; a < q.order; ++a)
      for (Index b = 0; b < q.order; ++b) {
        Index r = a;
        for (long long i = 0; i < type; ++i) r = q.op[r][b];
        CHECK(r == a);
      }
  }
}

TEST_CASE("check_quandle_hom") {
  const FiniteQuandle r3 = dihedral_quandle(3);

  const HomReport id = check_quandle_hom({0, 1, 2}, r3, r3);
  CHECK(id.verdict.pass);
  CHECK(id.bijective);

  const FiniteQuandle point = trivial_quandle(1);
  const HomReport constant = check_quandle_hom({0, 0, 0}, r3, point);
  CHECK(constant.verdict.pass);
  CHECK(constant.surjective);
  CHECK(constant.constant_fibers);
  CHECK(constant.fiber_size == 3);

  // Every permutation of R_3 is an automorphism (the affine maps x -> ax+b
  // over Z_3 exhaust S_3), so a failing map needs a bigger quandle: the
  // transposition (0 1) on R_4 breaks the operation at (0,1).
  const HomReport swap_r3 = check_quandle_hom({1, 0, 2}, r3, r3);
  CHECK(swap_r3.verdict.pass);
  const FiniteQuandle r4 = dihedral_quandle(4);
  const HomReport swap_r4 = check_quandle_hom({1, 0, 2, 3}, r4, r4);
  CHECK_FALSE(swap_r4.verdict.pass);
  CHECK(swap_r4.verdict.condition == "hom-op");
  CHECK(swap_r4.verdict.witness == std::vector<Index>{0, 1});

  CHECK_THROWS_AS(check_quandle_hom({0, 1}, r3, r3), MalformedInput);
}
