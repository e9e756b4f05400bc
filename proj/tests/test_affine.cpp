#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mcq/affine.hpp>

#include <random>

#include "test_support.hpp"

using namespace mcq;
using mcqtest::symmetric_group_3;
using mcqtest::z2_family_on_r3;

namespace {

FiniteMcq conj_z2() { return mcq_from_group(cyclic_group(2)); }

SixTuple trivial_on(const FiniteMcq& m, Index n) {
  const FiniteRing r = ring_zn(n);
  return trivial_tuple(m, r, module_self(r));
}

bool tuples_equal(const SixTuple& a, const SixTuple& b) {
  return a.f1 == b.f1 && a.f2 == b.f2 && a.f3 == b.f3 && a.f4 == b.f4 &&
         a.phi1 == b.phi1 && a.phi2 == b.phi2;
}

}  // namespace

TEST_CASE("trivial tuple passes everywhere") {
  for (const FiniteMcq& m :
       {conj_z2(), mcq_from_group(symmetric_group_3()),
        associated_mcq(z2_family_on_r3())}) {
    for (Index n : {2, 3}) {
      const SixTuple t = trivial_on(m, n);
      CHECK(verify_six_tuple(t).pass);
      CHECK(verify_alt_1ii(t).pass);
      CHECK(verify_tuple_derived(t).pass);
    }
    const FiniteRing z2 = ring_zn(2);
    CHECK(verify_six_tuple(trivial_tuple(m, z2, module_power(z2, 2))).pass);
  }
}

TEST_CASE("a zero f3 entry fails (0-i)") {
  SixTuple t = trivial_on(conj_z2(), 2);
  t.f3[0][0][1] = 0;
  const Verdict v = verify_six_tuple(t);
  CHECK_FALSE(v.pass);
  CHECK(v.condition == "(0-i)");
  CHECK(v.witness == std::vector<Index>{0, 1});
}

TEST_CASE("embedding a verified augmented pair gives a verified tuple") {
  const FiniteMcq m = conj_z2();
  const FiniteRing r = ring_zn(2);
  AugmentedPair aug = trivial_augmented(m, r, module_self(r));
  aug.phi2[0] = Table{{1, 1}, {1, 0}};  // one of the four Z_2 cocycles
  REQUIRE(pair_is_augmented_alexander(aug).pass);

  const SixTuple t = embed_pair_as_tuple(aug);
  CHECK(verify_six_tuple(t).pass);
  CHECK(verify_alt_1ii(t).pass);

  // f3 = 1 and f4 constant along each row a
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b) {
      CHECK(t.f3[0][a][b] == r.one);
      CHECK(t.f4[0][a][b] == t.f4[0][a][0]);
    }

  // the affine extension equals the augmented extension table-for-table
  const McqCandidate via_tuple = extension_candidate_affine(t);
  const McqCandidate via_pair = extension_candidate_augmented(aug);
  CHECK(via_tuple.triangle == via_pair.triangle);
  REQUIRE(via_tuple.components.size() == via_pair.components.size());
  for (size_t c = 0; c < via_tuple.components.size(); ++c)
    CHECK(via_tuple.components[c].cayley == via_pair.components[c].cayley);
}

TEST_CASE("trivial tuple inverse is (a^-1, -u)") {
  const FiniteMcq m = mcq_from_group(cyclic_group(3));
  const FiniteRing r = ring_zn(3);
  const SixTuple t = trivial_tuple(m, r, module_self(r));
  const Extension ext = build_affine_extension(t);
  const Index mn = 3;
  for (Index a = 0; a < 3; ++a)
    for (Index u = 0; u < 3; ++u)
      CHECK(ext.mcq.inv(a * mn + u) == ((3 - a) % 3) * mn + (3 - u) % 3);
}

TEST_CASE("affine extension carries the stated identity and inverse closed forms") {
  const FiniteMcq m = mcq_from_group(symmetric_group_3());
  const FiniteRing r = ring_zn(3);
  SixTuple t = trivial_on(m, 3);
  std::mt19937_64 rng(5);
  const EquivalenceWitness w = random_witness(t, rng());
  t = transport_six_tuple(t, w);
  const Extension ext = build_affine_extension(t);
  const LeftModule& M = t.module;
  const Index mn = M.size();

  for (int c = 0; c < m.num_components(); ++c) {
    const Index e = m.components[c].identity;
    // identity (e, -phi2(e,e))
    CHECK(ext.mcq.components[c].identity ==
          e * mn + M.neg(t.phi2[c][e][e]));
    for (Index a = 0; a < m.components[c].order; ++a) {
      const Index ainv = m.components[c].inverse[a];
      for (Index u = 0; u < mn; ++u) {
        // inverse (a^-1, -f3(e,a^-1)(f4(a^-1,a)u + phi2(a^-1,a) + phi2(e,e)))
        const Index parenthesized = M.add(
            M.add(M.act(t.f4[c][ainv][a], u), t.phi2[c][ainv][a]),
            t.phi2[c][e][e]);
        const Index second = M.neg(M.act(t.f3[c][e][ainv], parenthesized));
        CHECK(ext.mcq.components[c].inverse[a * mn + u] == ainv * mn + second);
      }
    }
  }
}

TEST_CASE("six-tuple converse: exhaustive agreement on the one-element MCQ") {
  const FiniteMcq m = mcq_from_group(cyclic_group(1));
  const FiniteRing r = ring_zn(2);
  SixTuple t = trivial_tuple(m, r, module_self(r));
  int survivors = 0;
  for (int code = 0; code < 64; ++code) {
    t.f1[0][0] = (code >> 5) & 1;
    t.f2[0][0] = (code >> 4) & 1;
    t.f3[0][0][0] = (code >> 3) & 1;
    t.f4[0][0][0] = (code >> 2) & 1;
    t.phi1[0][0] = (code >> 1) & 1;
    t.phi2[0][0][0] = code & 1;
    const ConverseReport rep = check_converse_six_tuple(t);
    CHECK(rep.agree);
    survivors += rep.conditions.pass;
  }
  CHECK(survivors > 0);
}

TEST_CASE("random single-entry mutations: failed conditions imply failed structure") {
  const FiniteMcq m = conj_z2();
  const FiniteRing r = ring_zn(3);
  const SixTuple base = trivial_tuple(m, r, module_self(r));
  std::mt19937_64 rng(987654321);
  int condition_failures = 0;
  for (int sample = 0; sample < 1000; ++sample) {
    SixTuple t = sample % 2 == 0
                     ? base
                     : transport_six_tuple(base, random_witness(base, rng()));
    // mutate one entry of one of the six tables
    const int which = static_cast<int>(rng() % 6);
    const Index i = static_cast<Index>(rng() % 2);
    const Index j = static_cast<Index>(rng() % 2);
    const Index delta = 1 + static_cast<Index>(rng() % 2);
    switch (which) {
      case 0: t.f1[i][j] = (t.f1[i][j] + delta) % 3; break;
      case 1: t.f2[i][j] = (t.f2[i][j] + delta) % 3; break;
      case 2: t.f3[0][i][j] = (t.f3[0][i][j] + delta) % 3; break;
      case 3: t.f4[0][i][j] = (t.f4[0][i][j] + delta) % 3; break;
      case 4: t.phi1[i][j] = (t.phi1[i][j] + delta) % 3; break;
      default: t.phi2[0][i][j] = (t.phi2[0][i][j] + delta) % 3; break;
    }
    const ConverseReport rep = check_converse_six_tuple(t);
    CHECK(rep.agree);
    if (!rep.conditions.pass) {
      ++condition_failures;
      CHECK_FALSE(rep.structure.pass);
    }
  }
  CHECK(condition_failures > 0);
}

TEST_CASE("check_equivalence is reflexive with the identity witness") {
  const SixTuple t = trivial_on(associated_mcq(z2_family_on_r3()), 3);
  CHECK(check_equivalence(t, t, identity_witness(t)).pass);
}

TEST_CASE("transport over Z_3 with h = (1,2)") {
  const SixTuple t = trivial_on(conj_z2(), 3);
  EquivalenceWitness w;
  w.h = {1, 2};
  w.eta = {0, 0};
  const SixTuple moved = transport_six_tuple(t, w);
  CHECK(verify_six_tuple(moved).pass);
  CHECK(check_equivalence(t, moved, w).pass);
  // x <| y = x here, so g1(x,y) = h(x) f1(x,y) h(x)^-1 = 1
  for (Index x = 0; x < 2; ++x)
    for (Index y = 0; y < 2; ++y) CHECK(moved.f1[x][y] == 1);
  // g3(a,b) = h(ab) h(a)^-1 here
  CHECK(moved.f3[0][0][0] == 1);  // h(0) h(0)^-1
  CHECK(moved.f3[0][0][1] == 2);  // h(1) h(0)^-1 = 2*1
  CHECK(moved.f3[0][1][0] == 1);  // h(1) h(1)^-1
  CHECK(moved.f3[0][1][1] == 2);  // h(0) h(1)^-1 = 1*2
}

TEST_CASE("a non-unit h value is an invalid witness") {
  const SixTuple t = trivial_on(conj_z2(), 3);
  EquivalenceWitness w;
  w.h = {1, 0};
  w.eta = {0, 0};
  CHECK_THROWS_AS(check_equivalence(t, t, w), InvalidArgument);
  CHECK_THROWS_AS(transport_six_tuple(t, w), InvalidArgument);
}

TEST_CASE("tuples over different structures are rejected") {
  const SixTuple a = trivial_on(conj_z2(), 2);
  const SixTuple b = trivial_on(conj_z2(), 3);
  CHECK_THROWS_AS(check_equivalence(a, b, identity_witness(a)), InvalidArgument);
}

TEST_CASE("witness algebra: inverse and composition") {
  const FiniteMcq m = associated_mcq(z2_family_on_r3());
  const SixTuple t = trivial_on(m, 5);
  std::mt19937_64 rng(41);
  const EquivalenceWitness w1 = random_witness(t, rng());
  const SixTuple t1 = transport_six_tuple(t, w1);

  // symmetry: transporting back with the inverse witness recovers t
  const EquivalenceWitness w1_inv = invert_witness(t, w1);
  CHECK(tuples_equal(transport_six_tuple(t1, w1_inv), t));
  CHECK(check_equivalence(t1, t, w1_inv).pass);

  // transitivity: the composite witness relates t to t2 directly
  const EquivalenceWitness w2 = random_witness(t, rng());
  const SixTuple t2 = transport_six_tuple(t1, w2);
  const EquivalenceWitness w12 = compose_witnesses(t, w1, w2);
  CHECK(check_equivalence(t, t2, w12).pass);
  CHECK(tuples_equal(transport_six_tuple(t, w12), t2));
}

TEST_CASE("induced isomorphism") {
  const SixTuple t = trivial_on(conj_z2(), 3);

  // identity witness gives the identity map
  const MapVec id_map = induced_isomorphism(t, t, identity_witness(t));
  for (size_t i = 0; i < id_map.size(); ++i) CHECK(id_map[i] == static_cast<Index>(i));

  EquivalenceWitness w;
  w.h = {1, 2};
  w.eta = {0, 0};
  const SixTuple moved = transport_six_tuple(t, w);
  const Extension e1 = build_affine_extension(t);
  const Extension e2 = build_affine_extension(moved);
  const MapVec phi = induced_isomorphism(t, moved, w, e1, e2);

  const HomReport rep = check_mcq_hom(phi, e1.mcq, e2.mcq);
  CHECK(rep.verdict.pass);
  CHECK(rep.bijective);
  for (Index i = 0; i < e1.mcq.order; ++i) {
    CHECK(e2.projection[phi[i]] == e1.projection[i]);  // pr o phi = pr
    CHECK(e1.projection[i] == i / 3);  // fibers sit over their base point
  }
}

TEST_CASE("reduce_six_tuple of the trivial tuple is trivial") {
  const SixTuple t = trivial_on(associated_mcq(z2_family_on_r3()), 3);
  const Reduction red = reduce_six_tuple(t);
  CHECK(tuples_equal(red.reduced, t));
  for (Index h : red.witness.h) CHECK(h == t.ring.one);
  for (Index e : red.witness.eta) CHECK(e == t.module.zero());
}

TEST_CASE("reduce after embed is the identity on augmented pairs") {
  const FiniteMcq m = conj_z2();
  const FiniteRing r = ring_zn(2);
  AugmentedPair aug = trivial_augmented(m, r, module_self(r));
  aug.phi2[0] = Table{{1, 1}, {1, 0}};
  const SixTuple embedded = embed_pair_as_tuple(aug);
  const Reduction red = reduce_six_tuple(embedded);
  CHECK(tuples_equal(red.reduced, embedded));
  CHECK(red.pair.f1 == aug.f1);
  CHECK(red.pair.f2 == aug.f2);
  CHECK(red.pair.phi1 == aug.phi1);
  CHECK(red.pair.phi2 == aug.phi2);
}

TEST_CASE("reduce_six_tuple is idempotent on the instances tested") {
  const SixTuple base = trivial_on(mcq_from_group(symmetric_group_3()), 3);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 5; ++i) {
    const SixTuple t = transport_six_tuple(base, random_witness(base, rng()));
    const Reduction once = reduce_six_tuple(t);
    const Reduction twice = reduce_six_tuple(once.reduced);
    CHECK(tuples_equal(once.reduced, twice.reduced));
  }
}

TEST_CASE("reduction of a transported tuple is equivalent to the embedded original") {
  // transitivity along trivial ~ transported ~ reduced
  const SixTuple t = trivial_on(conj_z2(), 3);
  EquivalenceWitness w;
  w.h = {1, 2};
  w.eta = {0, 1};
  const SixTuple moved = transport_six_tuple(t, w);
  const Reduction red = reduce_six_tuple(moved);
  CHECK(check_equivalence(moved, red.reduced, red.witness).pass);
  const EquivalenceWitness t_to_reduced = compose_witnesses(t, w, red.witness);
  CHECK(check_equivalence(t, red.reduced, t_to_reduced).pass);
}

TEST_CASE("certify_reduction on trivial and transported tuples") {
  const SixTuple trivial = trivial_on(conj_z2(), 2);
  const Certificate cert = certify_reduction(trivial);
  CHECK(cert.ok);
  for (size_t i = 0; i < cert.isomorphism.size(); ++i)
    CHECK(cert.isomorphism[i] == static_cast<Index>(i));

  // a module different from the ring
  const FiniteRing z2 = ring_zn(2);
  const FiniteMcq m = associated_mcq(z2_family_on_r3());
  SixTuple t = trivial_tuple(m, z2, module_power(z2, 2));
  t = transport_six_tuple(t, random_witness(t, 2024));
  const Certificate cert2 = certify_reduction(t);
  CHECK(cert2.ok);
  CHECK(verify_certificate(cert2).pass);
}

TEST_CASE("certify_reduction rejects unverified tuples") {
  SixTuple t = trivial_on(conj_z2(), 2);
  t.f3[0][0][0] = 0;
  CHECK_THROWS_AS(certify_reduction(t), InvalidArgument);
}

TEST_CASE("derived identities hold on transported tuples") {
  const SixTuple base = trivial_on(mcq_from_group(cyclic_group(4)), 5);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const SixTuple t = transport_six_tuple(base, random_witness(base, rng()));
    CHECK(verify_tuple_derived(t).pass);
    CHECK(verify_alt_1ii(t).pass);
    CHECK(verify_six_tuple_except(t, "(1-ii)").pass);
    CHECK(check_tuple_condition(t, "(1-ii)").pass);
  }
}

TEST_CASE("trivial tuple and trivial augmented pair build the same extension") {
  const FiniteMcq m = conj_z2();
  const FiniteRing r = ring_zn(2);
  const LeftModule mod = module_self(r);
  const Extension via_tuple = build_affine_extension(trivial_tuple(m, r, mod));
  const Extension via_pair =
      build_extension_augmented(trivial_augmented(m, r, mod));
  CHECK(mcqs_equal(via_tuple.mcq, via_pair.mcq));
  CHECK(via_tuple.projection == via_pair.projection);
}

TEST_CASE("transport and reduction over a noncommutative ring") {
  // M_2(F_2) has a nonabelian unit group, so products like
  // h(x<|y) f1(x,y) h(x)^-1 are sensitive to operand order; a swapped
  // multiplication anywhere in transport, the equivalence relations or the
  // reduction formulas would fail these checks.
  const FiniteRing m2 = mcqtest::matrix_ring_2x2_f2();
  const LeftModule mod = module_self(m2);
  int role_swaps_rejected = 0;
  for (const FiniteMcq& m :
       {conj_z2(), mcq_from_group(cyclic_group(3)),
        mcq_from_group(symmetric_group_3())}) {
    const SixTuple t = trivial_tuple(m, m2, mod);
    REQUIRE(verify_six_tuple(t).pass);
    for (uint64_t seed : {1u, 2u, 3u}) {
      const EquivalenceWitness w = random_witness(t, seed);
      const SixTuple moved = transport_six_tuple(t, w);  // post-verified inside
      CHECK(check_equivalence(t, moved, w).pass);
      CHECK(verify_alt_1ii(moved).pass);
      CHECK(verify_tuple_derived(moved).pass);
      CHECK(tuples_equal(transport_six_tuple(moved, invert_witness(t, w)), t));

      // the raw relation is not role-symmetric under the same witness when
      // the h values do not commute
      role_swaps_rejected += !check_equivalence(moved, t, w).pass;

      const Certificate cert = certify_reduction(moved);
      CHECK(cert.ok);
    }
  }
  CHECK(role_swaps_rejected > 0);
}

TEST_CASE("tuple condition report covers all 22 tags") {
  const SixTuple t = trivial_on(conj_z2(), 2);
  const CheckList report = tuple_condition_report(t);
  REQUIRE(report.size() == kTupleConditionTags.size());
  for (size_t i = 0; i < report.size(); ++i) {
    CHECK(report[i].first == std::string(kTupleConditionTags[i]));
    CHECK(report[i].second);
  }
}
