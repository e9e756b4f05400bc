#pragma once

// Affine extensions of MCQs: the 6-tuple condition system (0-i)..(4-phi),
// the extension it generates, the equivalence relation ~_{h,eta} between
// 6-tuples, and the reduction of any 6-tuple to an augmented MCQ Alexander
// pair with explicit isomorphism witness.
//
// A 6-tuple (f1,f2,f3,f4; phi1,phi2) satisfying the 22 conditions turns the
// disjoint union of the G_lambda x M into an extension of X:
//   (x,u) <| (y,v) = (x <| y, f1(x,y)u + f2(x,y)v + phi1(x,y))
//   (a,u)(b,v)     = (ab, f3(a,b)u + f4(a,b)v + phi2(a,b)).
// The condition tags are stable public identifiers used in diagnostics and
// certificates.

#include <mcq/alexander.hpp>
#include <mcq/finite_algebra.hpp>
#include <mcq/mcq.hpp>
#include <mcq/types.hpp>

#include <array>
#include <cstdint>
#include <string_view>

namespace mcq {

struct SixTuple {
  FiniteMcq mcq;
  FiniteRing ring;
  LeftModule module;
  Table f1;       // |X| x |X| -> R
  Table f2;
  CompTables f3;  // within-component pairs -> R
  CompTables f4;
  Table phi1;       // |X| x |X| -> M
  CompTables phi2;  // within-component pairs -> M
};

// h : X -> R^x and eta : X -> M, as image vectors over the global carrier.
struct EquivalenceWitness {
  MapVec h;
  MapVec eta;
};

inline constexpr std::array<std::string_view, 22> kTupleConditionTags = {
    "(0-i)",  "(0-ii)",     "(0-iii)",     "(0-iv)", "(0-phi)",
    "(1-i)",  "(1-ii)",     "(1-phi)",     "(2-i)",  "(2-ii)",
    "(2-iii)", "(2-iv)",    "(2-phi-i)",   "(2-phi-ii)",
    "(3-i)",  "(3-ii)",     "(3-iii)",     "(3-phi)",
    "(4-i)",  "(4-ii)",     "(4-iii)",     "(4-phi)"};

SixTuple trivial_tuple(const FiniteMcq& mcq, const FiniteRing& ring,
                       const LeftModule& module);

// All 22 conditions in tag order; first failure wins, with the
// lexicographically least witness for that condition.
Verdict verify_six_tuple(const SixTuple& t);
// Same scan with one condition excluded.
Verdict verify_six_tuple_except(const SixTuple& t, std::string_view skip_tag);
// A single condition in isolation.
Verdict check_tuple_condition(const SixTuple& t, std::string_view tag);
CheckList tuple_condition_report(const SixTuple& t);

// The replacement form of (1-ii):
//   f2(a,b) = -f3(b^-1,ab) f4(b^-1,e) f3(b,b^-1) + f4(b^-1,ab) f4(a,b).
// On tuples passing verify_six_tuple both forms must pass.
Verdict verify_alt_1ii(const SixTuple& t);

// The identities every verified tuple must satisfy as consequences:
// f3(a,e) = 1, f4(e,a) = 1, f3(a,b)^-1 = f3(ab,b^-1) (both sides),
// f4(a,b)^-1 = f4(a^-1,ab) (both sides), phi1(a,a) = 0.
Verdict verify_tuple_derived(const SixTuple& t);

// ---------------------------------------------------------------------------
// Extension construction.

McqCandidate extension_candidate_affine(const SixTuple& t);

// Precondition: verify_six_tuple passes (InvalidArgument otherwise).  The
// built structure is then guaranteed to be an MCQ (InternalInconsistency if
// not).  Each component group has identity (e, -phi2(e,e)) and inverse
// (a^-1, -f3(e,a^-1)(f4(a^-1,a)u + phi2(a^-1,a) + phi2(e,e))).
Extension build_affine_extension(const SixTuple& t);

// Converse check with M = R, as for augmented pairs.
ConverseReport check_converse_six_tuple(const SixTuple& t);

// A verified augmented pair as a 6-tuple: f3 = 1, f4(a,b) = f1(a,a^-1).
// Its affine extension equals the augmented extension table-for-table.
SixTuple embed_pair_as_tuple(const AugmentedPair& aug);

// ---------------------------------------------------------------------------
// The equivalence relation ~_{h,eta}.

// The six relations between tuples t1 (f-role) and t2 (g-role):
//   h(x<|y) f1(x,y) = g1(x,y) h(x)        h(ab) f3(a,b) = g3(a,b) h(a)
//   h(x<|y) f2(x,y) = g2(x,y) h(y)        h(ab) f4(a,b) = g4(a,b) h(b)
//   h(x<|y) phi1(x,y) + eta(x<|y)         h(ab) phi2(a,b) + eta(ab)
//     = g1 eta(x) + g2 eta(y) + psi1        = g3 eta(a) + g4 eta(b) + psi2
// Both tuples must live over the same X, R, M (InvalidArgument otherwise);
// a non-unit h value raises InvalidArgument ("invalid witness").
Verdict check_equivalence(const SixTuple& t1, const SixTuple& t2,
                          const EquivalenceWitness& w);
CheckList equivalence_report(const SixTuple& t1, const SixTuple& t2,
                             const EquivalenceWitness& w);

// The unique tuple t' with t ~_{h,eta} t', obtained by solving the six
// relations for the g-role:
//   g1 = h(x<|y) f1 h(x)^-1, g2 = h(x<|y) f2 h(y)^-1,
//   psi1 = h(x<|y) phi1 + eta(x<|y) - g1 eta(x) - g2 eta(y),
// and the analogous formulas on within-component pairs.  Preserves
// verify_six_tuple.
SixTuple transport_six_tuple(const SixTuple& t, const EquivalenceWitness& w);

// Witness algebra: identity, inverse and composition, so that the relation
// is checkable as reflexive, symmetric and transitive with computed (never
// searched) witnesses.
EquivalenceWitness identity_witness(const SixTuple& t);
EquivalenceWitness invert_witness(const SixTuple& t, const EquivalenceWitness& w);
// Witness for t ~ t'' given t ~_{first} t' and t' ~_{second} t''.
EquivalenceWitness compose_witnesses(const SixTuple& t, const EquivalenceWitness& first,
                                     const EquivalenceWitness& second);

// Uniform random witness (h over units, eta over M), deterministic for a
// fixed seed across platforms.
EquivalenceWitness random_witness(const SixTuple& t, std::uint64_t seed);

// The induced isomorphism (x,u) -> (x, h(x)u + eta(x)) between the two built
// extensions.  Precondition: check_equivalence(t1, t2, w) passes.
MapVec induced_isomorphism(const SixTuple& t1, const SixTuple& t2,
                           const EquivalenceWitness& w, const Extension& e1,
                           const Extension& e2);
MapVec induced_isomorphism(const SixTuple& t1, const SixTuple& t2,
                           const EquivalenceWitness& w);

// ---------------------------------------------------------------------------
// Reduction to an augmented pair.

// The reduction of a verified 6-tuple:
//   g1(x,y) = f1(e_x, y)
//   g2(x,y) = f3(x<|y, x^-1<|y) f2(x,y) f3(e_y, y)
//   g3      = 1
//   g4(a,b) = f1(e_a, a^-1)
//   psi1(x,y) = f3(x<|y, x^-1<|y) phi1(x,y)
//   psi2(a,b) = f3(ab, b^-1 a^-1) phi2(a,b)
// with witness h(x) = f3(x, x^-1), eta = 0.  The reduced tuple satisfies the
// 22 conditions, the quadruple (g1,g2; psi1,psi2) is an augmented MCQ
// Alexander pair, and t ~_{h,0} reduced.
struct Reduction {
  SixTuple reduced;
  AugmentedPair pair;
  EquivalenceWitness witness;
};
Reduction reduce_six_tuple(const SixTuple& t);

// End-to-end certified reduction: reduces, builds both extensions,
// constructs the induced isomorphism and re-verifies everything.  `checks`
// records each named sub-verdict; `ok` is their conjunction.  A false entry
// is impossible for inputs passing verify_six_tuple and indicates an
// implementation bug; certify reports it rather than asserting.
struct Certificate {
  SixTuple tuple;
  Reduction reduction;
  Extension source;
  Extension reduced;
  MapVec isomorphism;
  CheckList checks;
  bool ok = false;
};
Certificate certify_reduction(const SixTuple& t);

// Re-runs every check of a certificate from its embedded tables, trusting
// nothing recorded in it.
Verdict verify_certificate(const Certificate& cert);

}  // namespace mcq
