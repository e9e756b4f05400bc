#pragma once

// MCQ Alexander pairs, twisted 2-cocycles and the linear/affine extension
// they generate.
//
// A pair (f1, f2) of maps X x X -> R is an MCQ Alexander pair when the nine
// conditions (p-1)..(p-9) hold; a pair (phi1, phi2) with phi1 : X x X -> M
// and phi2 on within-component pairs is an (f1,f2)-twisted 2-cocycle when
// the five conditions (c-1)..(c-5) hold.  The quadruple (f1,f2; phi1,phi2)
// is an augmented MCQ Alexander pair, and it turns the disjoint union of the
// G_lambda x M into an extension of X:
//   (x,u) <| (y,v) = (x <| y, f1(x,y)u + f2(x,y)v + phi1(x,y))
//   (a,u)(b,v)     = (ab, u + f1(a,a^-1)v + phi2(a,b)).
// When M = R the converse holds: the built structure is an MCQ exactly when
// the quadruple is an augmented pair.

#include <mcq/finite_algebra.hpp>
#include <mcq/mcq.hpp>
#include <mcq/types.hpp>

namespace mcq {

struct AlexanderPair {
  FiniteMcq mcq;
  FiniteRing ring;
  Table f1;  // |X| x |X| of ring indices
  Table f2;
};

struct AugmentedPair {
  FiniteMcq mcq;
  FiniteRing ring;
  LeftModule module;
  Table f1;
  Table f2;
  Table phi1;       // |X| x |X| of module indices
  CompTables phi2;  // per-component square tables of module indices
};

AlexanderPair trivial_pair(const FiniteMcq& mcq, const FiniteRing& ring);
AugmentedPair trivial_augmented(const FiniteMcq& mcq, const FiniteRing& ring,
                                const LeftModule& module);
AugmentedPair with_cocycle(const AlexanderPair& pair, const LeftModule& module,
                           Table phi1, CompTables phi2);
AlexanderPair pair_of(const AugmentedPair& aug);

// The nine pair conditions, in order; first failure wins.
Verdict verify_pair(const AlexanderPair& pair);
CheckList pair_condition_report(const AlexanderPair& pair);

// The derived properties every verified pair must satisfy (f1 values are
// units with f1(x,y)^-1 = f1(x <| y, y^-1); f2(e,x) = 0; the two product
// identities).  Precondition: verify_pair passed.  A violation after a
// passing verify_pair is impossible by the underlying lemma, so it throws
// InternalInconsistency instead of returning a failing verdict.
Verdict verify_pair_properties(const AlexanderPair& pair);

// The five cocycle conditions over the (already verified) underlying pair,
// followed by the lemma consequences phi1(x,x) = 0 and phi2(e,a) = phi2(e,b)
// (which follow from the five; their failure after a pass is an
// InternalInconsistency).
Verdict verify_cocycle(const AugmentedPair& aug);
CheckList cocycle_condition_report(const AugmentedPair& aug);

// verify_pair and verify_cocycle combined.
Verdict pair_is_augmented_alexander(const AugmentedPair& aug);

// ---------------------------------------------------------------------------
// Extensions.

struct Extension {
  FiniteMcq mcq;
  MapVec projection;  // extension element -> base element
};

// Raw extension tables from the two formulas, with no precondition; used by
// the converse checks.  Extension element (a,u) of component c has global
// index offsets[c]*|M| + local(a)*|M| + u.
McqCandidate extension_candidate_augmented(const AugmentedPair& aug);
MapVec extension_projection(const FiniteMcq& base, Index module_size);

// Builds the verified extension.  Precondition: pair_is_augmented_alexander
// passes (InvalidArgument otherwise).  The construction is guaranteed to
// produce an MCQ, so a failed verify_mcq afterwards raises
// InternalInconsistency.
Extension build_extension_augmented(const AugmentedPair& aug);

// Converse check with M = R (InvalidArgument when the module is not the ring
// acting on itself): builds the candidate unconditionally and compares the
// condition verdict with the structure verdict.
ConverseReport check_converse_augmented(const AugmentedPair& aug);

// Which closed form of the group inverse matches the Cayley-table inverse of
// every extension element:
//   (a,u)^-1 = (a^-1, -f1(a,a)u - phi2(a^-1,a) - phi2(e,e))
// and the variant with the phi2 arguments swapped.  The two coincide exactly
// when phi2 is symmetric on inverse pairs; only the first holds in general.
struct InverseFormulaReport {
  bool standard_form = false;  // phi2(a^-1, a)
  bool swapped_form = false;   // phi2(a, a^-1)
};
InverseFormulaReport inverse_formula_report(const AugmentedPair& aug,
                                            const Extension& ext);

// ---------------------------------------------------------------------------
// Enumeration.

struct EnumOptions {
  unsigned long long budget = 100'000'000;  // candidates scanned
  int tasks = 1;
};

// The complete, duplicate-free list of pairs passing verify_pair, sorted
// lexicographically by flattened (f1, f2).  The candidate space has size
// |R|^(2|X|^2); if it exceeds the budget, ResourceLimit.  The result is
// independent of the task count (tasks partition the space by the leading
// f1 entry).
std::vector<AlexanderPair> enumerate_pairs(const FiniteMcq& mcq, const FiniteRing& ring,
                                           const EnumOptions& options = {});

}  // namespace mcq
