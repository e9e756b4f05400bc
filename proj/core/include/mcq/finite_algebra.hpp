#pragma once

// Table-backed finite groups, rings and left modules.
//
// Candidates hold raw tables; check_* runs the exhaustive axiom scan and, on
// success, returns the finalized value type with derived data (inverses,
// units) filled in.  The verifiers *are* the exhaustive scans: a structure is
// accepted exactly when every instance of every law holds.

#include <mcq/types.hpp>

namespace mcq {

// ---------------------------------------------------------------------------
// Groups.

struct FiniteGroup {
  Index order = 0;
  Table cayley;
  Index identity = 0;
  MapVec inverse;

  Index mul(Index a, Index b) const { return cayley[a][b]; }
  Index inv(Index a) const { return inverse[a]; }
};

// Raw input for verification. identity/inverse are optional; when absent
// they are searched for, when present they are checked against the table.
struct GroupCandidate {
  Index order = 0;
  Table cayley;
  std::optional<Index> identity;
  std::optional<MapVec> inverse;
};

struct GroupCheck {
  Verdict verdict;
  std::optional<FiniteGroup> group;
};

// Throws MalformedInput on ragged or out-of-range tables.
GroupCheck check_group(const GroupCandidate& candidate);
Verdict verify_group(const GroupCandidate& candidate);

// Z_n with addition, identity 0.  n = 0 -> InvalidArgument.
FiniteGroup cyclic_group(Index n);

bool groups_equal(const FiniteGroup& a, const FiniteGroup& b);

// ---------------------------------------------------------------------------
// Rings.  Unital, 1 != 0, possibly noncommutative.  Units (elements with a
// two-sided multiplicative inverse) are computed eagerly at construction.

struct FiniteRing {
  Index order = 0;
  Table add_table;
  Table mul_table;
  Index zero = 0;
  Index one = 1;
  MapVec negate;        // additive inverse
  MapVec unit_inverse;  // multiplicative inverse, -1 for non-units
  std::vector<Index> units;  // ascending

  Index add(Index a, Index b) const { return add_table[a][b]; }
  Index mul(Index a, Index b) const { return mul_table[a][b]; }
  Index neg(Index a) const { return negate[a]; }
  Index sub(Index a, Index b) const { return add_table[a][negate[b]]; }
  bool is_unit(Index a) const { return unit_inverse[a] >= 0; }
  Index inv(Index a) const { return unit_inverse[a]; }
};

struct RingCandidate {
  Index order = 0;
  Table add;
  Table mul;
  Index zero = 0;
  Index one = 0;
};

struct RingCheck {
  Verdict verdict;
  std::optional<FiniteRing> ring;
};

GroupCheck check_abelian_group(const GroupCandidate& candidate);

RingCheck check_ring(const RingCandidate& candidate);
Verdict verify_ring(const RingCandidate& candidate);

// Z_n with modular arithmetic.  n < 2 -> InvalidArgument (the zero ring is
// excluded by the standing assumption 1 != 0).
FiniteRing ring_zn(Index n);

bool rings_equal(const FiniteRing& a, const FiniteRing& b);

// ---------------------------------------------------------------------------
// Left modules over a FiniteRing.  The carrier is an abelian group written
// additively; the action is a |R| x |M| table.

struct LeftModule {
  FiniteGroup carrier;
  Table action;  // action[r][m]
  Index ring_order = 0;

  Index size() const { return carrier.order; }
  Index zero() const { return carrier.identity; }
  Index add(Index u, Index v) const { return carrier.cayley[u][v]; }
  Index neg(Index u) const { return carrier.inverse[u]; }
  Index sub(Index u, Index v) const { return carrier.cayley[u][carrier.inverse[v]]; }
  Index act(Index r, Index u) const { return action[r][u]; }
};

struct ModuleCandidate {
  GroupCandidate carrier;
  Table action;
};

struct ModuleCheck {
  Verdict verdict;
  std::optional<LeftModule> module;
};

ModuleCheck check_module(const ModuleCandidate& candidate, const FiniteRing& ring);
Verdict verify_module(const ModuleCandidate& candidate, const FiniteRing& ring);

// M = R acting on itself by ring multiplication.
LeftModule module_self(const FiniteRing& ring);

// Direct power R^k with componentwise action.  Elements are mixed-radix
// tuples: index = sum_j digit_j * |R|^j, digit 0 least significant.
// k = 0 -> InvalidArgument.
LeftModule module_power(const FiniteRing& ring, Index k);

bool modules_equal(const LeftModule& a, const LeftModule& b);

}  // namespace mcq
