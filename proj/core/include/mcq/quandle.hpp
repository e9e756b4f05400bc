#pragma once

// Finite quandles: a carrier 0..order-1 with op(a,b) = a <| b satisfying
//   (Q1) a <| a = a
//   (Q2) every column map S_b : a -> a <| b is a bijection
//   (Q3) (a <| b) <| c = (a <| c) <| (b <| c)

#include <mcq/finite_algebra.hpp>
#include <mcq/types.hpp>

namespace mcq {

struct FiniteQuandle {
  Index order = 0;
  Table op;

  Index tri(Index a, Index b) const { return op[a][b]; }
};

// Throws MalformedInput on non-square or out-of-range tables.
Verdict verify_quandle(const Table& op);

// Verifying constructor for raw tables; throws InvalidArgument when the
// verdict fails.
FiniteQuandle make_quandle(Table op);

// Conjugation quandle of a group: a <| b = b^-1 a b.
FiniteQuandle conj_quandle(const FiniteGroup& group);

// Dihedral quandle R_n on Z_n: a <| b = 2b - a.  n = 0 -> InvalidArgument.
FiniteQuandle dihedral_quandle(Index n);

// Alexander quandle on Z_n: a <| b = t*a + (1-t)*b.  t must be a unit mod n
// (otherwise S_b is not bijective) -> InvalidArgument.
FiniteQuandle alexander_quandle_zn(Index n, Index t);

// Least n > 0 with a <|^n b = a for all a, b; computed as the lcm of the
// permutation orders of the columns S_b.
long long quandle_type(const FiniteQuandle& q);

// Checks f(a <| b) = f(a) <| f(b) for all pairs, and reports bijectivity and
// the constant-fiber extension property for surjections.
HomReport check_quandle_hom(const MapVec& f, const FiniteQuandle& src,
                            const FiniteQuandle& dst);

}  // namespace mcq
