#pragma once

// Finite multiple conjugation quandles.
//
// An MCQ is a disjoint union of groups G_0, ..., G_{k-1} with a global
// operation x <| y that restricts to conjugation inside each component and
// is compatible with every group multiplication:
//   (M1) a <| b = b^-1 a b                       for a, b in one component
//   (M2) x <| e = x,  x <| (ab) = (x <| a) <| b  for a, b in one component
//   (M3) (x <| y) <| z = (x <| z) <| (y <| z)
//   (M4) (ab) <| x = (a <| x)(b <| x), with a <| x and b <| x landing in a
//        single common component
//
// Components are concatenated into one global index space; `offsets`
// mediates local/global indices and `triangle` is the dense global table.

#include <mcq/finite_algebra.hpp>
#include <mcq/quandle.hpp>
#include <mcq/types.hpp>

namespace mcq {

struct FiniteMcq {
  std::vector<FiniteGroup> components;
  std::vector<Index> offsets;  // size components+1, offsets.back() == order
  Index order = 0;
  Table triangle;
  std::vector<int> component_of;

  int num_components() const { return static_cast<int>(components.size()); }
  int comp(Index x) const { return component_of[x]; }
  Index local(Index x) const { return x - offsets[component_of[x]]; }
  Index global(int c, Index a) const { return offsets[c] + a; }

  // Identity of component c / of the component containing x, global index.
  Index identity(int c) const { return offsets[c] + components[c].identity; }
  Index identity_of(Index x) const { return identity(component_of[x]); }

  // Group product / inverse inside one component; a and b must belong to
  // the same component.
  Index mul(Index a, Index b) const {
    const int c = component_of[a];
    return offsets[c] + components[c].cayley[a - offsets[c]][b - offsets[c]];
  }
  Index inv(Index a) const {
    const int c = component_of[a];
    return offsets[c] + components[c].inverse[a - offsets[c]];
  }

  Index tri(Index x, Index y) const { return triangle[x][y]; }

  // The underlying quandle (an MCQ is a quandle).
  FiniteQuandle as_quandle() const { return FiniteQuandle{order, triangle}; }
};

struct McqCandidate {
  std::vector<GroupCandidate> components;
  Table triangle;
};

struct McqCheck {
  Verdict verdict;
  std::optional<FiniteMcq> mcq;
};

// Verifies the component groups and then M1-M4 exhaustively.  The "for some
// common component" part of M4 is checked constructively by comparing the
// components of a <| x and b <| x ("M4-coherence").  Throws MalformedInput
// on shape errors.
McqCheck check_mcq(const McqCandidate& candidate);
Verdict verify_mcq(const McqCandidate& candidate);

McqCandidate as_candidate(const FiniteMcq& mcq);

// One-component MCQ with the conjugation operation.
FiniteMcq mcq_from_group(const FiniteGroup& group);

bool mcqs_equal(const FiniteMcq& a, const FiniteMcq& b);

// ---------------------------------------------------------------------------
// G-families of quandles: one operation table per group element, satisfying
//   x <|^g x = x,   x <|^e y = x,   x <|^{gh} y = (x <|^g y) <|^h y,
//   (x <|^g y) <|^h z = (x <|^h z) <|^{h^-1 g h} (y <|^h z).

struct GFamily {
  FiniteGroup group;
  Index carrier_size = 0;
  std::vector<Table> ops;  // ops[g], each carrier_size x carrier_size
};

Verdict verify_g_family(const GFamily& family);

// G-family of Alexander quandles on the group ring R[G]:
//   x <|^g y = x*g + y*(e - g).
// The carrier is R[G] materialized as coefficient tuples in the fixed group
// enumeration order (index = sum_j c_j * |R|^j).  Carriers larger than
// `carrier_budget` are rejected with ResourceLimit.
GFamily g_family_alexander(const FiniteRing& ring, const FiniteGroup& group,
                           Index carrier_budget = 256);

// Z_{type Q}-family of a quandle: <|^i is the i-fold iterate of <|.
GFamily z_family_from_quandle(const FiniteQuandle& q);

// Associated MCQ of a G-family: carrier G x X, one component G x {x} per
// carrier point with (g,x)(h,x) = (gh,x) and
// (g,x) <| (h,y) = (h^-1 g h, x <|^h y).
// Global index of (g,x) is x*|G| + g.
FiniteMcq associated_mcq(const GFamily& family);

// The projection (g,x) -> g onto the family group, as a map into
// mcq_from_group(family.group).
MapVec associated_mcq_projection(const GFamily& family);

// ---------------------------------------------------------------------------
// Homomorphisms and isomorphism search.

// Checks f(x <| y) = f(x) <| f(y) for all pairs and f(ab) = f(a)f(b) per
// component (which requires f to map each component into a single component
// of the target).  Flags bijectivity and the constant-fiber extension
// property for surjections.
HomReport check_mcq_hom(const MapVec& f, const FiniteMcq& src, const FiniteMcq& dst);

struct IsoOptions {
  // Backtracking nodes allowed per task before giving up.
  unsigned long long node_budget = 50'000'000;
  int tasks = 1;
};

// Explicit isomorphism search.  Returns the lexicographically least
// bijective map passing check_mcq_hom (as a flat image vector), or nullopt
// when none exists.  Prunes by component-size multiset and quandle type
// before backtracking.  Throws ResourceLimit (with node statistics) when the
// budget is exhausted.  The result is independent of the task count.
std::optional<MapVec> mcq_iso_search(const FiniteMcq& a, const FiniteMcq& b,
                                     const IsoOptions& options = {});

}  // namespace mcq
