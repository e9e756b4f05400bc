#pragma once

// File format and parsing.
//
// One self-describing JSON format for every object kind:
//   {"format_version": 1, "kind": "<kind>", ...fields}
// Tables are row-major arrays of integer indices, 0-based.  Kinds and their
// fields:
//   group     {"order", "table", "identity"}
//   ring      {"order", "add", "mul", "zero", "one"}
//   module    {"group", "action"}                (ring supplied by context)
//   quandle   {"order", "op"}
//   mcq       {"components": [group...], "triangle"}
//   gfamily   {"group", "carrier_size", "ops": {"<g>": table}}
//   pair      {"mcq", "ring", "f1", "f2"}
//   augmented pair fields + {"module", "phi1", "phi2"}
//   tuple     {"mcq", "ring", "module", "f1", "f2", "f3", "f4", "phi1", "phi2"}
//   witness   {"h", "eta"}
//   pair-list {"mcq", "ring", "pairs": [{"f1","f2"}...]}
//   map       {"map"}  (projection / isomorphism image vectors)
//   certificate  self-contained: embeds the tuple, the reduction, both
//                extensions, the isomorphism and per-check verdicts
// f1/f2/phi1 are |X| x |X| tables; f3/f4/phi2 are arrays of per-component
// square tables in local indices.
//
// Loading verifies structural kinds (groups, rings, modules, quandles,
// MCQs, g-families) and the structural parts embedded in pairs/tuples;
// the coefficient tables of pairs/tuples are shape-checked only and are
// judged by the explicit verify operations.

#include <mcq/affine.hpp>
#include <mcq/alexander.hpp>
#include <mcq/finite_algebra.hpp>
#include <mcq/mcq.hpp>
#include <mcq/quandle.hpp>
#include <mcq/types.hpp>

#include <string>
#include <variant>

namespace mcq::io {

inline constexpr int kFormatVersion = 1;

// A structural object failed its verifier while being loaded.
struct LoadVerificationError : Error {
  LoadVerificationError(std::string kind_, Verdict verdict_);
  std::string kind;
  Verdict verdict;
};

// A standalone module file, with the carrier but no ring context yet.
struct ModuleFile {
  ModuleCandidate candidate;
};

struct PairList {
  FiniteMcq mcq;
  FiniteRing ring;
  std::vector<AlexanderPair> pairs;
};

// A bare map file {"map": [...]}, as written for projections and
// isomorphisms.
struct MapFile {
  MapVec map;
};

using Object = std::variant<FiniteGroup, FiniteRing, ModuleFile, FiniteQuandle,
                            FiniteMcq, GFamily, AlexanderPair, AugmentedPair,
                            SixTuple, EquivalenceWitness, PairList, Certificate,
                            MapFile>;

// Serialized text of an object, deterministic byte-for-byte for equal
// inputs.  `save` writes it to a file.
std::string serialize(const FiniteGroup& g);
std::string serialize(const FiniteRing& r);
std::string serialize(const LeftModule& m);
std::string serialize(const FiniteQuandle& q);
std::string serialize(const FiniteMcq& m);
std::string serialize(const GFamily& f);
std::string serialize(const AlexanderPair& p);
std::string serialize(const AugmentedPair& a);
std::string serialize(const SixTuple& t);
std::string serialize(const EquivalenceWitness& w);
std::string serialize(const PairList& l);
std::string serialize(const Certificate& c);
std::string serialize(const MapVec& map);  // kind "map"

void save(const std::string& path, const std::string& text);

// Parses any known kind.  Throws MalformedInput on schema or shape errors,
// LoadVerificationError when a load-verified object fails its verifier.
Object parse_algebra_file(const std::string& path);
Object parse_algebra_text(const std::string& text);

std::string kind_of(const Object& object);

// Typed accessors; throw MalformedInput when the file holds another kind.
FiniteGroup expect_group(Object object);
FiniteRing expect_ring(Object object);
LeftModule expect_module(Object object, const FiniteRing& ring);
FiniteQuandle expect_quandle(Object object);
FiniteMcq expect_mcq(Object object);
GFamily expect_gfamily(Object object);
AlexanderPair expect_pair(Object object);
AugmentedPair expect_augmented(Object object);
SixTuple expect_tuple(Object object);
EquivalenceWitness expect_witness(Object object);
Certificate expect_certificate(Object object);

}  // namespace mcq::io
