#pragma once

// Shared vocabulary for the whole toolkit.
//
// Every algebraic object is table-backed: elements are dense integer
// indices 0..order-1 and every map is a total table of indices.  All
// values are immutable after construction and all operations are pure,
// so objects can be shared freely between threads.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcq {

using Index = int;

// Rectangular table of element indices, row-major (table[row][col]).
using Table = std::vector<std::vector<Index>>;

// One square table per MCQ component, indexed by local element indices.
// Used for the maps defined on within-component pairs (f3, f4, phi2).
using CompTables = std::vector<Table>;

// A total map X -> Y between carriers, as an image vector.
using MapVec = std::vector<Index>;

// ---------------------------------------------------------------------------
// Errors.  These are hard failures of the calling contract, distinct from a
// failed axiom check (which is a Verdict, not an exception).

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A constructor argument outside its domain (n = 0, non-unit t, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

// A table that is ragged, out of range, or otherwise not well-formed.
struct MalformedInput : Error {
  using Error::Error;
};

// A search or enumeration whose space exceeds the given budget.
struct ResourceLimit : Error {
  using Error::Error;
};

// A consequence guaranteed by a proved statement failed to hold.  Always an
// implementation bug, never a property of the input.
struct InternalInconsistency : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Verdicts.

// Outcome of an axiom or condition scan.  On failure, `condition` holds the
// stable tag of the first violated law and `witness` the element indices at
// which it fails, in scan order (the lexicographically least witness).
struct Verdict {
  bool pass = true;
  std::string condition;
  std::vector<Index> witness;
  std::string detail;

  explicit operator bool() const { return pass; }

  static Verdict ok() { return {}; }
  static Verdict fail(std::string cond, std::vector<Index> wit, std::string det = "") {
    Verdict v;
    v.pass = false;
    v.condition = std::move(cond);
    v.witness = std::move(wit);
    v.detail = std::move(det);
    return v;
  }
};

std::string to_string(const Verdict& v);

// Result of a homomorphism check: the equation verdict plus the structural
// flags the callers care about (extension condition = surjective with
// constant fiber cardinality).
struct HomReport {
  Verdict verdict;
  bool bijective = false;
  bool surjective = false;
  bool constant_fibers = false;
  Index fiber_size = 0;
};

// Result of a converse check: the structure verdict (is the built candidate
// an MCQ?) against the condition-system verdict.  The two must agree when
// M = R.
struct ConverseReport {
  Verdict conditions;
  Verdict structure;
  bool agree = false;
};

// Named sub-checks of a composite verification, in evaluation order.
using CheckList = std::vector<std::pair<std::string, bool>>;

}  // namespace mcq
