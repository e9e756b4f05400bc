#pragma once

// Internal table-shape validation shared by the condition-system modules.

#include <mcq/mcq.hpp>
#include <mcq/types.hpp>

#include <string>

namespace mcq::detail {

inline void require_ring_table(const Table& t, Index n, Index range,
                               const char* name) {
  if (static_cast<Index>(t.size()) != n)
    throw MalformedInput(std::string(name) + ": wrong number of rows");
  for (Index r = 0; r < n; ++r) {
    if (static_cast<Index>(t[r].size()) != n)
      throw MalformedInput(std::string(name) + ": ragged row " + std::to_string(r));
    for (Index c = 0; c < n; ++c)
      if (t[r][c] < 0 || t[r][c] >= range)
        throw MalformedInput(std::string(name) + ": entry out of range");
  }
}

inline void require_comp_tables(const CompTables& t, const FiniteMcq& mcq,
                                Index range, const char* name) {
  if (static_cast<int>(t.size()) != mcq.num_components())
    throw MalformedInput(std::string(name) + ": one table per component required");
  for (int c = 0; c < mcq.num_components(); ++c) {
    const Index n = mcq.components[c].order;
    if (static_cast<Index>(t[c].size()) != n)
      throw MalformedInput(std::string(name) + ": component table has wrong size");
    for (Index a = 0; a < n; ++a) {
      if (static_cast<Index>(t[c][a].size()) != n)
        throw MalformedInput(std::string(name) + ": ragged component table");
      for (Index b = 0; b < n; ++b)
        if (t[c][a][b] < 0 || t[c][a][b] >= range)
          throw MalformedInput(std::string(name) + ": entry out of range");
    }
  }
}

}  // namespace mcq::detail
