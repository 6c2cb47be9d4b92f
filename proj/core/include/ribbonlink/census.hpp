#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbonlink/diagram.hpp"

namespace ribbonlink {

struct CensusExpectation {
  int crossings = 0;          // of the stored diagram
  int reduced_crossings = 0;  // after nugatory reduction
  int components = 0;
  bool alternating = true;
  bool bipartite = true;                // some shading of the reduced diagram is bipartite
  std::optional<int> bound_multiple;    // ribbonlength bound in units of sqrt(3)
};

struct CensusEntry {
  std::string name;
  std::string description;
  std::string pd;  // empty for entries built by connected sum
  CensusExpectation expected;
};

const std::vector<CensusEntry>& census();
// Throws UnknownCensusEntry, listing the available names.
const CensusEntry& census_lookup(std::string_view name);
LinkDiagram census_diagram(const CensusEntry& entry);
LinkDiagram census_diagram(std::string_view name);

}  // namespace ribbonlink
