#include "ribbonlink/census.hpp"

#include "ribbonlink/error.hpp"
#include "ribbonlink/graph_analysis.hpp"

namespace ribbonlink {

const std::vector<CensusEntry>& census() {
  static const std::vector<CensusEntry> entries{
      {"unknot-kink", "unknot drawn with one positive kink", "X[1,1,2,2]", {1, 0, 1, true, true, 0}},
      {"hopf", "Hopf link", "X[1,3,2,4] X[3,1,4,2]", {2, 2, 2, true, true, 2}},
      {"trefoil", "trefoil knot", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", {3, 3, 1, true, true, 3}},
      {"figure8", "figure-eight knot; neither Tait graph is bipartite",
       "X[8,5,1,6] X[4,1,5,2] X[2,8,3,7] X[6,4,7,3]", {4, 4, 1, true, false, std::nullopt}},
      {"twist1", "twist knot with 1 half twist and a clasp", "X[6,3,1,4] X[4,1,5,2] X[2,5,3,6]",
       {3, 3, 1, true, true, 3}},
      {"twist3", "twist knot with 3 half twists and a clasp",
       "X[5,1,6,10] X[1,7,2,6] X[9,3,10,2] X[3,9,4,8] X[7,5,8,4]", {5, 5, 1, true, true, 5}},
      {"twist5", "twist knot with 5 half twists and a clasp",
       "X[14,11,1,12] X[10,1,11,2] X[2,9,3,10] X[8,3,9,4] X[4,7,5,8] X[12,5,13,6] X[6,13,7,14]",
       {7, 7, 1, true, true, 7}},
      {"pretzel222", "(2,2,2)-pretzel link",
       "X[12,3,9,4] X[4,9,1,10] X[6,12,7,11] X[10,8,11,7] X[2,5,3,6] X[8,1,5,2]", {6, 6, 3, true, true, 6}},
      {"granny", "granny knot, trefoil # trefoil", "", {6, 6, 1, true, true, 6}},
  };
  return entries;
}

const CensusEntry& census_lookup(std::string_view name) {
  for (const auto& entry : census())
    if (entry.name == name) return entry;
  std::string names;
  for (const auto& entry : census()) names += (names.empty() ? "" : ", ") + entry.name;
  throw Error(ErrorKind::UnknownCensusEntry, "unknown census entry '" + std::string(name) + "'; available: " + names);
}

LinkDiagram census_diagram(const CensusEntry& entry) {
  if (entry.name == "granny") {
    auto trefoil = census_diagram("trefoil");
    return connected_sum(trefoil, 1, trefoil, 1).diagram;
  }
  return parse_pd(entry.pd);
}

LinkDiagram census_diagram(std::string_view name) { return census_diagram(census_lookup(name)); }

}  // namespace ribbonlink
