#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbonlink/checkerboard.hpp"
#include "ribbonlink/diagram.hpp"

namespace ribbonlink {

// Closed walk v0 -e0- v1 -e1- ... v(k-1) -e(k-1)- v0 of odd length k.
struct OddCycle {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::string to_json() const;
};

enum class VertexClass { Red = 0, Blue = 1 };

struct Bipartition {
  bool valid = false;
  std::vector<VertexClass> classes;
  std::optional<OddCycle> certificate;

  bool is_red(int v) const { return classes[v] == VertexClass::Red; }
};

// Breadth-first 2-coloring; the smallest uncolored vertex of each connected
// piece seeds red. Any loop makes the graph non-bipartite.
Bipartition bipartition(const TaitGraph& graph);

// Re-walks a certificate against the graph: consecutive edges share the
// listed vertices, the walk closes and has odd length.
bool certifies_odd_cycle(const TaitGraph& graph, const OddCycle& cycle);

// Loop edges plus cut-edges; parallel edges are never cut-edges. Sorted.
std::vector<int> nugatory_edges(const TaitGraph& graph);

// Nugatory crossings of a diagram, found on its shading-0 Tait graph.
std::vector<int> nugatory_crossings(const LinkDiagram& diagram);

// Untwists one crossing: its two strands are spliced straight through and the
// crossing disappears. Valid surgery for nugatory crossings only.
LinkDiagram remove_nugatory_crossing(const LinkDiagram& diagram, int crossing);

struct Reduction {
  LinkDiagram diagram;
  int steps = 0;
};

// Repeatedly untwists the smallest-index nugatory crossing. Alternating input only.
Reduction reduce_nugatory(const LinkDiagram& diagram);

struct ShadingSelection {
  bool found = false;
  std::vector<int> piece_shading;
  std::optional<Coloring> coloring;
  std::optional<TaitGraph> graph;
  std::optional<Bipartition> partition;
  // When no shading of some piece works: the odd cycles for shading 0 and 1
  // of the first failing piece, in terms of that shading's Tait graph.
  std::vector<OddCycle> rejections;
  int failing_piece = -1;
};

// Tries shading 0 then 1 on every piece. Alternating input only.
ShadingSelection select_bipartite_shading(const LinkDiagram& diagram);

// Signs (+1 for shading 0, -1 for shading 1) of whole-diagram shadings whose
// Tait graph is bipartite.
std::vector<int> bipartite_shading_signs(const LinkDiagram& diagram);

struct ConnectedSum {
  LinkDiagram diagram;
  bool reversed_second = false;  // the second summand's spliced strand was reoriented
};

// Splices edge `e1` of `d1` into edge `e2` of `d2`, picking the gluing that
// keeps the result alternating. Refuses summands whose bipartite shadings
// have opposite signs; mirror one of them first.
ConnectedSum connected_sum(const LinkDiagram& d1, int e1, const LinkDiagram& d2, int e2);

}  // namespace ribbonlink
