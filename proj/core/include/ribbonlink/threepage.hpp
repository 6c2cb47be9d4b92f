#pragma once

#include <array>
#include <string>
#include <vector>

#include "ribbonlink/checkerboard.hpp"
#include "ribbonlink/diagram.hpp"
#include "ribbonlink/graph_analysis.hpp"

namespace ribbonlink {

// Pages 1 and 2 are chords of the inner disk bounded by the binding circle
// (page 1 carries under passes, page 2 over passes); page 3 arcs run outside.
struct Arc {
  int a = 0;
  int b = 0;
  int page = 1;
  bool operator==(const Arc&) const = default;
};

enum class PointKind { Unknown, Tangency, Transversal };

// Binding points are 0..m-1 in cyclic order. Arcs are stored oriented along
// the link when the presentation comes from a diagram.
struct ThreePagePresentation {
  int m = 0;
  std::vector<Arc> arcs;
  std::vector<int> source_crossing;  // per arc, -1 for outside arcs
  std::vector<int> source_edge;      // per arc, -1 for inside arcs
  std::vector<PointKind> point_kind;  // per binding point, empty when unknown
  bool mirrored = false;

  std::array<int, 3> page_histogram() const;
  int count_points(PointKind kind) const;

  // {"binding_points": m, "arcs": [{"a","b","page"}], "rotated": bool, "mirrored": bool}
  std::string to_json() const;
  static ThreePagePresentation parse_json(const std::string& text);
};

struct Violation {
  enum class Kind { Empty, EndpointRange, InvalidPage, DegenerateArc, Degree, SamePageAdjacent, Interleaving };
  Kind kind;
  std::vector<int> points;
  std::vector<int> arcs;
  std::string message;
};

const char* to_string(Violation::Kind kind);

// Empty exactly when every binding point meets two arcs on different pages
// and no two arcs of one page interleave. Closing into cycles follows.
std::vector<Violation> validate_presentation(const ThreePagePresentation& p);

struct ComponentRotation {
  std::vector<int> arcs;   // cycle order
  std::vector<int> pages;  // page of each arc in cycle order
  bool rotated = false;
  int direction = 0;  // +1 for 1->2->3, -1 for 3->2->1, 0 when not rotated
};

struct RotationCertificate {
  std::vector<ComponentRotation> components;
  bool rotated = false;
};

// Throws InvalidPresentation unless validate_presentation is clean.
RotationCertificate is_rotated(const ThreePagePresentation& p);

// Rotated three-page presentation with 3n binding points and 3n arcs for an
// alternating diagram without free loops, given a shading and a valid
// bipartition of its Tait graph. The bipartition's red class supplies the
// disks that are merged along the blue regions.
ThreePagePresentation build_presentation(const LinkDiagram& diagram, const Coloring& coloring,
                                         const Bipartition& partition);

// Draws the presentation with binding points in convex position and the
// page-1 arcs under the page-2 arcs. Throws TrivialComponent when no
// crossing results.
LinkDiagram reconstruct_diagram(const ThreePagePresentation& p);

}  // namespace ribbonlink
