#pragma once

#include <array>
#include <string>
#include <vector>

#include "ribbonlink/diagram.hpp"
#include "ribbonlink/threepage.hpp"

namespace ribbonlink {

// One equilateral triangle per binding point, stacked over a common
// footprint centered on the binding axis; layer = binding index.
struct Triangle {
  int binding_point = 0;
  int component = 0;
  int position = 0;  // index along the component's strip
  bool operator==(const Triangle&) const = default;
};

// The ribbon folds across the triangle side named by the arc's page.
// nesting_depth counts same-page arcs enclosing this one in the order
// 0..m-1; layer_rank 0 is an innermost fold, closest to the stack.
struct Fold {
  int arc = 0;
  int a = 0;
  int b = 0;
  int page = 1;
  int nesting_depth = 0;
  int layer_rank = 0;
  bool operator==(const Fold&) const = default;
};

struct RibbonComponent {
  std::vector<int> points;  // binding points in strip order
  std::vector<int> arcs;    // arcs[j] joins points[j] and points[j+1] (cyclically)
  bool one_sided = false;
  int triangle_count() const { return static_cast<int>(points.size()); }
  bool operator==(const RibbonComponent&) const = default;
};

struct RibbonRealization {
  double width = 1.0;
  int m = 0;
  std::vector<Triangle> triangles;
  std::vector<Fold> folds;
  std::vector<RibbonComponent> components;

  double triangle_side() const;
  double footprint_circumradius() const;
  // Each triangle carries w/sqrt(3) of core, so length/width = m/sqrt(3).
  double core_length() const;
  double length_over_width() const;
  bool operator==(const RibbonRealization&) const = default;
};

// Refuses invalid or non-rotated presentations and non-positive widths.
RibbonRealization realize_ribbon(const ThreePagePresentation& p, double width = 1.0);

// Per component: true when the ribbon closes up as a Moebius band.
std::vector<bool> sidedness(const RibbonRealization& r);

struct Vec2 {
  double x = 0;
  double y = 0;
};

// A component cut open along one fold and laid flat: triangle j points up
// for even j (base on y = 0) and down for odd j. fold_lines[j] is the fold
// after triangle j, the last one being the closing fold.
struct FlatStrip {
  std::vector<std::array<Vec2, 3>> triangles;
  std::vector<std::array<Vec2, 2>> fold_lines;
  std::vector<int> fold_pages;
  std::vector<Vec2> core;  // centerline polyline from the opening to the closing fold
  bool closing_flips = false;

  double core_length() const;
};

FlatStrip unfold_component(const RibbonRealization& r, int component);

std::string export_svg(const RibbonRealization& r);
std::string export_json(const RibbonRealization& r);
RibbonRealization parse_realization_json(const std::string& text);

// Upper bound sqrt(3)*n from the reduced alternating diagram, beside the
// comparison bound 2.5n + 1.
struct BoundReport {
  int n = 0;
  int multiple = 0;  // bound = multiple * sqrt(3)
  double bound = 0;
  double kusner_bound = 1;
  bool improves = true;
  bool mirrored = false;
  std::string hypothesis = "satisfied";  // "satisfied", "degenerate" or "violated"

  std::string exact() const;  // e.g. "3*sqrt(3)"
  std::string to_json() const;
};

BoundReport bound_report(const LinkDiagram& reduced, bool mirrored);

}  // namespace ribbonlink
