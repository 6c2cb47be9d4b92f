#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ribbonlink {

// A position on a crossing: slot 0 is the incoming under-strand, slots run
// counterclockwise. Slot i continues straight through to slot i+2.
struct SlotRef {
  int crossing = 0;
  int slot = 0;
  auto operator<=>(const SlotRef&) const = default;
};

// Corner k of a crossing is the quadrant between slots k and k+1.
struct Corner {
  int crossing = 0;
  int corner = 0;
  auto operator<=>(const Corner&) const = default;
};

struct Crossing {
  std::array<int, 4> slots{};
  bool operator==(const Crossing&) const = default;
};

struct Face {
  std::vector<Corner> corners;  // cyclic, counterclockwise around the face
  int piece = 0;
};

// A link component as a closed strand: edges in traversal order, each one
// entering the crossing recorded in `arrivals` at the same index.
struct Component {
  std::vector<int> edges;
  std::vector<SlotRef> arrivals;
};

enum class Handedness { Positive, Negative };

constexpr int wrap4(int k) { return ((k % 4) + 4) % 4; }

// Planar link diagram. Immutable once built: faces, components, pieces and
// edge orientations are computed at construction and validated
// (label multiplicity, strand orientation, Euler characteristic per piece).
//
// `free_loops` counts crossingless unknotted components. The PD grammar cannot
// express them; they only arise from diagram surgery (e.g. untwisting the last
// crossing of a kinked unknot).
class LinkDiagram {
 public:
  // Strict construction: labels must be exactly 1..2n, each twice, and every
  // slot 0 must be the incoming end of its under-strand.
  static LinkDiagram from_crossings(std::vector<Crossing> crossings, int free_loops = 0);

  // Lenient construction for surgery results: arbitrary positive labels
  // (compressed to 1..2n preserving order) and under-strands rotated by two
  // slots where their direction disagrees with the component orientation.
  static LinkDiagram from_wiring(std::vector<Crossing> crossings, int free_loops = 0);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  int free_loops() const { return free_loops_; }
  int component_count() const { return static_cast<int>(components_.size()) + free_loops_; }
  int piece_count() const { return piece_count_; }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Face>& faces() const { return faces_; }
  // Components that pass through at least one crossing, ordered by smallest label.
  const std::vector<Component>& components() const { return components_; }

  int edge_at(SlotRef ref) const { return crossings_[ref.crossing].slots[wrap4(ref.slot)]; }
  int edge_at(int crossing, int slot) const { return edge_at(SlotRef{crossing, slot}); }
  SlotRef partner(SlotRef ref) const;
  SlotRef head(int edge) const { return head_[edge]; }
  SlotRef tail(int edge) const { return tail_[edge]; }
  bool has_edge(int edge) const { return edge >= 1 && edge <= edge_count(); }

  int face_of(Corner corner) const { return face_of_corner_[4 * corner.crossing + wrap4(corner.corner)]; }
  int piece_of_crossing(int crossing) const { return piece_of_crossing_[crossing]; }
  // Smallest crossing index of each piece, in piece order.
  const std::vector<int>& piece_anchors() const { return piece_anchor_; }

  // +1 when the over-strand enters at slot 3, -1 when it enters at slot 1.
  int crossing_sign(int crossing) const;
  int writhe() const;

  // An edge alternates when exactly one of its ends is an over pass.
  bool edge_alternates(int edge) const { return (tail_[edge].slot % 2) != (head_[edge].slot % 2); }

  bool operator==(const LinkDiagram& other) const {
    return crossings_ == other.crossings_ && free_loops_ == other.free_loops_;
  }

 private:
  LinkDiagram() = default;
  void build(bool strict);

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<std::array<SlotRef, 2>> ends_;  // per label
  std::vector<SlotRef> head_;                 // per label
  std::vector<SlotRef> tail_;                 // per label
  std::vector<Component> components_;
  std::vector<Face> faces_;
  std::vector<int> face_of_corner_;
  std::vector<int> piece_of_crossing_;
  std::vector<int> piece_anchor_;
  int piece_count_ = 0;
};

// Parses `X[a,b,c,d]` tokens separated by whitespace, `#` comments to end of
// line; alternatively a JSON object `{"pd": [[a,b,c,d], ...]}`.
LinkDiagram parse_pd(std::string_view text);
std::string to_pd_string(const LinkDiagram& diagram);
std::string to_pd_json(const LinkDiagram& diagram);

const std::vector<Face>& trace_faces(const LinkDiagram& diagram);

struct ComponentsAndWrithe {
  std::vector<Component> components;
  int free_loops = 0;
  int writhe = 0;
};
ComponentsAndWrithe components_and_writhe(const LinkDiagram& diagram);

LinkDiagram mirror_diagram(const LinkDiagram& diagram);

// Switches over and under at a single crossing.
LinkDiagram switch_crossing(const LinkDiagram& diagram, int crossing);

// Inserts a kink on `edge`. The kink passes over first when the strand has
// just passed under (and vice versa), so alternating diagrams stay alternating.
LinkDiagram add_reidemeister1(const LinkDiagram& diagram, int edge, Handedness handedness);

LinkDiagram disjoint_union(const LinkDiagram& first, const LinkDiagram& second);

}  // namespace ribbonlink
