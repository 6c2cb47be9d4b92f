#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbonlink/diagram.hpp"

namespace ribbonlink {

// Per piece of the diagram, selector 0 shades the face holding corner 0 of
// the piece's smallest crossing; selector 1 shades the complementary faces.
struct Coloring {
  std::vector<int> piece_shading;
  std::vector<char> shaded;          // per face
  std::vector<int> shaded_faces;     // Tait vertex -> face
  std::vector<int> vertex_of_face;   // face -> Tait vertex, -1 when unshaded

  int which_shading() const { return piece_shading.empty() ? 0 : piece_shading.front(); }
  bool is_shaded(const LinkDiagram& d, Corner corner) const { return shaded[d.face_of(corner)] != 0; }
  // 0 when corners 0 and 2 of the crossing are shaded, 1 when corners 1 and 3 are.
  int shaded_parity(const LinkDiagram& d, int crossing) const { return is_shaded(d, Corner{crossing, 0}) ? 0 : 1; }
};

Coloring checkerboard_color(const LinkDiagram& diagram, int which_shading);
Coloring checkerboard_color(const LinkDiagram& diagram, const std::vector<int>& piece_shading);

struct TaitEdge {
  int u = 0;
  int v = 0;
  int sign = +1;
  bool operator==(const TaitEdge&) const = default;
};

// Edge i is crossing i. Vertices index `Coloring::shaded_faces`.
struct TaitGraph {
  int vertex_count = 0;
  std::vector<TaitEdge> edges;
  std::vector<int> vertex_piece;

  int degree(int v) const;
  bool uniform_sign() const;
  std::string to_json() const;
};

TaitGraph tait_graph(const LinkDiagram& diagram, const Coloring& coloring);

struct AlternationCertificate {
  int component = 0;
  int edge = 0;
  int from_crossing = 0;  // both passes at the ends of `edge` have the same type
  int to_crossing = 0;
  bool both_over = false;
};

struct AlternationResult {
  bool alternating = true;
  std::optional<AlternationCertificate> failure;
};

// Over/under alternation along every strand, cross-checked against uniform
// Tait signs on each piece for both shadings.
AlternationResult is_alternating(const LinkDiagram& diagram);

}  // namespace ribbonlink
