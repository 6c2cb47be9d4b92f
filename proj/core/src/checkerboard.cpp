#include "ribbonlink/checkerboard.hpp"

#include <deque>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ribbonlink/error.hpp"

namespace ribbonlink {

Coloring checkerboard_color(const LinkDiagram& diagram, int which_shading) {
  return checkerboard_color(diagram, std::vector<int>(diagram.piece_count(), which_shading));
}

Coloring checkerboard_color(const LinkDiagram& diagram, const std::vector<int>& piece_shading) {
  if (static_cast<int>(piece_shading.size()) != diagram.piece_count()) {
    throw Error(ErrorKind::InvalidArgument, "one shading selector per diagram piece required");
  }
  for (int s : piece_shading) {
    if (s != 0 && s != 1) throw Error(ErrorKind::InvalidArgument, "shading selector must be 0 or 1");
  }
  const auto& faces = diagram.faces();
  const int face_count = static_cast<int>(faces.size());

  std::vector<std::vector<int>> adjacent(face_count);
  for (int c = 0; c < diagram.crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      int left = diagram.face_of(Corner{c, s});
      int right = diagram.face_of(Corner{c, s - 1});
      adjacent[left].push_back(right);
      adjacent[right].push_back(left);
    }
  }

  Coloring out;
  out.piece_shading = piece_shading;
  out.shaded.assign(face_count, 0);
  std::vector<int> color(face_count, -1);
  for (int p = 0; p < diagram.piece_count(); ++p) {
    int anchor = diagram.face_of(Corner{diagram.piece_anchors()[p], 0});
    color[anchor] = piece_shading[p] == 0 ? 1 : 0;
    std::deque<int> queue{anchor};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int g : adjacent[f]) {
        if (color[g] < 0) {
          color[g] = 1 - color[f];
          queue.push_back(g);
        } else if (color[g] == color[f]) {
          throw std::logic_error("checkerboard parity conflict between faces " + std::to_string(f) + " and " +
                                 std::to_string(g));
        }
      }
    }
  }
  out.vertex_of_face.assign(face_count, -1);
  for (int f = 0; f < face_count; ++f) {
    if (color[f] < 0) throw std::logic_error("face " + std::to_string(f) + " not reached by coloring");
    out.shaded[f] = static_cast<char>(color[f]);
    if (color[f] == 1) {
      out.vertex_of_face[f] = static_cast<int>(out.shaded_faces.size());
      out.shaded_faces.push_back(f);
    }
  }
  return out;
}

int TaitGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += (e.u == v) + (e.v == v);
  return d;
}

bool TaitGraph::uniform_sign() const {
  for (const auto& e : edges)
    if (e.sign != edges.front().sign) return false;
  return true;
}

std::string TaitGraph::to_json() const {
  nlohmann::json edge_list = nlohmann::json::array();
  for (const auto& e : edges) edge_list.push_back({e.u, e.v, e.sign});
  return nlohmann::json{{"vertices", vertex_count}, {"edges", edge_list}}.dump();
}

TaitGraph tait_graph(const LinkDiagram& diagram, const Coloring& coloring) {
  TaitGraph g;
  g.vertex_count = static_cast<int>(coloring.shaded_faces.size());
  for (int f : coloring.shaded_faces) g.vertex_piece.push_back(diagram.faces()[f].piece);
  for (int c = 0; c < diagram.crossing_count(); ++c) {
    const int k = coloring.shaded_parity(diagram, c);
    TaitEdge e;
    e.u = coloring.vertex_of_face[diagram.face_of(Corner{c, k})];
    e.v = coloring.vertex_of_face[diagram.face_of(Corner{c, k + 2})];
    e.sign = k == 0 ? +1 : -1;
    if (e.u < 0 || e.v < 0) throw std::logic_error("shaded corner maps to an unshaded face");
    g.edges.push_back(e);
  }
  return g;
}

AlternationResult is_alternating(const LinkDiagram& diagram) {
  AlternationResult result;
  const auto& comps = diagram.components();
  for (int ci = 0; ci < static_cast<int>(comps.size()) && result.alternating; ++ci) {
    for (int e : comps[ci].edges) {
      if (!diagram.edge_alternates(e)) {
        AlternationCertificate cert;
        cert.component = ci;
        cert.edge = e;
        cert.from_crossing = diagram.tail(e).crossing;
        cert.to_crossing = diagram.head(e).crossing;
        cert.both_over = diagram.head(e).slot % 2 == 1;
        result.alternating = false;
        result.failure = cert;
        break;
      }
    }
  }

  // All crossings of a piece share one checkerboard type exactly when the
  // piece alternates.
  for (int shading = 0; shading < 2; ++shading) {
    Coloring coloring = checkerboard_color(diagram, shading);
    TaitGraph g = tait_graph(diagram, coloring);
    std::vector<int> piece_sign(diagram.piece_count(), 0);
    bool uniform = true;
    for (int c = 0; c < diagram.crossing_count(); ++c) {
      int& s = piece_sign[diagram.piece_of_crossing(c)];
      if (s == 0) s = g.edges[c].sign;
      uniform = uniform && s == g.edges[c].sign;
    }
    if (uniform != result.alternating) {
      throw std::logic_error("strand alternation disagrees with Tait sign uniformity");
    }
  }
  return result;
}

}  // namespace ribbonlink
