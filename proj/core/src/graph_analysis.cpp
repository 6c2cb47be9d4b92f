#include "ribbonlink/graph_analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ribbonlink/error.hpp"

namespace ribbonlink {

std::string OddCycle::to_json() const {
  return nlohmann::json{{"vertices", vertices}, {"edges", edges}, {"length", edges.size()}}.dump();
}

namespace {

struct Incidence {
  int to;
  int edge;
};

std::vector<std::vector<Incidence>> incidence_lists(const TaitGraph& graph) {
  std::vector<std::vector<Incidence>> adj(graph.vertex_count);
  for (int i = 0; i < static_cast<int>(graph.edges.size()); ++i) {
    const auto& e = graph.edges[i];
    adj[e.u].push_back({e.v, i});
    if (e.u != e.v) adj[e.v].push_back({e.u, i});
  }
  return adj;
}

}  // namespace

Bipartition bipartition(const TaitGraph& graph) {
  const int n = graph.vertex_count;
  Bipartition out;
  out.valid = true;
  out.classes.assign(n, VertexClass::Red);

  for (int i = 0; i < static_cast<int>(graph.edges.size()); ++i) {
    if (graph.edges[i].u == graph.edges[i].v) {
      out.valid = false;
      out.certificate = OddCycle{{graph.edges[i].u}, {i}};
      break;
    }
  }

  auto adj = incidence_lists(graph);
  std::vector<int> color(n, -1), parent(n, -1), parent_edge(n, -1), depth(n, 0);
  for (int seed = 0; seed < n; ++seed) {
    if (color[seed] >= 0) continue;
    color[seed] = 0;
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (const auto& [y, edge] : adj[x]) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          parent[y] = x;
          parent_edge[y] = edge;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (color[y] == color[x] && out.valid) {
          out.valid = false;
          // Tree paths from both ends up to their lowest common ancestor.
          std::vector<int> up_x{x}, up_y{y}, edges_x, edges_y;
          int a = x, b = y;
          while (depth[a] > depth[b]) { edges_x.push_back(parent_edge[a]); a = parent[a]; up_x.push_back(a); }
          while (depth[b] > depth[a]) { edges_y.push_back(parent_edge[b]); b = parent[b]; up_y.push_back(b); }
          while (a != b) {
            edges_x.push_back(parent_edge[a]); a = parent[a]; up_x.push_back(a);
            edges_y.push_back(parent_edge[b]); b = parent[b]; up_y.push_back(b);
          }
          OddCycle cycle;
          cycle.vertices.assign(up_x.rbegin(), up_x.rend());
          cycle.vertices.insert(cycle.vertices.end(), up_y.begin(), up_y.end() - 1);
          cycle.edges.assign(edges_x.rbegin(), edges_x.rend());
          cycle.edges.push_back(edge);
          cycle.edges.insert(cycle.edges.end(), edges_y.begin(), edges_y.end());
          out.certificate = std::move(cycle);
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) out.classes[v] = color[v] == 0 ? VertexClass::Red : VertexClass::Blue;
  return out;
}

bool certifies_odd_cycle(const TaitGraph& graph, const OddCycle& cycle) {
  const std::size_t k = cycle.edges.size();
  if (k == 0 || k % 2 == 0 || cycle.vertices.size() != k) return false;
  for (std::size_t j = 0; j < k; ++j) {
    int id = cycle.edges[j];
    if (id < 0 || id >= static_cast<int>(graph.edges.size())) return false;
    const auto& e = graph.edges[id];
    int a = cycle.vertices[j], b = cycle.vertices[(j + 1) % k];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
  }
  return true;
}

std::vector<int> nugatory_edges(const TaitGraph& graph) {
  const int n = graph.vertex_count;
  auto adj = incidence_lists(graph);
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> out;
  int timer = 0;
  // Low-link over edge identities, so a parallel edge closes a cycle.
  std::function<void(int, int)> dfs = [&](int v, int via) {
    disc[v] = low[v] = timer++;
    for (const auto& [w, edge] : adj[v]) {
      if (edge == via || w == v) continue;
      if (disc[w] < 0) {
        dfs(w, edge);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.push_back(edge);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  for (int i = 0; i < static_cast<int>(graph.edges.size()); ++i)
    if (graph.edges[i].u == graph.edges[i].v) out.push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> nugatory_crossings(const LinkDiagram& diagram) {
  return nugatory_edges(tait_graph(diagram, checkerboard_color(diagram, 0)));
}

LinkDiagram remove_nugatory_crossing(const LinkDiagram& diagram, int crossing) {
  auto nugatory = nugatory_crossings(diagram);
  if (!std::binary_search(nugatory.begin(), nugatory.end(), crossing)) {
    throw Error(ErrorKind::InvalidArgument, "crossing " + std::to_string(crossing) + " is not nugatory");
  }
  const auto& slots = diagram.crossings()[crossing].slots;
  std::vector<int> parent(diagram.edge_count() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int a, int b) {
    a = root(a);
    b = root(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  join(slots[0], slots[2]);
  join(slots[1], slots[3]);

  std::vector<Crossing> out;
  std::vector<int> uses(diagram.edge_count() + 1, 0);
  for (int c = 0; c < diagram.crossing_count(); ++c) {
    if (c == crossing) continue;
    Crossing x = diagram.crossings()[c];
    for (int& label : x.slots) {
      label = root(label);
      ++uses[label];
    }
    out.push_back(x);
  }
  int free_loops = diagram.free_loops();
  std::vector<int> groups{root(slots[0]), root(slots[1])};
  if (groups[0] == groups[1]) groups.pop_back();
  for (int g : groups)
    if (uses[g] == 0) ++free_loops;
  return LinkDiagram::from_wiring(std::move(out), free_loops);
}

Reduction reduce_nugatory(const LinkDiagram& diagram) {
  if (!is_alternating(diagram).alternating) {
    throw Error(ErrorKind::NotAlternating, "nugatory reduction requires an alternating diagram");
  }
  Reduction r{diagram, 0};
  for (;;) {
    auto nugatory = nugatory_crossings(r.diagram);
    if (nugatory.empty()) break;
    r.diagram = remove_nugatory_crossing(r.diagram, nugatory.front());
    ++r.steps;
  }
  return r;
}

namespace {

struct PieceGraph {
  TaitGraph graph;
  std::vector<int> vertex_to_full;
  std::vector<int> edge_to_full;
};

PieceGraph restrict_to_piece(const LinkDiagram& diagram, const TaitGraph& full, int piece) {
  PieceGraph out;
  std::vector<int> local(full.vertex_count, -1);
  for (int v = 0; v < full.vertex_count; ++v) {
    if (full.vertex_piece[v] != piece) continue;
    local[v] = static_cast<int>(out.vertex_to_full.size());
    out.vertex_to_full.push_back(v);
    out.graph.vertex_piece.push_back(piece);
  }
  out.graph.vertex_count = static_cast<int>(out.vertex_to_full.size());
  for (int c = 0; c < diagram.crossing_count(); ++c) {
    if (diagram.piece_of_crossing(c) != piece) continue;
    TaitEdge e = full.edges[c];
    e.u = local[e.u];
    e.v = local[e.v];
    out.graph.edges.push_back(e);
    out.edge_to_full.push_back(c);
  }
  return out;
}

OddCycle to_full(const PieceGraph& piece, OddCycle cycle) {
  for (int& v : cycle.vertices) v = piece.vertex_to_full[v];
  for (int& e : cycle.edges) e = piece.edge_to_full[e];
  return cycle;
}

}  // namespace

ShadingSelection select_bipartite_shading(const LinkDiagram& diagram) {
  if (!is_alternating(diagram).alternating) {
    throw Error(ErrorKind::NotAlternating, "shading selection requires an alternating diagram");
  }
  ShadingSelection out;
  std::array<TaitGraph, 2> full{tait_graph(diagram, checkerboard_color(diagram, 0)),
                                tait_graph(diagram, checkerboard_color(diagram, 1))};
  out.piece_shading.assign(diagram.piece_count(), 0);
  for (int p = 0; p < diagram.piece_count(); ++p) {
    bool chosen = false;
    std::vector<OddCycle> failures;
    for (int s = 0; s < 2 && !chosen; ++s) {
      PieceGraph piece = restrict_to_piece(diagram, full[s], p);
      Bipartition b = bipartition(piece.graph);
      if (b.valid) {
        out.piece_shading[p] = s;
        chosen = true;
      } else {
        failures.push_back(to_full(piece, *b.certificate));
      }
    }
    if (!chosen) {
      out.found = false;
      out.rejections = std::move(failures);
      out.failing_piece = p;
      return out;
    }
  }
  out.found = true;
  out.coloring = checkerboard_color(diagram, out.piece_shading);
  out.graph = tait_graph(diagram, *out.coloring);
  out.partition = bipartition(*out.graph);
  if (!out.partition->valid) throw std::logic_error("per-piece bipartite shadings do not combine");
  return out;
}

std::vector<int> bipartite_shading_signs(const LinkDiagram& diagram) {
  std::vector<int> signs;
  for (int s = 0; s < 2; ++s) {
    if (bipartition(tait_graph(diagram, checkerboard_color(diagram, s))).valid) signs.push_back(s == 0 ? +1 : -1);
  }
  return signs;
}

ConnectedSum connected_sum(const LinkDiagram& d1, int e1, const LinkDiagram& d2, int e2) {
  if (!d1.has_edge(e1)) throw Error(ErrorKind::UnknownEdge, "first summand has no edge " + std::to_string(e1));
  if (!d2.has_edge(e2)) throw Error(ErrorKind::UnknownEdge, "second summand has no edge " + std::to_string(e2));
  if (!is_alternating(d1).alternating || !is_alternating(d2).alternating) {
    throw Error(ErrorKind::NotAlternating, "connected sum requires alternating summands");
  }
  auto signs1 = bipartite_shading_signs(d1);
  auto signs2 = bipartite_shading_signs(d2);
  if (!signs1.empty() && !signs2.empty()) {
    bool shared = std::any_of(signs1.begin(), signs1.end(), [&](int s) {
      return std::find(signs2.begin(), signs2.end(), s) != signs2.end();
    });
    if (!shared) {
      throw Error(ErrorKind::SignIncompatible,
                  "bipartite shadings of the summands carry opposite Tait signs; mirror one summand first");
    }
  }

  const int n1 = d1.crossing_count();
  const int offset = d1.edge_count();
  std::vector<Crossing> out = d1.crossings();
  for (auto c : d2.crossings()) {
    for (int& label : c.slots) label += offset;
    out.push_back(c);
  }
  auto shift = [n1](SlotRef r) { return SlotRef{r.crossing + n1, r.slot}; };
  const SlotRef t1 = d1.tail(e1), h1 = d1.head(e1);
  const SlotRef t2 = shift(d2.tail(e2)), h2 = shift(d2.head(e2));
  const int e2s = e2 + offset;
  auto set = [&](SlotRef r, int label) { out[r.crossing].slots[r.slot] = label; };

  ConnectedSum result{LinkDiagram::from_crossings({Crossing{{1, 1, 2, 2}}}), false};
  if (t1.slot % 2 != h2.slot % 2) {
    set(h1, e2s);
    set(h2, e1);
  } else {
    set(t2, e1);
    set(h1, e2s);
    result.reversed_second = true;
  }
  result.diagram = LinkDiagram::from_wiring(std::move(out), d1.free_loops() + d2.free_loops());
  if (!is_alternating(result.diagram).alternating) throw std::logic_error("connected sum lost alternation");
  return result;
}

}  // namespace ribbonlink
