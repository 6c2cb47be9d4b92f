#include "ribbonlink/threepage.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ribbonlink/error.hpp"

namespace ribbonlink {

std::array<int, 3> ThreePagePresentation::page_histogram() const {
  std::array<int, 3> h{0, 0, 0};
  for (const auto& arc : arcs)
    if (arc.page >= 1 && arc.page <= 3) ++h[arc.page - 1];
  return h;
}

int ThreePagePresentation::count_points(PointKind kind) const {
  return static_cast<int>(std::count(point_kind.begin(), point_kind.end(), kind));
}

std::string ThreePagePresentation::to_json() const {
  nlohmann::json arc_list = nlohmann::json::array();
  for (const auto& arc : arcs) arc_list.push_back({{"a", arc.a}, {"b", arc.b}, {"page", arc.page}});
  bool rotated = validate_presentation(*this).empty() && is_rotated(*this).rotated;
  return nlohmann::json{{"binding_points", m}, {"arcs", arc_list}, {"rotated", rotated}, {"mirrored", mirrored}}.dump();
}

ThreePagePresentation ThreePagePresentation::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Syntax, std::string("presentation JSON: ") + e.what(), e.byte);
  }
  try {
    ThreePagePresentation p;
    p.m = j.at("binding_points").get<int>();
    for (const auto& arc : j.at("arcs")) {
      p.arcs.push_back(Arc{arc.at("a").get<int>(), arc.at("b").get<int>(), arc.at("page").get<int>()});
    }
    p.mirrored = j.value("mirrored", false);
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("presentation JSON: ") + e.what());
  }
}

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Empty: return "empty";
    case Violation::Kind::EndpointRange: return "endpoint-range";
    case Violation::Kind::InvalidPage: return "invalid-page";
    case Violation::Kind::DegenerateArc: return "degenerate-arc";
    case Violation::Kind::Degree: return "degree";
    case Violation::Kind::SamePageAdjacent: return "same-page-adjacent";
    case Violation::Kind::Interleaving: return "interleaving";
  }
  return "unknown";
}

namespace {

bool interleave(const Arc& x, const Arc& y) {
  int lo = std::min(x.a, x.b), hi = std::max(x.a, x.b);
  if (y.a == x.a || y.a == x.b || y.b == x.a || y.b == x.b) return false;
  bool c_in = lo < y.a && y.a < hi;
  bool d_in = lo < y.b && y.b < hi;
  return c_in != d_in;
}

// Arcs incident to each binding point, assuming a clean presentation.
std::vector<std::vector<int>> incident_arcs(const ThreePagePresentation& p) {
  std::vector<std::vector<int>> at(p.m);
  for (int i = 0; i < static_cast<int>(p.arcs.size()); ++i) {
    at[p.arcs[i].a].push_back(i);
    at[p.arcs[i].b].push_back(i);
  }
  return at;
}

}  // namespace

std::vector<Violation> validate_presentation(const ThreePagePresentation& p) {
  std::vector<Violation> out;
  if (p.m <= 0 || p.arcs.empty()) {
    out.push_back({Violation::Kind::Empty, {}, {}, "presentation has no binding points or arcs"});
    return out;
  }
  bool endpoints_ok = true;
  for (int i = 0; i < static_cast<int>(p.arcs.size()); ++i) {
    const auto& arc = p.arcs[i];
    if (arc.a < 0 || arc.a >= p.m || arc.b < 0 || arc.b >= p.m) {
      out.push_back({Violation::Kind::EndpointRange, {arc.a, arc.b}, {i}, "arc endpoint outside 0..m-1"});
      endpoints_ok = false;
      continue;
    }
    if (arc.page < 1 || arc.page > 3) {
      out.push_back({Violation::Kind::InvalidPage, {}, {i}, "page must be 1, 2 or 3"});
    }
    if (arc.a == arc.b) {
      out.push_back({Violation::Kind::DegenerateArc, {arc.a}, {i}, "arc starts and ends at the same binding point"});
    }
  }
  if (!endpoints_ok) return out;

  auto at = incident_arcs(p);
  for (int v = 0; v < p.m; ++v) {
    if (at[v].size() != 2) {
      out.push_back({Violation::Kind::Degree, {v}, at[v],
                     "binding point meets " + std::to_string(at[v].size()) + " arcs instead of 2"});
    }
  }
  // Adjacent same-page arcs, reported once per pair of arcs.
  std::map<std::pair<int, int>, std::vector<int>> adjacent;
  for (int v = 0; v < p.m; ++v) {
    const auto& list = at[v];
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        if (p.arcs[list[i]].page == p.arcs[list[j]].page) {
          adjacent[{std::min(list[i], list[j]), std::max(list[i], list[j])}].push_back(v);
        }
  }
  for (const auto& [pair, points] : adjacent) {
    std::string where;
    for (int v : points) where += (where.empty() ? "" : " and ") + std::to_string(v);
    out.push_back({Violation::Kind::SamePageAdjacent, points, {pair.first, pair.second},
                   "same-page arcs adjacent at binding point" + std::string(points.size() > 1 ? "s " : " ") + where});
  }
  for (int i = 0; i < static_cast<int>(p.arcs.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(p.arcs.size()); ++j)
      if (p.arcs[i].page == p.arcs[j].page && interleave(p.arcs[i], p.arcs[j])) {
        out.push_back({Violation::Kind::Interleaving,
                       {p.arcs[i].a, p.arcs[i].b, p.arcs[j].a, p.arcs[j].b},
                       {i, j},
                       "arcs " + std::to_string(i) + " and " + std::to_string(j) + " interleave on page " +
                           std::to_string(p.arcs[i].page)});
      }
  return out;
}

RotationCertificate is_rotated(const ThreePagePresentation& p) {
  if (!validate_presentation(p).empty()) {
    throw Error(ErrorKind::InvalidPresentation, "rotation is only defined for valid presentations");
  }
  auto at = incident_arcs(p);
  RotationCertificate cert;
  cert.rotated = true;
  std::vector<char> seen(p.arcs.size(), 0);
  for (int start = 0; start < static_cast<int>(p.arcs.size()); ++start) {
    if (seen[start]) continue;
    ComponentRotation comp;
    int arc = start, point = p.arcs[start].b;
    while (!seen[arc]) {
      seen[arc] = 1;
      comp.arcs.push_back(arc);
      comp.pages.push_back(p.arcs[arc].page);
      arc = at[point][0] == arc ? at[point][1] : at[point][0];
      point = p.arcs[arc].a == point ? p.arcs[arc].b : p.arcs[arc].a;
    }
    const std::size_t k = comp.pages.size();
    int step = ((comp.pages[k > 1 ? 1 : 0] - comp.pages[0]) % 3 + 3) % 3;
    bool constant = step != 0;
    for (std::size_t i = 0; i < k && constant; ++i) {
      int d = ((comp.pages[(i + 1) % k] - comp.pages[i]) % 3 + 3) % 3;
      constant = d == step;
    }
    comp.rotated = constant;
    comp.direction = constant ? (step == 1 ? +1 : -1) : 0;
    cert.rotated = cert.rotated && comp.rotated;
    cert.components.push_back(std::move(comp));
  }
  return cert;
}

namespace {

struct Item {
  bool is_point = true;
  int key = 0;  // point key, or band id
  int end = 0;  // band end: 0 at the hub crossing, 1 at the other crossing
};

}  // namespace

ThreePagePresentation build_presentation(const LinkDiagram& d, const Coloring& coloring, const Bipartition& partition) {
  const int n = d.crossing_count();
  if (d.free_loops() > 0) {
    throw Error(ErrorKind::HypothesisViolation, "crossingless components have no three-page presentation here");
  }
  if (n == 0) throw Error(ErrorKind::HypothesisViolation, "diagram has no crossings");
  if (!is_alternating(d).alternating) throw Error(ErrorKind::NotAlternating, "diagram is not alternating");
  if (!partition.valid || partition.classes.size() != coloring.shaded_faces.size()) {
    throw Error(ErrorKind::HypothesisViolation, "bipartition is not valid for this shading");
  }

  // Red corner of every crossing; the opposite shaded corner is blue.
  std::vector<int> red_corner(n);
  for (int c = 0; c < n; ++c) {
    int k = coloring.shaded_parity(d, c);
    int v1 = coloring.vertex_of_face[d.face_of(Corner{c, k})];
    int v2 = coloring.vertex_of_face[d.face_of(Corner{c, k + 2})];
    if (v1 < 0 || v2 < 0 || partition.is_red(v1) == partition.is_red(v2)) {
      throw Error(ErrorKind::HypothesisViolation,
                  "crossing " + std::to_string(c) + " does not join a red and a blue region");
    }
    red_corner[c] = partition.is_red(v1) ? k : wrap4(k + 2);
  }
  auto transversal_key = [](int c, int slot) { return 4 * c + wrap4(slot); };
  auto tangency_key = [n](int edge) { return 4 * n + edge; };
  auto blue_slot = [&](int c, int slot) { return wrap4(slot - red_corner[c]) >= 2; };
  auto red_face = [&](int c) { return d.face_of(Corner{c, red_corner[c]}); };

  // Bands: in every blue face, its first crossing is joined to each later
  // crossing whose red disk is not yet connected to it.
  const auto& faces = d.faces();
  std::vector<int> group(faces.size());
  std::iota(group.begin(), group.end(), 0);
  auto root = [&](int x) {
    while (group[x] != x) x = group[x] = group[group[x]];
    return x;
  };
  std::vector<std::vector<int>> gap_bands(n);
  std::vector<std::array<int, 2>> band_crossing;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const auto& corners = faces[f].corners;
    if (!coloring.shaded[f] || partition.is_red(coloring.vertex_of_face[f])) continue;
    const int hub = corners.front().crossing;
    for (std::size_t i = 1; i < corners.size(); ++i) {
      const int c = corners[i].crossing;
      int a = root(red_face(hub)), b = root(red_face(c));
      if (a == b) continue;
      group[b] = a;
      int band = static_cast<int>(band_crossing.size());
      band_crossing.push_back({hub, c});
      gap_bands[hub].push_back(band);
      gap_bands[c].push_back(band);
    }
  }

  // Boundary of each red disk: per corner, the two blue-side strand ends with
  // the gap between them, then the tangency on the edge leading on.
  std::vector<std::vector<Item>> disk(faces.size());
  std::vector<std::array<std::pair<int, int>, 2>> band_pos(band_crossing.size());
  std::vector<std::pair<int, int>> start_of_crossing(n);
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    if (!coloring.shaded[f] || !partition.is_red(coloring.vertex_of_face[f])) continue;
    auto& items = disk[f];
    for (const auto& corner : faces[f].corners) {
      const int c = corner.crossing, k = corner.corner;
      start_of_crossing[c] = {f, static_cast<int>(items.size())};
      items.push_back({true, transversal_key(c, k + 2), 0});
      for (int band : gap_bands[c]) {
        int end = band_crossing[band][0] == c ? 0 : 1;
        band_pos[band][end] = {f, static_cast<int>(items.size())};
        items.push_back({false, band, end});
      }
      items.push_back({true, transversal_key(c, k + 3), 0});
      items.push_back({true, tangency_key(d.edge_at(c, k)), 0});
    }
  }

  ThreePagePresentation out;
  std::map<int, int> index_of_key;
  for (int anchor : d.piece_anchors()) {
    const auto start = start_of_crossing[anchor];
    auto pos = start;
    const std::size_t guard = 8 * static_cast<std::size_t>(n) + 8;
    std::size_t steps = 0;
    do {
      const Item& item = disk[pos.first][pos.second];
      if (item.is_point) {
        if (!index_of_key.emplace(item.key, out.m).second) throw std::logic_error("binding point emitted twice");
        out.point_kind.push_back(item.key >= 4 * n ? PointKind::Tangency : PointKind::Transversal);
        ++out.m;
      } else {
        pos = band_pos[item.key][1 - item.end];
      }
      pos.second = (pos.second + 1) % static_cast<int>(disk[pos.first].size());
      if (++steps > guard) throw std::logic_error("disk boundary walk does not close");
    } while (pos != start);
  }
  if (out.m != 3 * n) throw std::logic_error("boundary walk visited " + std::to_string(out.m) + " points, expected 3n");

  auto point = [&](int key) { return index_of_key.at(key); };
  for (const auto& comp : d.components()) {
    for (int e : comp.edges) {
      const SlotRef h = d.head(e);
      const int c = h.crossing, s_in = h.slot;
      const bool blue_in = blue_slot(c, s_in);
      if (blue_in) {
        const SlotRef t = d.tail(e);
        out.arcs.push_back({point(transversal_key(t.crossing, t.slot)), point(transversal_key(c, s_in)), 3});
        out.source_crossing.push_back(-1);
        out.source_edge.push_back(e);
      }
      const int s_out = wrap4(s_in + 2);
      const int entry = blue_in ? transversal_key(c, s_in) : tangency_key(e);
      const int exit = blue_slot(c, s_out) ? transversal_key(c, s_out) : tangency_key(d.edge_at(c, s_out));
      out.arcs.push_back({point(entry), point(exit), s_in % 2 == 0 ? 1 : 2});
      out.source_crossing.push_back(c);
      out.source_edge.push_back(-1);
    }
  }
  return out;
}

namespace {

struct Point2 {
  long long x, y;
};

__extension__ typedef __int128 Wide;

Wide cross(Point2 u, Point2 v) { return static_cast<Wide>(u.x) * v.y - static_cast<Wide>(u.y) * v.x; }

// Position along a chord as an exact fraction num/den, den > 0.
struct Parameter {
  Wide num, den;
  bool operator<(const Parameter& o) const { return num * o.den < o.num * den; }
};

}  // namespace

LinkDiagram reconstruct_diagram(const ThreePagePresentation& p) {
  auto violations = validate_presentation(p);
  if (!violations.empty()) {
    throw Error(ErrorKind::InvalidPresentation, "cannot reconstruct: " + violations.front().message);
  }
  const int arc_count = static_cast<int>(p.arcs.size());
  std::vector<Point2> pos(p.m);
  for (int k = 0; k < p.m; ++k) pos[k] = {k, static_cast<long long>(k) * k};

  // Orientation: the stored arc directions when they form directed cycles.
  std::vector<int> out_deg(p.m, 0), in_deg(p.m, 0);
  for (const auto& arc : p.arcs) {
    ++out_deg[arc.a];
    ++in_deg[arc.b];
  }
  const bool coherent = std::all_of(out_deg.begin(), out_deg.end(), [](int x) { return x == 1; }) &&
                        std::all_of(in_deg.begin(), in_deg.end(), [](int x) { return x == 1; });
  auto at = incident_arcs(p);
  std::vector<std::vector<int>> cycles;
  std::vector<std::array<int, 2>> ends(arc_count);  // oriented (from, to)
  std::vector<char> seen(arc_count, 0);
  for (int start = 0; start < arc_count; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int arc = start;
    // Incoherent input is walked from the first endpoint of its smallest arc.
    int from = coherent ? p.arcs[start].a : std::min(p.arcs[start].a, p.arcs[start].b);
    while (!seen[arc]) {
      seen[arc] = 1;
      int to = p.arcs[arc].a == from ? p.arcs[arc].b : p.arcs[arc].a;
      ends[arc] = {from, to};
      cycle.push_back(arc);
      arc = at[to][0] == arc ? at[to][1] : at[to][0];
      from = to;
    }
    cycles.push_back(std::move(cycle));
  }

  // Crossings: every interleaving pair of a page-1 and a page-2 arc.
  struct Event {
    Parameter t;
    int crossing;
    int role;  // 0 under, 1 over
  };
  std::vector<std::vector<Event>> events(arc_count);
  std::vector<std::array<int, 2>> crossing_arcs;
  for (int i = 0; i < arc_count; ++i) {
    if (p.arcs[i].page != 1) continue;
    for (int j = 0; j < arc_count; ++j) {
      if (p.arcs[j].page != 2 || !interleave(p.arcs[i], p.arcs[j])) continue;
      const int c = static_cast<int>(crossing_arcs.size());
      crossing_arcs.push_back({i, j});
      for (int role = 0; role < 2; ++role) {
        const int self = role == 0 ? i : j, other = role == 0 ? j : i;
        Point2 p0 = pos[ends[self][0]], p1 = pos[ends[self][1]];
        Point2 q0 = pos[ends[other][0]], q1 = pos[ends[other][1]];
        Point2 dp{p1.x - p0.x, p1.y - p0.y}, dq{q1.x - q0.x, q1.y - q0.y};
        Parameter t{cross(Point2{q0.x - p0.x, q0.y - p0.y}, dq), cross(dp, dq)};
        if (t.den < 0) {
          t.num = -t.num;
          t.den = -t.den;
        }
        events[self].push_back({t, c, role});
      }
    }
  }
  const int n = static_cast<int>(crossing_arcs.size());
  if (n == 0) throw Error(ErrorKind::TrivialComponent, "presentation draws a crossingless diagram");
  for (auto& list : events) std::sort(list.begin(), list.end(), [](const Event& x, const Event& y) { return x.t < y.t; });

  std::vector<std::array<int, 2>> in_label(n), out_label(n);
  int free_loops = 0, next_label = 1;
  for (const auto& cycle : cycles) {
    std::vector<const Event*> along;
    for (int arc : cycle)
      for (const auto& ev : events[arc]) along.push_back(&ev);
    const int k = static_cast<int>(along.size());
    if (k == 0) {
      ++free_loops;
      continue;
    }
    for (int j = 0; j < k; ++j) {
      in_label[along[j]->crossing][along[j]->role] = next_label + (j + k - 1) % k;
      out_label[along[j]->crossing][along[j]->role] = next_label + j;
    }
    next_label += k;
  }

  std::vector<Crossing> crossings(n);
  for (int c = 0; c < n; ++c) {
    const auto [under, over] = crossing_arcs[c];
    Point2 u{pos[ends[under][1]].x - pos[ends[under][0]].x, pos[ends[under][1]].y - pos[ends[under][0]].y};
    Point2 o{pos[ends[over][1]].x - pos[ends[over][0]].x, pos[ends[over][1]].y - pos[ends[over][0]].y};
    if (cross(u, o) > 0) {
      crossings[c].slots = {in_label[c][0], in_label[c][1], out_label[c][0], out_label[c][1]};
    } else {
      crossings[c].slots = {in_label[c][0], out_label[c][1], out_label[c][0], in_label[c][1]};
    }
  }
  return LinkDiagram::from_crossings(std::move(crossings), free_loops);
}

}  // namespace ribbonlink
