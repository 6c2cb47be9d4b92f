#include "ribbonlink/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ribbonlink/error.hpp"

namespace ribbonlink {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::LabelMultiplicity: return "label-multiplicity";
    case ErrorKind::Orientation: return "orientation";
    case ErrorKind::NonPlanar: return "non-planar";
    case ErrorKind::UnknownEdge: return "unknown-edge";
    case ErrorKind::NotAlternating: return "not-alternating";
    case ErrorKind::SignIncompatible: return "sign-incompatible";
    case ErrorKind::HypothesisViolation: return "hypothesis-violation";
    case ErrorKind::InvalidPresentation: return "invalid-presentation";
    case ErrorKind::NotRotated: return "not-rotated";
    case ErrorKind::TrivialComponent: return "trivial-component";
    case ErrorKind::LimitExceeded: return "limit-exceeded";
    case ErrorKind::UnknownCensusEntry: return "unknown-census-entry";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void compress_labels(std::vector<Crossing>& crossings) {
  std::vector<int> labels;
  for (const auto& c : crossings) {
    for (int label : c.slots) {
      if (label <= 0) {
        throw Error(ErrorKind::LabelMultiplicity, "edge labels must be positive, got " + std::to_string(label));
      }
      labels.push_back(label);
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (auto& c : crossings) {
    for (int& label : c.slots) {
      label = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin()) + 1;
    }
  }
}

void rotate_by(Crossing& c, int shift) {
  Crossing old = c;
  for (int j = 0; j < 4; ++j) c.slots[j] = old.slots[wrap4(j + shift)];
}

}  // namespace

LinkDiagram LinkDiagram::from_crossings(std::vector<Crossing> crossings, int free_loops) {
  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.free_loops_ = free_loops;
  d.build(true);
  return d;
}

LinkDiagram LinkDiagram::from_wiring(std::vector<Crossing> crossings, int free_loops) {
  compress_labels(crossings);
  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.free_loops_ = free_loops;
  d.build(false);
  return d;
}

SlotRef LinkDiagram::partner(SlotRef ref) const {
  ref.slot = wrap4(ref.slot);
  const auto& e = ends_[edge_at(ref)];
  return e[0] == ref ? e[1] : e[0];
}

int LinkDiagram::crossing_sign(int crossing) const {
  SlotRef s3{crossing, 3};
  return head_[edge_at(s3)] == s3 ? +1 : -1;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (int c = 0; c < crossing_count(); ++c) w += crossing_sign(c);
  return w;
}

void LinkDiagram::build(bool strict) {
  const int n = crossing_count();
  if (n == 0 && free_loops_ == 0) throw Error(ErrorKind::EmptyInput, "diagram has no crossings");
  if (free_loops_ < 0) throw Error(ErrorKind::InvalidArgument, "negative free loop count");

  const int edges = 2 * n;
  ends_.assign(edges + 1, {});
  std::vector<int> seen(edges + 1, 0);
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      int label = crossings_[c].slots[s];
      if (label < 1 || label > edges) {
        throw Error(ErrorKind::LabelMultiplicity,
                    "edge label " + std::to_string(label) + " outside 1.." + std::to_string(edges));
      }
      if (seen[label] == 2) {
        throw Error(ErrorKind::LabelMultiplicity, "edge label " + std::to_string(label) + " occurs more than twice");
      }
      ends_[label][seen[label]++] = SlotRef{c, s};
    }
  }
  for (int label = 1; label <= edges; ++label) {
    if (seen[label] != 2) {
      throw Error(ErrorKind::LabelMultiplicity, "edge label " + std::to_string(label) + " occurs " +
                                                    std::to_string(seen[label]) + " time(s), expected 2");
    }
  }

  // Strand cycles. A walk records arrivals; the edge at an arrival is the
  // edge just traversed.
  auto walk = [&](SlotRef start) {
    Component comp;
    SlotRef at = start;
    do {
      comp.edges.push_back(edge_at(at));
      comp.arrivals.push_back(at);
      at = partner(SlotRef{at.crossing, wrap4(at.slot + 2)});
    } while (at != start);
    return comp;
  };
  auto first_under_arrival = [](const Component& comp) -> int {
    for (const auto& a : comp.arrivals)
      if (a.slot % 2 == 0) return a.slot;
    return -1;
  };

  components_.clear();
  std::vector<char> visited(edges + 1, 0);
  std::vector<int> needs_rotation;
  for (int label = 1; label <= edges; ++label) {
    if (visited[label]) continue;
    Component comp = walk(ends_[label][0]);
    if (first_under_arrival(comp) == 2) comp = walk(ends_[label][1]);
    for (const auto& a : comp.arrivals) {
      visited[edge_at(a)] = 1;
      if (a.slot == 2) {
        if (strict) {
          throw Error(ErrorKind::Orientation, "crossing " + std::to_string(a.crossing) +
                                                  ": slot 0 is not the incoming under-strand for the orientation of "
                                                  "the component through edge " + std::to_string(label));
        }
        needs_rotation.push_back(a.crossing);
      }
    }
    components_.push_back(std::move(comp));
  }
  if (!needs_rotation.empty()) {
    std::sort(needs_rotation.begin(), needs_rotation.end());
    needs_rotation.erase(std::unique(needs_rotation.begin(), needs_rotation.end()), needs_rotation.end());
    for (int c : needs_rotation) rotate_by(crossings_[c], 2);
    build(true);
    return;
  }

  head_.assign(edges + 1, {});
  tail_.assign(edges + 1, {});
  for (const auto& comp : components_) {
    for (const auto& a : comp.arrivals) {
      int e = edge_at(a);
      head_[e] = a;
      tail_[e] = partner(a);
    }
  }

  // Pieces of the underlying 4-valent graph.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int label = 1; label <= edges; ++label) {
    int a = find_root(parent, ends_[label][0].crossing);
    int b = find_root(parent, ends_[label][1].crossing);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  piece_of_crossing_.assign(n, -1);
  piece_anchor_.clear();
  std::vector<int> piece_of_root(n, -1);
  for (int c = 0; c < n; ++c) {
    int r = find_root(parent, c);
    if (piece_of_root[r] < 0) {
      piece_of_root[r] = static_cast<int>(piece_anchor_.size());
      piece_anchor_.push_back(c);
    }
    piece_of_crossing_[c] = piece_of_root[r];
  }
  piece_count_ = static_cast<int>(piece_anchor_.size());

  // Faces: leave a corner along its lower slot, arrive at the partner slot,
  // continue in the corner clockwise of the arrival.
  faces_.clear();
  face_of_corner_.assign(4 * n, -1);
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < 4; ++k) {
      if (face_of_corner_[4 * c + k] >= 0) continue;
      Face face;
      face.piece = piece_of_crossing_[c];
      const int id = static_cast<int>(faces_.size());
      Corner at{c, k};
      do {
        face_of_corner_[4 * at.crossing + at.corner] = id;
        face.corners.push_back(at);
        SlotRef p = partner(SlotRef{at.crossing, at.corner});
        at = Corner{p.crossing, wrap4(p.slot - 1)};
      } while (at != Corner{c, k});
      faces_.push_back(std::move(face));
    }
  }

  std::vector<int> faces_per_piece(piece_count_, 0), crossings_per_piece(piece_count_, 0);
  for (const auto& f : faces_) ++faces_per_piece[f.piece];
  for (int c = 0; c < n; ++c) ++crossings_per_piece[piece_of_crossing_[c]];
  for (int p = 0; p < piece_count_; ++p) {
    const int v = crossings_per_piece[p];
    if (faces_per_piece[p] != v + 2) {
      throw Error(ErrorKind::NonPlanar, "piece " + std::to_string(p) + " has " + std::to_string(faces_per_piece[p]) +
                                            " faces, a planar diagram with " + std::to_string(v) +
                                            " crossings has " + std::to_string(v + 2));
    }
  }
}

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  std::vector<Crossing> scan() {
    std::vector<Crossing> out;
    skip_blank();
    while (pos_ < text_.size()) {
      out.push_back(crossing());
      if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '#') {
        fail("expected whitespace between crossings");
      }
      skip_blank();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Syntax, what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void skip_spaces() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  void expect(char ch) {
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  int label() {
    skip_spaces();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a positive integer label");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("label too large");
    }
    int value = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (value == 0) {
      pos_ = start;
      fail("labels start at 1");
    }
    skip_spaces();
    return value;
  }

  Crossing crossing() {
    expect('X');
    expect('[');
    Crossing c;
    for (int s = 0; s < 4; ++s) {
      c.slots[s] = label();
      if (s < 3) expect(',');
    }
    expect(']');
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Crossing> parse_pd_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Syntax, std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("pd") || !doc["pd"].is_array()) {
    throw Error(ErrorKind::Syntax, "JSON diagram must be an object with a \"pd\" array", 0);
  }
  std::vector<Crossing> out;
  for (const auto& row : doc["pd"]) {
    if (!row.is_array() || row.size() != 4) throw Error(ErrorKind::Syntax, "each pd entry must be 4 labels", 0);
    Crossing c;
    for (int s = 0; s < 4; ++s) {
      if (!row[s].is_number_integer() || row[s].get<long long>() < 1) {
        throw Error(ErrorKind::Syntax, "pd labels must be positive integers", 0);
      }
      c.slots[s] = row[s].get<int>();
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  std::vector<Crossing> crossings =
      (first < text.size() && text[first] == '{') ? parse_pd_json(text) : PdScanner(text).scan();
  if (crossings.empty()) throw Error(ErrorKind::EmptyInput, "no crossings in input");
  return LinkDiagram::from_crossings(std::move(crossings));
}

std::string to_pd_string(const LinkDiagram& diagram) {
  std::ostringstream out;
  bool first = true;
  for (const auto& c : diagram.crossings()) {
    if (!first) out << ' ';
    first = false;
    out << "X[" << c.slots[0] << ',' << c.slots[1] << ',' << c.slots[2] << ',' << c.slots[3] << ']';
  }
  if (diagram.free_loops() > 0) {
    if (!first) out << ' ';
    out << "# plus " << diagram.free_loops() << " crossingless unknot component(s)";
  }
  return out.str();
}

std::string to_pd_json(const LinkDiagram& diagram) {
  nlohmann::json pd = nlohmann::json::array();
  for (const auto& c : diagram.crossings()) pd.push_back(c.slots);
  return nlohmann::json{{"pd", pd}}.dump();
}

const std::vector<Face>& trace_faces(const LinkDiagram& diagram) { return diagram.faces(); }

ComponentsAndWrithe components_and_writhe(const LinkDiagram& diagram) {
  return ComponentsAndWrithe{diagram.components(), diagram.free_loops(), diagram.writhe()};
}

namespace {

// Over and under swap: the incoming over end becomes the new slot 0.
Crossing mirrored(const LinkDiagram& d, int c) {
  Crossing out = d.crossings()[c];
  rotate_by(out, d.crossing_sign(c) > 0 ? 3 : 1);
  return out;
}

}  // namespace

LinkDiagram mirror_diagram(const LinkDiagram& diagram) {
  std::vector<Crossing> out;
  out.reserve(diagram.crossing_count());
  for (int c = 0; c < diagram.crossing_count(); ++c) out.push_back(mirrored(diagram, c));
  return LinkDiagram::from_crossings(std::move(out), diagram.free_loops());
}

LinkDiagram switch_crossing(const LinkDiagram& diagram, int crossing) {
  if (crossing < 0 || crossing >= diagram.crossing_count()) {
    throw Error(ErrorKind::InvalidArgument, "no crossing " + std::to_string(crossing));
  }
  std::vector<Crossing> out = diagram.crossings();
  out[crossing] = mirrored(diagram, crossing);
  return LinkDiagram::from_wiring(std::move(out), diagram.free_loops());
}

LinkDiagram add_reidemeister1(const LinkDiagram& diagram, int edge, Handedness handedness) {
  if (!diagram.has_edge(edge)) throw Error(ErrorKind::UnknownEdge, "no edge labelled " + std::to_string(edge));
  const int n = diagram.crossing_count();
  const SlotRef tail = diagram.tail(edge);
  const SlotRef head = diagram.head(edge);
  const int a = edge;        // tail -> kink
  const int b = 2 * n + 1;   // kink -> head
  const int x = 2 * n + 2;   // the loop
  std::vector<Crossing> out = diagram.crossings();
  out[head.crossing].slots[head.slot] = b;

  const bool over_first = tail.slot % 2 == 0;
  const bool positive = handedness == Handedness::Positive;
  Crossing kink;
  if (!over_first) {
    kink.slots = positive ? std::array<int, 4>{a, b, x, x} : std::array<int, 4>{a, x, x, b};
  } else {
    kink.slots = positive ? std::array<int, 4>{x, x, b, a} : std::array<int, 4>{x, a, b, x};
  }
  out.push_back(kink);
  return LinkDiagram::from_wiring(std::move(out), diagram.free_loops());
}

LinkDiagram disjoint_union(const LinkDiagram& first, const LinkDiagram& second) {
  std::vector<Crossing> out = first.crossings();
  const int offset = first.edge_count();
  for (auto c : second.crossings()) {
    for (int& label : c.slots) label += offset;
    out.push_back(c);
  }
  return LinkDiagram::from_crossings(std::move(out), first.free_loops() + second.free_loops());
}

}  // namespace ribbonlink
