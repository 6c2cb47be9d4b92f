#include "ribbonlink/ribbon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ribbonlink/error.hpp"

namespace ribbonlink {

namespace {

const double kSqrt3 = std::numbers::sqrt3;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

bool encloses(const Arc& outer, const Arc& inner) {
  int lo = std::min(outer.a, outer.b), hi = std::max(outer.a, outer.b);
  int ilo = std::min(inner.a, inner.b), ihi = std::max(inner.a, inner.b);
  return lo <= ilo && ihi <= hi && (lo != ilo || hi != ihi);
}

}  // namespace

double RibbonRealization::triangle_side() const { return 2.0 * width / kSqrt3; }
double RibbonRealization::footprint_circumradius() const { return 2.0 * width / 3.0; }
double RibbonRealization::core_length() const { return m * width / kSqrt3; }
double RibbonRealization::length_over_width() const { return m / kSqrt3; }

RibbonRealization realize_ribbon(const ThreePagePresentation& p, double width) {
  if (!(width > 0) || !std::isfinite(width)) throw Error(ErrorKind::InvalidArgument, "ribbon width must be positive");
  auto violations = validate_presentation(p);
  if (!violations.empty()) throw Error(ErrorKind::InvalidPresentation, violations.front().message);
  auto cert = is_rotated(p);
  if (!cert.rotated) throw Error(ErrorKind::NotRotated, "only rotated presentations fold into triangle stacks");

  RibbonRealization r;
  r.width = width;
  r.m = p.m;
  r.triangles.resize(p.m);
  for (int ci = 0; ci < static_cast<int>(cert.components.size()); ++ci) {
    RibbonComponent comp;
    comp.arcs = cert.components[ci].arcs;
    int point = p.arcs[comp.arcs.front()].a;
    for (int arc : comp.arcs) {
      comp.points.push_back(point);
      point = p.arcs[arc].a == point ? p.arcs[arc].b : p.arcs[arc].a;
    }
    for (int j = 0; j < comp.triangle_count(); ++j) r.triangles[comp.points[j]] = {comp.points[j], ci, j};
    r.components.push_back(std::move(comp));
  }
  for (int ci = 0; ci < static_cast<int>(r.components.size()); ++ci) {
    r.components[ci].one_sided = unfold_component(r, ci).closing_flips;
  }

  const int arc_count = static_cast<int>(p.arcs.size());
  std::vector<int> order(arc_count);
  for (int i = 0; i < arc_count; ++i) order[i] = i;
  auto length = [&](int i) { return std::abs(p.arcs[i].a - p.arcs[i].b); };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return length(x) < length(y); });
  r.folds.resize(arc_count);
  for (int i : order) {
    Fold f{i, p.arcs[i].a, p.arcs[i].b, p.arcs[i].page, 0, 0};
    for (int j = 0; j < arc_count; ++j) {
      if (j == i || p.arcs[j].page != f.page) continue;
      if (encloses(p.arcs[j], p.arcs[i])) ++f.nesting_depth;
      if (encloses(p.arcs[i], p.arcs[j])) f.layer_rank = std::max(f.layer_rank, r.folds[j].layer_rank + 1);
    }
    r.folds[i] = f;
  }
  return r;
}

std::vector<bool> sidedness(const RibbonRealization& r) {
  std::vector<bool> out;
  for (const auto& comp : r.components) out.push_back(comp.one_sided);
  return out;
}

double FlatStrip::core_length() const {
  double total = 0;
  for (std::size_t i = 1; i < core.size(); ++i) total += std::hypot(core[i].x - core[i - 1].x, core[i].y - core[i - 1].y);
  return total;
}

FlatStrip unfold_component(const RibbonRealization& r, int component) {
  const auto& comp = r.components.at(component);
  const double s = r.triangle_side(), w = r.width;
  const int count = comp.triangle_count();
  auto up = [](int j) { return j % 2 == 0; };
  FlatStrip strip;
  for (int j = 0; j < count; ++j) {
    const double x0 = j * s / 2, x1 = (j + 1) * s / 2, x2 = (j + 2) * s / 2;
    if (up(j)) {
      strip.triangles.push_back({Vec2{x0, 0}, Vec2{x2, 0}, Vec2{x1, w}});
      strip.fold_lines.push_back({Vec2{x2, 0}, Vec2{x1, w}});
    } else {
      strip.triangles.push_back({Vec2{x0, w}, Vec2{x2, w}, Vec2{x1, 0}});
      strip.fold_lines.push_back({Vec2{x1, 0}, Vec2{x2, w}});
    }
  }
  for (int arc : comp.arcs) {
    auto it = std::find_if(r.folds.begin(), r.folds.end(), [arc](const Fold& f) { return f.arc == arc; });
    strip.fold_pages.push_back(it == r.folds.end() ? 0 : it->page);
  }
  strip.core.push_back(Vec2{s / 4, w / 2});
  for (int j = 0; j < count; ++j) strip.core.push_back(Vec2{(2 * j + 3) * s / 4, w / 2});
  // The closing fold glues the right side of the last triangle to the left
  // side of the first; that gluing reverses the ribbon when the next
  // triangle in the pattern would point the other way from the first.
  strip.closing_flips = up(count) != up(0);
  return strip;
}

std::string export_svg(const RibbonRealization& r) {
  if (r.m == 0) throw Error(ErrorKind::EmptyInput, "no realization for an empty presentation");
  const double scale = 60.0, margin = 24.0, row_gap = 36.0;
  const double s = r.triangle_side(), w = r.width;

  double strip_width = 0;
  for (const auto& comp : r.components) strip_width = std::max(strip_width, (comp.triangle_count() + 1) * s / 2 * scale);
  const double strips_height = r.components.size() * (w * scale + row_gap);
  const double radius = r.footprint_circumradius() * scale * 2.0;
  const double panel_b_x = margin * 2 + strip_width + radius;
  const double total_w = panel_b_x + radius + 220.0;
  const double total_h = std::max(strips_height, 2 * radius + 40.0 + 14.0 * r.m) + 2 * margin + 24.0;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(total_w) << "\" height=\""
      << num(total_h) << "\" viewBox=\"0 0 " << num(total_w) << " " << num(total_h) << "\">\n";
  out << "<style>text{font-family:sans-serif;font-size:11px}</style>\n";

  out << "<g id=\"unfolded\">\n";
  out << "<text x=\"" << num(margin) << "\" y=\"" << num(margin) << "\">(a) unfolded strips, " << r.m
      << " triangles</text>\n";
  for (int ci = 0; ci < static_cast<int>(r.components.size()); ++ci) {
    FlatStrip strip = unfold_component(r, ci);
    const double ox = margin, oy = margin + 12.0 + ci * (w * scale + row_gap);
    auto px = [&](Vec2 v) { return num(ox + v.x * scale) + "," + num(oy + (w - v.y) * scale); };
    out << "<g class=\"component\" data-component=\"" << ci << "\" data-one-sided=\""
        << (r.components[ci].one_sided ? "true" : "false") << "\">\n";
    for (std::size_t j = 0; j < strip.triangles.size(); ++j) {
      const auto& t = strip.triangles[j];
      out << "<polygon class=\"triangle\" data-binding-point=\"" << r.components[ci].points[j] << "\" points=\""
          << px(t[0]) << " " << px(t[1]) << " " << px(t[2]) << "\" fill=\"#dde8f4\" stroke=\"#345\" stroke-width=\"0.5\"/>\n";
    }
    for (std::size_t j = 0; j < strip.fold_lines.size(); ++j) {
      const auto& f = strip.fold_lines[j];
      out << "<line class=\"fold\" data-page=\"" << strip.fold_pages[j] << "\" x1=\"" << num(ox + f[0].x * scale)
          << "\" y1=\"" << num(oy + (w - f[0].y) * scale) << "\" x2=\"" << num(ox + f[1].x * scale) << "\" y2=\""
          << num(oy + (w - f[1].y) * scale) << "\" stroke=\"#c33\" stroke-width=\"1.5\" stroke-dasharray=\"4,2\"/>\n";
      Vec2 mid{(f[0].x + f[1].x) / 2, (f[0].y + f[1].y) / 2};
      out << "<text x=\"" << num(ox + mid.x * scale + 3) << "\" y=\"" << num(oy + (w - mid.y) * scale)
          << "\">p" << strip.fold_pages[j] << "</text>\n";
    }
    out << "<polyline class=\"core\" fill=\"none\" stroke=\"#222\" stroke-width=\"1\" points=\"";
    for (std::size_t j = 0; j < strip.core.size(); ++j) out << (j ? " " : "") << px(strip.core[j]);
    out << "\"/>\n</g>\n";
  }
  out << "</g>\n";

  out << "<g id=\"footprint\">\n";
  const double cy = margin + 12.0 + radius;
  out << "<text x=\"" << num(panel_b_x - radius) << "\" y=\"" << num(margin) << "\">(b) common footprint, top view</text>\n";
  std::array<Vec2, 3> corner;
  for (int k = 0; k < 3; ++k) {
    double angle = std::numbers::pi / 2 + k * 2 * std::numbers::pi / 3;
    corner[k] = {panel_b_x + radius * std::cos(angle), cy - radius * std::sin(angle)};
  }
  out << "<polygon points=\"";
  for (int k = 0; k < 3; ++k) out << (k ? " " : "") << num(corner[k].x) << "," << num(corner[k].y);
  out << "\" fill=\"#dde8f4\" stroke=\"#345\"/>\n";
  // Side for page k joins corners k-1 and k.
  for (int page = 1; page <= 3; ++page) {
    Vec2 a = corner[(page + 2) % 3], b = corner[page % 3];
    Vec2 mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    Vec2 label{panel_b_x + 1.25 * (mid.x - panel_b_x), cy + 1.25 * (mid.y - cy)};
    out << "<text class=\"side\" data-page=\"" << page << "\" x=\"" << num(label.x) << "\" y=\"" << num(label.y)
        << "\">page " << page << "</text>\n";
  }
  double ty = cy + radius + 28.0;
  for (int page = 1; page <= 3; ++page) {
    std::vector<Fold> folds;
    for (const auto& f : r.folds)
      if (f.page == page) folds.push_back(f);
    std::stable_sort(folds.begin(), folds.end(), [](const Fold& x, const Fold& y) { return x.layer_rank < y.layer_rank; });
    std::string line = "page " + std::to_string(page) + ":";
    for (const auto& f : folds) {
      line += " [" + std::to_string(f.a) + "-" + std::to_string(f.b) + " layer " + std::to_string(f.layer_rank) + "]";
    }
    out << "<text x=\"" << num(panel_b_x - radius) << "\" y=\"" << num(ty) << "\">" << line << "</text>\n";
    ty += 14.0;
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string export_json(const RibbonRealization& r) {
  nlohmann::json triangles = nlohmann::json::array(), folds = nlohmann::json::array(),
                 components = nlohmann::json::array();
  for (const auto& t : r.triangles) {
    triangles.push_back({{"binding_point", t.binding_point}, {"component", t.component}, {"position", t.position}});
  }
  for (const auto& f : r.folds) {
    folds.push_back({{"arc", f.arc}, {"a", f.a}, {"b", f.b}, {"page", f.page}, {"nesting_depth", f.nesting_depth},
                     {"layer_rank", f.layer_rank}});
  }
  for (const auto& c : r.components) {
    components.push_back({{"points", c.points}, {"arcs", c.arcs}, {"triangles", c.triangle_count()},
                          {"one_sided", c.one_sided}});
  }
  nlohmann::json j{{"width", r.width},
                   {"binding_points", r.m},
                   {"triangle_side", r.triangle_side()},
                   {"core_length", r.core_length()},
                   {"length_over_width", {{"multiple_of_inverse_sqrt3", r.m}, {"value", r.length_over_width()}}},
                   {"triangles", triangles},
                   {"folds", folds},
                   {"components", components}};
  return j.dump(2);
}

RibbonRealization parse_realization_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    RibbonRealization r;
    r.width = j.at("width").get<double>();
    r.m = j.at("binding_points").get<int>();
    for (const auto& t : j.at("triangles")) {
      r.triangles.push_back({t.at("binding_point").get<int>(), t.at("component").get<int>(), t.at("position").get<int>()});
    }
    for (const auto& f : j.at("folds")) {
      r.folds.push_back({f.at("arc").get<int>(), f.at("a").get<int>(), f.at("b").get<int>(), f.at("page").get<int>(),
                         f.at("nesting_depth").get<int>(), f.at("layer_rank").get<int>()});
    }
    for (const auto& c : j.at("components")) {
      RibbonComponent comp;
      comp.points = c.at("points").get<std::vector<int>>();
      comp.arcs = c.at("arcs").get<std::vector<int>>();
      comp.one_sided = c.at("one_sided").get<bool>();
      r.components.push_back(std::move(comp));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("realization JSON: ") + e.what());
  }
}

std::string BoundReport::exact() const {
  if (multiple == 0) return "0";
  return multiple == 1 ? "sqrt(3)" : std::to_string(multiple) + "*sqrt(3)";
}

std::string BoundReport::to_json() const {
  return nlohmann::json{{"crossings", n},
                        {"multiple_of_sqrt3", multiple},
                        {"exact", exact()},
                        {"value", bound},
                        {"kusner_bound", kusner_bound},
                        {"improves_on_kusner", improves},
                        {"mirrored", mirrored},
                        {"hypothesis", hypothesis}}
      .dump();
}

BoundReport bound_report(const LinkDiagram& reduced, bool mirrored) {
  BoundReport b;
  b.n = reduced.crossing_count();
  b.multiple = b.n;
  b.bound = b.n * kSqrt3;
  b.kusner_bound = 2.5 * b.n + 1.0;
  b.improves = b.bound < b.kusner_bound;
  b.mirrored = mirrored;
  b.hypothesis = b.n == 0 ? "degenerate" : "satisfied";
  return b;
}

}  // namespace ribbonlink
