#include "ribbonlink/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "ribbonlink/bracket.hpp"
#include "ribbonlink/census.hpp"
#include "ribbonlink/checkerboard.hpp"
#include "ribbonlink/error.hpp"
#include "ribbonlink/graph_analysis.hpp"

namespace ribbonlink {

using nlohmann::json;

const char* to_string(PipelineStatus status) {
  switch (status) {
    case PipelineStatus::Ok: return "ok";
    case PipelineStatus::Degenerate: return "degenerate";
    case PipelineStatus::HypothesisFailure: return "hypothesis_failure";
    case PipelineStatus::InternalFailure: return "internal_failure";
  }
  return "unknown";
}

int Report::exit_code() const {
  switch (status) {
    case PipelineStatus::Ok:
    case PipelineStatus::Degenerate: return 0;
    case PipelineStatus::HypothesisFailure: return 2;
    case PipelineStatus::InternalFailure: return 1;
  }
  return 1;
}

std::string Report::summary() const {
  std::ostringstream out;
  out << "source: " << json.value("source", "") << "\n";
  out << "status: " << to_string(status) << "\n";
  if (!reason.empty()) out << "reason: " << reason << "\n";
  if (json.contains("reduction")) {
    out << "crossings: " << json["input"]["crossings"].get<int>() << " -> " << json["reduction"]["crossings"].get<int>()
        << " after " << json["reduction"]["steps"].get<int>() << " untwist(s)\n";
  }
  if (presentation) {
    auto h = presentation->page_histogram();
    out << "presentation: " << presentation->m << " binding points, pages " << h[0] << "/" << h[1] << "/" << h[2]
        << (presentation->mirrored ? " (mirror image)" : "") << "\n";
  }
  if (oracle_match) out << "oracle: " << (*oracle_match ? "match" : "MISMATCH") << "\n";
  if (realization) {
    out << "ribbon: " << realization->m << " triangles, length/width = " << realization->m << "/sqrt(3) = "
        << json["realization"]["length_over_width"]["value"].dump() << "\n";
  }
  if (bound) {
    out << "bound: Rib <= " << bound->exact() << " = " << json["bound"]["value"].dump() << " (2.5n+1 = "
        << json["bound"]["kusner_bound"].dump() << ")\n";
  }
  return out.str();
}

LinkDiagram load_input(std::string_view input) {
  constexpr std::string_view prefix = "census:";
  if (input.substr(0, prefix.size()) == prefix) return census_diagram(input.substr(prefix.size()));
  std::ifstream file{std::string(input)};
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot read input file '" + std::string(input) + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return parse_pd(text.str());
}

namespace {

json cycle_json(const OddCycle& cycle) { return json::parse(cycle.to_json()); }

json partition_json(const Bipartition& b) {
  json red = json::array(), blue = json::array();
  for (int v = 0; v < static_cast<int>(b.classes.size()); ++v) (b.is_red(v) ? red : blue).push_back(v);
  return {{"valid", b.valid}, {"red", red}, {"blue", blue}};
}

// Tait sign of every piece under a coloring of an alternating diagram.
std::vector<int> piece_signs(const LinkDiagram& d, const TaitGraph& g) {
  std::vector<int> signs(d.piece_count(), 0);
  for (int c = 0; c < d.crossing_count(); ++c) signs[d.piece_of_crossing(c)] = g.edges[c].sign;
  return signs;
}

Report failure(Report report, PipelineStatus status, const std::string& reason) {
  report.status = status;
  report.reason = reason;
  report.json["status"] = to_string(status);
  report.json["reason"] = reason;
  report.json["exit_code"] = report.exit_code();
  return report;
}

}  // namespace

Report run_pipeline(const LinkDiagram& diagram, const std::string& source, const PipelineOptions& options) {
  Report report;
  json& j = report.json;
  j["schema"] = 1;
  j["source"] = source;
  j["input"] = {{"pd", json::parse(to_pd_json(diagram))["pd"]},
                {"crossings", diagram.crossing_count()},
                {"components", diagram.component_count()},
                {"free_loops", diagram.free_loops()},
                {"writhe", diagram.writhe()}};

  auto alternation = is_alternating(diagram);
  j["alternation"] = {{"alternating", alternation.alternating}, {"certificate", nullptr}};
  if (!alternation.alternating) {
    const auto& f = *alternation.failure;
    j["alternation"]["certificate"] = {{"component", f.component},
                                       {"edge", f.edge},
                                       {"from_crossing", f.from_crossing},
                                       {"to_crossing", f.to_crossing},
                                       {"passes", f.both_over ? "over-over" : "under-under"}};
    return failure(std::move(report), PipelineStatus::HypothesisFailure, "diagram is not alternating");
  }

  const Reduction reduction = reduce_nugatory(diagram);
  const LinkDiagram& reduced = reduction.diagram;
  j["reduction"] = {{"steps", reduction.steps},
                    {"crossings", reduced.crossing_count()},
                    {"free_loops", reduced.free_loops()},
                    {"pd", json::parse(to_pd_json(reduced))["pd"]}};

  if (reduced.crossing_count() == 0) {
    report.bound = bound_report(reduced, false);
    j["bound"] = json::parse(report.bound->to_json());
    j["realization"] = nullptr;
    report.status = PipelineStatus::Degenerate;
    report.reason = "diagram reduces to crossingless unknots; no realization is emitted";
    j["status"] = to_string(report.status);
    j["reason"] = report.reason;
    j["exit_code"] = report.exit_code();
    return report;
  }
  if (reduced.free_loops() > 0) {
    return failure(std::move(report), PipelineStatus::HypothesisFailure,
                   "reduced diagram has a split crossingless component");
  }

  // Shading and bipartition.
  std::vector<int> shading;
  j["shading"] = {{"mode", options.shading ? std::to_string(*options.shading) : "auto"}, {"rejections", json::array()}};
  if (options.shading) {
    shading.assign(reduced.piece_count(), *options.shading);
    TaitGraph g = tait_graph(reduced, checkerboard_color(reduced, shading));
    Bipartition b = bipartition(g);
    if (!b.valid) {
      j["shading"]["rejections"].push_back(cycle_json(*b.certificate));
      j["shading"]["tait_graph"] = json::parse(g.to_json());
      return failure(std::move(report), PipelineStatus::HypothesisFailure,
                     "Tait graph of shading " + std::to_string(*options.shading) + " has an odd cycle");
    }
  } else {
    ShadingSelection selection = select_bipartite_shading(reduced);
    if (!selection.found) {
      for (const auto& cycle : selection.rejections) j["shading"]["rejections"].push_back(cycle_json(cycle));
      j["shading"]["failing_piece"] = selection.failing_piece;
      return failure(std::move(report), PipelineStatus::HypothesisFailure,
                     "both Tait graphs have odd cycles; no bipartite checkerboard shading");
    }
    shading = selection.piece_shading;
  }

  // Normalize to positive Tait sign when every piece carries negative sign.
  bool mirrored = false;
  LinkDiagram working = reduced;
  {
    TaitGraph g = tait_graph(reduced, checkerboard_color(reduced, shading));
    auto signs = piece_signs(reduced, g);
    if (std::all_of(signs.begin(), signs.end(), [](int s) { return s < 0; })) {
      mirrored = true;
      working = mirror_diagram(reduced);
      for (int p = 0; p < working.piece_count(); ++p) {
        for (int s = 0; s < 2; ++s) {
          shading[p] = s;
          TaitGraph gm = tait_graph(working, checkerboard_color(working, shading));
          if (piece_signs(working, gm)[p] > 0) break;
        }
      }
    }
  }
  const Coloring coloring = checkerboard_color(working, shading);
  const TaitGraph graph = tait_graph(working, coloring);
  const Bipartition partition = bipartition(graph);
  j["mirrored"] = mirrored;
  j["shading"]["piece_shading"] = shading;
  j["shading"]["tait_graph"] = json::parse(graph.to_json());
  j["shading"]["bipartition"] = partition_json(partition);
  j["shading"]["signs"] = piece_signs(working, graph);
  if (!partition.valid) {
    return failure(std::move(report), PipelineStatus::InternalFailure, "mirrored shading lost its bipartition");
  }

  ThreePagePresentation p = build_presentation(working, coloring, partition);
  p.mirrored = mirrored;
  report.presentation = p;
  j["presentation"] = json::parse(p.to_json());
  auto h = p.page_histogram();
  j["presentation_counts"] = {{"binding_points", p.m},
                              {"arcs", p.arcs.size()},
                              {"pages", {h[0], h[1], h[2]}},
                              {"tangency_points", p.count_points(PointKind::Tangency)},
                              {"transversal_points", p.count_points(PointKind::Transversal)}};

  auto violations = validate_presentation(p);
  j["validation"] = json::array();
  for (const auto& v : violations) {
    j["validation"].push_back({{"kind", to_string(v.kind)}, {"points", v.points}, {"arcs", v.arcs}, {"message", v.message}});
  }
  if (!violations.empty()) {
    return failure(std::move(report), PipelineStatus::InternalFailure, "constructed presentation is invalid");
  }
  RotationCertificate rotation = is_rotated(p);
  j["rotation"] = {{"rotated", rotation.rotated}, {"components", json::array()}};
  for (const auto& comp : rotation.components) {
    j["rotation"]["components"].push_back({{"pages", comp.pages}, {"direction", comp.direction}, {"rotated", comp.rotated}});
  }
  if (!rotation.rotated) {
    return failure(std::move(report), PipelineStatus::InternalFailure, "constructed presentation is not rotated");
  }

  j["oracle"] = {{"checked", false}};
  if (options.oracle) {
    if (reduced.crossing_count() > kDefaultBracketLimit) {
      j["oracle"]["reason"] = "crossing count exceeds the state-sum limit";
    } else {
      LinkDiagram rebuilt = reconstruct_diagram(p);
      LaurentPolynomial f_reduced = normalized_invariant(reduced);
      LaurentPolynomial f_rebuilt = normalized_invariant(rebuilt);
      report.oracle_match = equivalent_up_to_mirror(f_reduced, f_rebuilt);
      j["oracle"] = {{"checked", true},
                     {"match", *report.oracle_match},
                     {"reduced", json::parse(f_reduced.to_json())},
                     {"reconstructed", json::parse(f_rebuilt.to_json())},
                     {"reconstructed_crossings", rebuilt.crossing_count()}};
      if (diagram.crossing_count() <= kDefaultBracketLimit) {
        j["oracle"]["input_matches_reduced"] = normalized_invariant(diagram) == f_reduced;
      }
      if (!*report.oracle_match) {
        return failure(std::move(report), PipelineStatus::InternalFailure,
                       "reconstructed diagram has a different normalized bracket");
      }
    }
  }

  report.realization = realize_ribbon(p, options.width);
  const auto& r = *report.realization;
  json comps = json::array();
  for (const auto& c : r.components) comps.push_back({{"triangles", c.triangle_count()}, {"one_sided", c.one_sided}});
  j["realization"] = {{"binding_points", r.m},
                      {"width", r.width},
                      {"core_length", r.core_length()},
                      {"length_over_width", {{"multiple_of_inverse_sqrt3", r.m}, {"value", r.length_over_width()}}},
                      {"folds", r.folds.size()},
                      {"components", comps}};

  report.bound = bound_report(reduced, mirrored);
  j["bound"] = json::parse(report.bound->to_json());
  j["status"] = to_string(report.status);
  j["exit_code"] = report.exit_code();
  return report;
}

}  // namespace ribbonlink
