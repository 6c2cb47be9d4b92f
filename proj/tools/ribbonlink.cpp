// ribbonlink: ribbonlength bounds for alternating links with a bipartite
// Tait graph, via rotated three-page presentations.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ribbonlink/census.hpp"
#include "ribbonlink/error.hpp"
#include "ribbonlink/graph_analysis.hpp"
#include "ribbonlink/pipeline.hpp"

using namespace ribbonlink;

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << content;
}

int analyze(const std::string& input, const std::string& shading, double width, const std::string& svg_path,
            const std::string& json_path, const std::string& ribbon_path, bool no_oracle) {
  PipelineOptions options;
  if (shading == "0" || shading == "1") {
    options.shading = std::stoi(shading);
  } else if (shading != "auto") {
    throw Error(ErrorKind::InvalidArgument, "--shading takes auto, 0 or 1");
  }
  options.width = width;
  options.oracle = !no_oracle;

  Report report = run_pipeline(load_input(input), input, options);
  std::cout << report.summary();
  if (!json_path.empty()) write_file(json_path, report.json.dump(2) + "\n");
  if (!svg_path.empty() || !ribbon_path.empty()) {
    if (!report.realization) {
      std::cerr << "note: no ribbon realization for this input; skipping ribbon output\n";
    } else {
      if (!svg_path.empty()) write_file(svg_path, export_svg(*report.realization));
      if (!ribbon_path.empty()) write_file(ribbon_path, export_json(*report.realization) + "\n");
    }
  }
  if (report.status == PipelineStatus::HypothesisFailure) {
    const auto& j = report.json;
    if (j.contains("alternation") && j["alternation"]["certificate"].is_object()) {
      std::cout << "alternation breaks: " << j["alternation"]["certificate"].dump() << "\n";
    }
    if (j.contains("shading")) {
      for (const auto& cycle : j["shading"]["rejections"]) std::cout << "odd cycle: " << cycle.dump() << "\n";
    }
  }
  return report.exit_code();
}

int census_list() {
  std::cout << std::left << std::setw(13) << "name" << std::setw(11) << "crossings" << std::setw(12) << "components"
            << std::setw(11) << "bipartite" << "bound\n";
  for (const auto& entry : census()) {
    const auto& e = entry.expected;
    std::string bound = e.bound_multiple ? (*e.bound_multiple == 0 ? "0" : std::to_string(*e.bound_multiple) + "*sqrt(3)")
                                         : "-";
    std::cout << std::setw(13) << entry.name << std::setw(11) << e.crossings << std::setw(12) << e.components
              << std::setw(11) << (e.bipartite ? "yes" : "no") << bound << "\n";
  }
  return 0;
}

int sum(const std::string& a, const std::string& b, int e1, int e2, bool mirror_second) {
  LinkDiagram d1 = load_input(a);
  LinkDiagram d2 = load_input(b);
  if (mirror_second) d2 = mirror_diagram(d2);
  ConnectedSum result = connected_sum(d1, e1, d2, e2);
  std::cout << to_pd_string(result.diagram) << "\n";
  return 0;
}

int reduce(const std::string& input) {
  Reduction r = reduce_nugatory(load_input(input));
  std::cout << "# untwisted " << r.steps << " nugatory crossing(s)\n" << to_pd_string(r.diagram) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ribbonlength bounds for alternating links via rotated three-page presentations"};
  app.require_subcommand(1);

  std::string input, shading = "auto", svg_path, json_path, ribbon_path;
  double width = 1.0;
  bool no_oracle = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "run the full pipeline on a PD file or census:<name>");
  analyze_cmd->add_option("input", input, "PD code file, or census:<name>")->required();
  analyze_cmd->add_option("--shading", shading, "auto, 0 or 1")->capture_default_str();
  analyze_cmd->add_option("--width", width, "ribbon width")->capture_default_str()->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--svg", svg_path, "write the folded ribbon as SVG");
  analyze_cmd->add_option("--json", json_path, "write the full JSON report");
  analyze_cmd->add_option("--ribbon-json", ribbon_path, "write the ribbon model as JSON");
  analyze_cmd->add_flag("--no-oracle", no_oracle, "skip the bracket round-trip check");

  auto* census_cmd = app.add_subcommand("census", "built-in diagrams");
  census_cmd->require_subcommand(1);
  census_cmd->add_subcommand("list", "list census entries");

  std::string sum_a, sum_b;
  int edge_a = 1, edge_b = 1;
  bool mirror_second = false;
  auto* sum_cmd = app.add_subcommand("sum", "connected sum of two alternating diagrams");
  sum_cmd->add_option("a", sum_a)->required();
  sum_cmd->add_option("b", sum_b)->required();
  sum_cmd->add_option("--edge-a", edge_a, "edge of the first diagram to splice")->capture_default_str();
  sum_cmd->add_option("--edge-b", edge_b, "edge of the second diagram to splice")->capture_default_str();
  sum_cmd->add_flag("--mirror-second", mirror_second, "mirror the second diagram first");

  std::string reduce_input;
  auto* reduce_cmd = app.add_subcommand("reduce", "untwist all nugatory crossings");
  reduce_cmd->add_option("input", reduce_input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) return analyze(input, shading, width, svg_path, json_path, ribbon_path, no_oracle);
    if (*census_cmd) return census_list();
    if (*sum_cmd) return sum(sum_a, sum_b, edge_a, edge_b, mirror_second);
    if (*reduce_cmd) return reduce(reduce_input);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    if (e.kind() == ErrorKind::NotAlternating || e.kind() == ErrorKind::SignIncompatible) return 2;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
