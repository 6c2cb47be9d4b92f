#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ribbonlink/diagram.hpp"
#include "ribbonlink/ribbon.hpp"
#include "ribbonlink/threepage.hpp"

namespace ribbonlink {

struct PipelineOptions {
  std::optional<int> shading;  // force shading 0 or 1 on every piece; automatic when empty
  double width = 1.0;
  bool oracle = true;
};

enum class PipelineStatus {
  Ok,                 // bound certified
  Degenerate,         // reduces to crossingless unknots: bound 0, nothing to realize
  HypothesisFailure,  // input outside the construction's scope; the report carries certificates
  InternalFailure,    // construction or oracle check failed
};

const char* to_string(PipelineStatus status);

struct Report {
  PipelineStatus status = PipelineStatus::Ok;
  std::string reason;
  std::optional<ThreePagePresentation> presentation;
  std::optional<RibbonRealization> realization;
  std::optional<BoundReport> bound;
  std::optional<bool> oracle_match;
  nlohmann::json json;

  // 0 on success or degenerate input, 2 on hypothesis failure, 1 otherwise.
  int exit_code() const;
  std::string summary() const;
};

// A file path, or `census:<name>`.
LinkDiagram load_input(std::string_view input);

Report run_pipeline(const LinkDiagram& diagram, const std::string& source, const PipelineOptions& options = {});

}  // namespace ribbonlink
