#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "oracles.hpp"
#include "ribbonlink/census.hpp"
#include "ribbonlink/error.hpp"
#include "ribbonlink/pipeline.hpp"

using namespace ribbonlink;

namespace {

Report run(const std::string& name, PipelineOptions options = {}) {
  return run_pipeline(load_input("census:" + name), "census:" + name, options);
}

std::filesystem::path data_dir() { return std::filesystem::path(RIBBONLINK_TEST_DATA); }

}  // namespace

TEST(Pipeline, CensusExpectations) {
  for (const auto& entry : census()) {
    Report r = run(entry.name);
    const auto& e = entry.expected;
    if (!e.bipartite) {
      EXPECT_EQ(r.status, PipelineStatus::HypothesisFailure) << entry.name;
      EXPECT_EQ(r.exit_code(), 2);
      continue;
    }
    ASSERT_TRUE(e.bound_multiple.has_value());
    ASSERT_TRUE(r.bound.has_value()) << entry.name;
    EXPECT_EQ(r.bound->multiple, *e.bound_multiple) << entry.name;
    EXPECT_EQ(r.exit_code(), 0) << entry.name;
    if (e.reduced_crossings == 0) {
      EXPECT_EQ(r.status, PipelineStatus::Degenerate);
      EXPECT_FALSE(r.presentation.has_value());
      EXPECT_TRUE(r.json["realization"].is_null());
      continue;
    }
    EXPECT_EQ(r.status, PipelineStatus::Ok) << entry.name << ": " << r.reason;
    ASSERT_TRUE(r.presentation && r.realization);
    EXPECT_EQ(static_cast<int>(r.presentation->arcs.size()), 3 * e.reduced_crossings);
    EXPECT_EQ(r.oracle_match, std::optional<bool>(true));
    EXPECT_NEAR(r.realization->length_over_width(), e.reduced_crossings * std::sqrt(3.0), 1e-9);
    EXPECT_TRUE(r.json["rotation"]["rotated"].get<bool>());
    EXPECT_TRUE(r.json["validation"].empty());
    EXPECT_EQ(r.json["schema"], 1);
    EXPECT_EQ(r.json["oracle"]["input_matches_reduced"], true);
  }
}

TEST(Pipeline, ReportsAreByteStable) {
  for (const auto& entry : census()) {
    EXPECT_EQ(run(entry.name).json.dump(), run(entry.name).json.dump()) << entry.name;
  }
}

TEST(Pipeline, MirrorNormalization) {
  EXPECT_FALSE(run("hopf").json["mirrored"].get<bool>());
  EXPECT_TRUE(run("trefoil").json["mirrored"].get<bool>());
  Report mirror = run_pipeline(mirror_diagram(census_diagram("trefoil")), "mirror", {});
  EXPECT_FALSE(mirror.json["mirrored"].get<bool>());
  EXPECT_EQ(mirror.bound->multiple, 3);
  EXPECT_EQ(mirror.json["shading"]["signs"], nlohmann::json::array({1}));
}

TEST(Pipeline, FigureEightIsOutOfScope) {
  Report r = run("figure8");
  EXPECT_EQ(r.exit_code(), 2);
  const auto& cycles = r.json["shading"]["rejections"];
  ASSERT_EQ(cycles.size(), 2u);
  for (const auto& c : cycles) EXPECT_EQ(c["length"].get<int>() % 2, 1);
  EXPECT_FALSE(r.bound.has_value());
}

TEST(Pipeline, ForcedShading) {
  PipelineOptions zero;
  zero.shading = 0;
  Report r = run("trefoil", zero);
  EXPECT_EQ(r.exit_code(), 2);
  ASSERT_EQ(r.json["shading"]["rejections"].size(), 1u);
  EXPECT_EQ(r.json["shading"]["rejections"][0]["length"], 3);

  PipelineOptions one;
  one.shading = 1;
  EXPECT_EQ(run("trefoil", one).exit_code(), 0);
  EXPECT_EQ(run("hopf", zero).exit_code(), 0);
  EXPECT_EQ(run("hopf", one).exit_code(), 0);
}

TEST(Pipeline, NonAlternatingInput) {
  LinkDiagram d = load_input((data_dir() / "trefoil_switched.pd").string());
  Report r = run_pipeline(d, "file", {});
  EXPECT_EQ(r.exit_code(), 2);
  EXPECT_FALSE(r.json["alternation"]["alternating"].get<bool>());
  EXPECT_TRUE(r.json["alternation"]["certificate"].is_object());
}

TEST(Pipeline, FileInputMatchesCensus) {
  LinkDiagram d = load_input((data_dir() / "trefoil.pd").string());
  EXPECT_EQ(d, census_diagram("trefoil"));
}

TEST(Pipeline, InputErrors) {
  try {
    load_input("census:nonesuch");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownCensusEntry);
    EXPECT_NE(std::string(e.what()).find("pretzel222"), std::string::npos);
  }
  EXPECT_THROW(load_input((data_dir() / "missing.pd").string()), Error);
  EXPECT_THROW(load_input((data_dir() / "syntax_error.pd").string()), Error);
}

TEST(Pipeline, KinkedInputsReduceFirst) {
  LinkDiagram d = add_reidemeister1(add_reidemeister1(census_diagram("hopf"), 1, Handedness::Positive), 2,
                                    Handedness::Negative);
  Report r = run_pipeline(d, "kinked", {});
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(r.json["reduction"]["steps"], 2);
  EXPECT_EQ(r.bound->multiple, 2);
}

TEST(Pipeline, SplitCrossinglessComponentIsOutOfScope) {
  Report r = run_pipeline(disjoint_union(census_diagram("hopf"), census_diagram("unknot-kink")), "split", {});
  EXPECT_EQ(r.exit_code(), 2);
}

TEST(Pipeline, OracleCanBeSkipped) {
  PipelineOptions options;
  options.oracle = false;
  Report r = run("pretzel222", options);
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_FALSE(r.oracle_match.has_value());
  EXPECT_FALSE(r.json["oracle"]["checked"].get<bool>());
}

TEST(Pipeline, SummaryMentionsTheBound) {
  std::string s = run("hopf").summary();
  EXPECT_NE(s.find("2*sqrt(3)"), std::string::npos);
  EXPECT_NE(s.find("oracle: match"), std::string::npos);
}

TEST(Census, Lookup) {
  EXPECT_EQ(census_lookup("hopf").expected.crossings, 2);
  EXPECT_EQ(census_lookup("pretzel222").expected.bound_multiple, std::optional<int>(6));
  EXPECT_EQ(census_diagram("granny"), connected_sum(census_diagram("trefoil"), 1, census_diagram("trefoil"), 1).diagram);
  EXPECT_THROW(census_lookup("T1"), Error);
  EXPECT_EQ(census().size(), 9u);
}
