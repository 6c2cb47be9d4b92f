#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "ribbonlink/bracket.hpp"
#include "ribbonlink/census.hpp"
#include "ribbonlink/error.hpp"
#include "ribbonlink/pipeline.hpp"
#include "ribbonlink/ribbon.hpp"

using namespace ribbonlink;

namespace {

constexpr int kCases = 120;

}  // namespace

TEST(Properties, RandomDiagramsRoundTrip) {
  std::mt19937 rng(2024);
  for (int i = 0; i < kCases; ++i) {
    gen::Generated g = gen::random_hypothesis_diagram(rng);
    const LinkDiagram& d = g.diagram;
    const int n = d.crossing_count();
    ThreePagePresentation p = gen::present(d);

    ASSERT_EQ(p.m, 3 * n) << g.recipe;
    ASSERT_EQ(static_cast<int>(p.arcs.size()), 3 * n) << g.recipe;
    EXPECT_EQ(p.page_histogram(), (std::array<int, 3>{n, n, n})) << g.recipe;
    EXPECT_EQ(p.count_points(PointKind::Tangency), n) << g.recipe;
    EXPECT_EQ(p.count_points(PointKind::Transversal), 2 * n) << g.recipe;
    EXPECT_TRUE(validate_presentation(p).empty()) << g.recipe;
    EXPECT_TRUE(oracle::presentation_valid(p.m, gen::chords(p))) << g.recipe;
    EXPECT_TRUE(is_rotated(p).rotated) << g.recipe;

    LinkDiagram rebuilt = reconstruct_diagram(p);
    EXPECT_EQ(rebuilt.crossing_count(), oracle::inner_crossings(p.m, gen::chords(p))) << g.recipe;
    EXPECT_TRUE(oracle::equal_up_to_mirror(oracle::normalized(gen::pd_of(rebuilt)), oracle::normalized(gen::pd_of(d))))
        << g.recipe;

    RibbonRealization r = realize_ribbon(p);
    for (const auto& c : r.components) EXPECT_EQ(c.one_sided, c.triangle_count() % 2 == 1) << g.recipe;
    EXPECT_EQ(r.components.size(), static_cast<std::size_t>(d.component_count()));
  }
}

TEST(Properties, ReductionPreservesInvariantAndBipartiteShading) {
  std::mt19937 rng(99);
  for (int i = 0; i < kCases; ++i) {
    gen::Generated g = gen::random_hypothesis_diagram(rng, 10);
    EXPECT_EQ(normalized_invariant(g.unreduced), normalized_invariant(g.diagram)) << g.recipe;
    EXPECT_TRUE(select_bipartite_shading(g.diagram).found) << g.recipe;
    // A shaded monogon is a Tait loop; kinked inputs need not be bipartite.
    if (select_bipartite_shading(g.unreduced).found) {
      EXPECT_TRUE(select_bipartite_shading(reduce_nugatory(g.unreduced).diagram).found) << g.recipe;
    }
    EXPECT_TRUE(nugatory_crossings(g.diagram).empty()) << g.recipe;
  }
}

TEST(Properties, EveryReductionStepShrinks) {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    gen::Generated g = gen::random_hypothesis_diagram(rng, 8);
    LinkDiagram d = g.unreduced;
    while (true) {
      auto nug = nugatory_crossings(d);
      if (nug.empty()) break;
      LinkDiagram next = remove_nugatory_crossing(d, nug.front());
      ASSERT_EQ(next.crossing_count(), d.crossing_count() - 1);
      EXPECT_EQ(normalized_invariant(next), normalized_invariant(d));
      d = next;
    }
    EXPECT_EQ(d, g.diagram) << g.recipe;
  }
}

TEST(Properties, BracketMultipliesUnderConnectedSum) {
  std::mt19937 rng(13);
  const auto names = gen::hypothesis_census();
  for (int i = 0; i < 60; ++i) {
    LinkDiagram a = census_diagram(names[rng() % names.size()]);
    LinkDiagram b = census_diagram(names[rng() % names.size()]);
    if (a.crossing_count() + b.crossing_count() > 13) continue;
    if (rng() % 2) b = mirror_diagram(b);
    int ea = 1 + static_cast<int>(rng() % a.edge_count()), eb = 1 + static_cast<int>(rng() % b.edge_count());
    LinkDiagram sum = [&] {
      try {
        return connected_sum(a, ea, b, eb).diagram;
      } catch (const Error&) {
        b = mirror_diagram(b);
        return connected_sum(a, ea, b, eb).diagram;
      }
    }();
    EXPECT_EQ(kauffman_bracket(sum), kauffman_bracket(a) * kauffman_bracket(b));
    // Link summands may come back with a component reversed.
    if (a.component_count() == 1 && b.component_count() == 1) {
      EXPECT_EQ(normalized_invariant(sum), normalized_invariant(a) * normalized_invariant(b));
    }
  }
}

TEST(Properties, PipelineOnRandomInputs) {
  std::mt19937 rng(31337);
  for (int i = 0; i < 30; ++i) {
    gen::Generated g = gen::random_hypothesis_diagram(rng, 10);
    Report r = run_pipeline(g.unreduced, g.recipe, {});
    EXPECT_EQ(r.exit_code(), 0) << g.recipe << ": " << r.reason;
    EXPECT_EQ(r.bound->multiple, g.diagram.crossing_count()) << g.recipe;
  }
}
