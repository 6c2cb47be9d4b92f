#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "generators.hpp"
#include "oracles.hpp"
#include "ribbonlink/bracket.hpp"
#include "ribbonlink/census.hpp"
#include "ribbonlink/error.hpp"
#include "ribbonlink/threepage.hpp"

using namespace ribbonlink;

namespace {

ThreePagePresentation make(int m, const std::vector<Arc>& arcs) {
  ThreePagePresentation p;
  p.m = m;
  p.arcs = arcs;
  return p;
}

std::set<Violation::Kind> kinds(const ThreePagePresentation& p) {
  std::set<Violation::Kind> out;
  for (const auto& v : validate_presentation(p)) out.insert(v.kind);
  return out;
}

using ArcSet = std::multiset<std::tuple<int, int, int>>;

ArcSet relabel(const std::vector<Arc>& arcs, int m, int shift, bool reflect) {
  ArcSet out;
  for (const auto& a : arcs) {
    auto f = [&](int i) { return ((reflect ? -i : i) + shift + 2 * m) % m; };
    out.insert({std::min(f(a.a), f(a.b)), std::max(f(a.a), f(a.b)), a.page});
  }
  return out;
}

// Same unoriented arcs after some rotation or reflection of the binding circle.
bool dihedrally_equal(const std::vector<Arc>& x, const std::vector<Arc>& y, int m) {
  const ArcSet target = relabel(y, m, 0, false);
  for (int shift = 0; shift < m; ++shift)
    for (bool reflect : {false, true})
      if (relabel(x, m, shift, reflect) == target) return true;
  return false;
}

std::vector<Arc> swap_inner_pages(std::vector<Arc> arcs) {
  for (auto& a : arcs)
    if (a.page != 3) a.page = 3 - a.page;
  return arcs;
}

}  // namespace

TEST(Presentation, HopfGolden) {
  ThreePagePresentation p = gen::present(census_diagram("hopf"));
  const std::vector<Arc> golden{{2, 0, 1}, {0, 4, 3}, {4, 2, 2}, {5, 3, 1}, {3, 1, 3}, {1, 5, 2}};
  EXPECT_EQ(p.m, 6);
  EXPECT_EQ(p.arcs, golden);
  EXPECT_TRUE(validate_presentation(p).empty());
  EXPECT_TRUE(is_rotated(p).rotated);
}

TEST(Presentation, HopfMatchesHandDerivationUpToSymmetry) {
  // Agreement holds after reflecting the circle or swapping pages 1 and 2.
  const std::vector<Arc> derived{{0, 2, 2}, {2, 4, 1}, {4, 0, 3}, {1, 5, 1}, {5, 3, 2}, {3, 1, 3}};
  ThreePagePresentation p = gen::present(census_diagram("hopf"));
  EXPECT_TRUE(dihedrally_equal(p.arcs, derived, 6) || dihedrally_equal(swap_inner_pages(p.arcs), derived, 6));
  EXPECT_TRUE(validate_presentation(make(6, derived)).empty());
  EXPECT_TRUE(is_rotated(make(6, derived)).rotated);
  LinkDiagram rebuilt = reconstruct_diagram(make(6, derived));
  EXPECT_EQ(rebuilt.crossing_count(), 2);
  EXPECT_TRUE(equivalent_up_to_mirror(normalized_invariant(rebuilt), normalized_invariant(census_diagram("hopf"))));
}

TEST(Validate, SamePageAdjacent) {
  auto violations = validate_presentation(make(2, {{0, 1, 1}, {1, 0, 1}}));
  ASSERT_FALSE(violations.empty());
  bool found = false;
  for (const auto& v : violations)
    if (v.kind == Violation::Kind::SamePageAdjacent) {
      found = true;
      EXPECT_EQ(v.message, "same-page arcs adjacent at binding points 0 and 1");
    }
  EXPECT_TRUE(found);
}

TEST(Validate, Interleaving) {
  auto p = make(4, {{0, 2, 1}, {1, 3, 1}, {2, 1, 2}, {3, 0, 2}});
  EXPECT_TRUE(kinds(p).count(Violation::Kind::Interleaving));
  EXPECT_FALSE(oracle::presentation_valid(4, gen::chords(p)));
}

TEST(Validate, OtherViolations) {
  EXPECT_TRUE(kinds(make(0, {})).count(Violation::Kind::Empty));
  EXPECT_TRUE(kinds(make(3, {{0, 5, 1}, {1, 2, 2}, {2, 0, 3}})).count(Violation::Kind::EndpointRange));
  EXPECT_TRUE(kinds(make(3, {{0, 1, 4}, {1, 2, 2}, {2, 0, 3}})).count(Violation::Kind::InvalidPage));
  EXPECT_TRUE(kinds(make(3, {{0, 0, 1}, {1, 2, 2}, {2, 1, 3}})).count(Violation::Kind::DegenerateArc));
  EXPECT_TRUE(kinds(make(4, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}})).count(Violation::Kind::Degree));
  EXPECT_TRUE(validate_presentation(make(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}})).empty());
}

TEST(Validate, AgreesWithFloatingChordOracle) {
  std::mt19937 rng(29);
  int valid = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    int m = 2 + static_cast<int>(rng() % 7);
    // A random perfect 2-regular structure: a random cyclic order through all points.
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i) arcs.push_back({order[i], order[(i + 1) % m], 1 + static_cast<int>(rng() % 3)});
    auto p = make(m, arcs);
    bool ok = validate_presentation(p).empty();
    ASSERT_EQ(ok, oracle::presentation_valid(m, gen::chords(p))) << "trial " << trial;
    valid += ok;
  }
  EXPECT_GT(valid, 20);
}

TEST(Rotation, Examples) {
  auto single = is_rotated(make(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}}));
  EXPECT_TRUE(single.rotated);
  ASSERT_EQ(single.components.size(), 1u);
  EXPECT_EQ(single.components[0].direction, +1);

  auto reversed = is_rotated(make(3, {{0, 1, 3}, {1, 2, 2}, {2, 0, 1}}));
  EXPECT_TRUE(reversed.rotated);
  EXPECT_EQ(reversed.components[0].direction, -1);

  auto p = make(6, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 4, 3}, {4, 5, 2}, {5, 0, 3}});
  ASSERT_TRUE(validate_presentation(p).empty());
  auto cert = is_rotated(p);
  EXPECT_FALSE(cert.rotated);
  EXPECT_EQ(cert.components[0].direction, 0);

  EXPECT_THROW(is_rotated(make(2, {{0, 1, 1}, {1, 0, 1}})), Error);
}

TEST(Rotation, HopfComponentsRotateIndependently) {
  auto cert = is_rotated(gen::present(census_diagram("hopf")));
  EXPECT_TRUE(cert.rotated);
  ASSERT_EQ(cert.components.size(), 2u);
  for (const auto& c : cert.components) {
    EXPECT_TRUE(c.rotated);
    EXPECT_EQ(c.arcs.size(), 3u);
  }
}

TEST(Build, StructuralCountsOnCensus) {
  for (const auto& name : gen::hypothesis_census()) {
    LinkDiagram d = census_diagram(name);
    const int n = d.crossing_count();
    for (bool mirror : {false, true}) {
      LinkDiagram input = mirror ? mirror_diagram(d) : d;
      ThreePagePresentation p = gen::present(input);
      EXPECT_EQ(p.m, 3 * n) << name;
      EXPECT_EQ(static_cast<int>(p.arcs.size()), 3 * n) << name;
      EXPECT_EQ(p.page_histogram(), (std::array<int, 3>{n, n, n})) << name;
      EXPECT_EQ(p.count_points(PointKind::Tangency), n) << name;
      EXPECT_EQ(p.count_points(PointKind::Transversal), 2 * n) << name;
      EXPECT_TRUE(validate_presentation(p).empty()) << name;
      EXPECT_TRUE(oracle::presentation_valid(p.m, gen::chords(p))) << name;
      EXPECT_TRUE(is_rotated(p).rotated) << name;
    }
  }
}

TEST(Build, PointKindsJoinTheRightPages) {
  for (const auto& name : gen::hypothesis_census()) {
    ThreePagePresentation p = gen::present(census_diagram(name));
    std::vector<std::set<int>> pages(p.m);
    for (const auto& a : p.arcs) {
      pages[a.a].insert(a.page);
      pages[a.b].insert(a.page);
    }
    for (int i = 0; i < p.m; ++i) {
      if (p.point_kind[i] == PointKind::Tangency) {
        EXPECT_EQ(pages[i], (std::set<int>{1, 2})) << name;
      } else {
        EXPECT_EQ(pages[i].count(3), 1u) << name;
      }
    }
    // Every inside arc has one tangency end and one transversal end.
    for (const auto& a : p.arcs) {
      if (a.page == 3) continue;
      EXPECT_NE(p.point_kind[a.a], p.point_kind[a.b]) << name;
    }
  }
}

TEST(Build, SourceMetadata) {
  LinkDiagram d = census_diagram("trefoil");
  ThreePagePresentation p = gen::present(d);
  std::vector<int> per_crossing(d.crossing_count());
  std::set<int> edges;
  for (std::size_t i = 0; i < p.arcs.size(); ++i) {
    if (p.arcs[i].page == 3) {
      EXPECT_EQ(p.source_crossing[i], -1);
      EXPECT_TRUE(edges.insert(p.source_edge[i]).second);
    } else {
      EXPECT_EQ(p.source_edge[i], -1);
      ++per_crossing.at(p.source_crossing[i]);
    }
  }
  EXPECT_EQ(per_crossing, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(edges.size(), 3u);
}

TEST(Build, SplitDiagramsConcatenate) {
  LinkDiagram d = disjoint_union(census_diagram("hopf"), census_diagram("trefoil"));
  ThreePagePresentation p = gen::present(d);
  EXPECT_EQ(p.m, 15);
  EXPECT_TRUE(validate_presentation(p).empty());
  EXPECT_TRUE(is_rotated(p).rotated);
  LinkDiagram rebuilt = reconstruct_diagram(p);
  EXPECT_TRUE(equivalent_up_to_mirror(normalized_invariant(rebuilt), normalized_invariant(d)));
}

TEST(Build, Refusals) {
  LinkDiagram t = census_diagram("trefoil");
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::EmptyInput;
  };
  // Shading 0 of the trefoil has the odd triangle as its Tait graph.
  Coloring odd = checkerboard_color(t, 0);
  Bipartition bad = bipartition(tait_graph(t, odd));
  ASSERT_FALSE(bad.valid);
  EXPECT_EQ(kind([&] { build_presentation(t, odd, bad); }), ErrorKind::HypothesisViolation);
  LinkDiagram s = switch_crossing(t, 0);
  Coloring c = checkerboard_color(s, 1);
  Bipartition b = bipartition(tait_graph(s, c));
  EXPECT_EQ(kind([&] { build_presentation(s, c, b); }), ErrorKind::NotAlternating);
}

TEST(Reconstruct, CrossingsAreInterleavingInnerPairs) {
  for (const auto& name : gen::hypothesis_census()) {
    LinkDiagram d = census_diagram(name);
    ThreePagePresentation p = gen::present(d);
    LinkDiagram rebuilt = reconstruct_diagram(p);
    EXPECT_EQ(rebuilt.crossing_count(), oracle::inner_crossings(p.m, gen::chords(p))) << name;
    EXPECT_EQ(rebuilt.crossing_count(), d.crossing_count()) << name;
    EXPECT_EQ(rebuilt.component_count(), d.component_count()) << name;
    EXPECT_TRUE(oracle::equal_up_to_mirror(oracle::normalized(gen::pd_of(rebuilt)), oracle::normalized(gen::pd_of(d))))
        << name;
  }
}

TEST(Reconstruct, StandardExamples) {
  for (const std::string name : {"hopf", "trefoil"}) {
    LinkDiagram d = census_diagram(name);
    LinkDiagram rebuilt = reconstruct_diagram(gen::present(d));
    EXPECT_EQ(rebuilt.crossing_count(), d.crossing_count());
    EXPECT_TRUE(equivalent_up_to_mirror(normalized_invariant(rebuilt), normalized_invariant(d))) << name;
  }
}

TEST(Reconstruct, NoInteriorCrossingIsATrivialComponent) {
  try {
    reconstruct_diagram(make(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TrivialComponent);
  }
  EXPECT_THROW(reconstruct_diagram(make(2, {{0, 1, 1}, {1, 0, 1}})), Error);
}

TEST(Reconstruct, UnorientedArcsStillReconstruct) {
  ThreePagePresentation p = gen::present(census_diagram("twist3"));
  for (auto& a : p.arcs)
    if (a.a > a.b) std::swap(a.a, a.b);
  LinkDiagram rebuilt = reconstruct_diagram(p);
  EXPECT_TRUE(equivalent_up_to_mirror(normalized_invariant(rebuilt), normalized_invariant(census_diagram("twist3"))));
}

TEST(PresentationJson, RoundTrip) {
  ThreePagePresentation p = gen::present(census_diagram("pretzel222"));
  p.mirrored = true;
  ThreePagePresentation q = ThreePagePresentation::parse_json(p.to_json());
  EXPECT_EQ(q.m, p.m);
  EXPECT_EQ(q.arcs, p.arcs);
  EXPECT_TRUE(q.mirrored);
  EXPECT_EQ(q.to_json(), p.to_json());
  EXPECT_NE(p.to_json().find("\"rotated\":true"), std::string::npos);
  EXPECT_THROW(ThreePagePresentation::parse_json("{\"arcs\": 3}"), Error);
}
