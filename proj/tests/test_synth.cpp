#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "bondtree/errors.hpp"
#include "bondtree/similarity.hpp"
#include "bondtree/synth.hpp"
#include "bondtree/tree_builder.hpp"

namespace bondtree {
namespace {

TEST(SyntheticIds, Sequential) {
  const auto ids = synthetic_ids(3);
  ASSERT_EQ(ids.size(), 3u);
  EXPECT_EQ(ids[0].str(), "p1");
  EXPECT_EQ(ids[2].str(), "p3");
}

TEST(RandomPropertySet, SingleProtein) {
  const auto props = random_property_set({.n = 1, .seed = 4});
  for (auto kind : kAllPropertyKinds) {
    ASSERT_EQ(props[kind].size(), 1u);
    EXPECT_EQ(props[kind].grid().at(0, 0), 100);
  }
}

TEST(RandomPropertySet, Deterministic) {
  const SynthSpec spec{.n = 20, .seed = 99};
  EXPECT_EQ(random_property_set(spec), random_property_set(spec));
  EXPECT_FALSE(random_property_set(spec) == random_property_set({.n = 20, .seed = 100}));
}

TEST(RandomPropertySet, ValidatesCleanly) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto props = random_property_set({.n = 15, .seed = seed});
    for (const auto& m : props.matrices()) {
      const auto report = check(m);
      EXPECT_TRUE(report.errors.empty());
      EXPECT_TRUE(report.warnings.empty());
    }
    EXPECT_TRUE(props.validated());
  }
}

TEST(RandomPropertySet, Granularity) {
  const auto props = random_property_set({.n = 30, .seed = 1, .granularity = 25});
  for (const auto& m : props.matrices()) {
    for (double v : m.grid().values()) {
      EXPECT_EQ(std::fmod(v, 25.0), 0.0) << v;
    }
  }
}

TEST(RandomPropertySet, WrongModeRejected) {
  EXPECT_THROW(random_property_set({.n = 3, .mode = ScaleFreeMode{}}), InvalidArgument);
  EXPECT_THROW(scale_free_property_set({.n = 3}), InvalidArgument);
}

TEST(ScaleFree, PairIsAdjacent) {
  const auto props = scale_free_property_set({.n = 2, .seed = 3, .mode = ScaleFreeMode{1}});
  EXPECT_EQ(props[PropertyKind::Interactivity].similarity_of(ProteinId("p1"), ProteinId("p2")), 100);
}

TEST(ScaleFree, Deterministic) {
  const SynthSpec spec{.n = 60, .seed = 8, .mode = ScaleFreeMode{2}};
  EXPECT_EQ(scale_free_property_set(spec), scale_free_property_set(spec));
}

TEST(ScaleFree, ValidatesCleanly) {
  const auto props = scale_free_property_set({.n = 80, .seed = 2, .mode = ScaleFreeMode{3}});
  for (const auto& m : props.matrices()) EXPECT_TRUE(check(m).ok());
}

TEST(PreferentialAttachment, SimpleUndirectedGraph) {
  const auto adj = preferential_attachment(200, 3, 17);
  ASSERT_EQ(adj.size(), 200u);
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    EXPECT_TRUE(std::is_sorted(adj[v].begin(), adj[v].end()));
    EXPECT_EQ(std::adjacent_find(adj[v].begin(), adj[v].end()), adj[v].end());
    for (auto u : adj[v]) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(std::binary_search(adj[u].begin(), adj[u].end(), v));
    }
    if (v >= 4) {
      EXPECT_GE(adj[v].size(), 3u);
    }
    degree_sum += adj[v].size();
  }
  // complete seed graph on 4 nodes, then 3 edges per later node
  EXPECT_EQ(degree_sum, 2u * (6 + 3 * 196));
}

// Loose sanity bound on the tail: a heavy-tailed degree sequence has a hub
// far above the median.
TEST(PreferentialAttachment, HeavyTailed) {
  const auto adj = preferential_attachment(1000, 2, 42);
  std::vector<std::size_t> degrees;
  for (const auto& a : adj) degrees.push_back(a.size());
  std::sort(degrees.begin(), degrees.end());
  const double median = (degrees[499] + degrees[500]) / 2.0;
  EXPECT_GE(static_cast<double>(degrees.back()), 5 * median);
}

TEST(Coverage, FullBuildsCoverEveryProtein) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto props = generate({.n = 40, .seed = seed, .mode = ScaleFreeMode{2}});
    const auto ids = synthetic_ids(40);
    const auto result = build(ids, BondSource::from_properties(props));
    const auto coverage = coverage_check(result.tree, ids);
    EXPECT_TRUE(coverage.passed);
    EXPECT_TRUE(coverage.missing.empty());
  }
}

TEST(Coverage, ReportsMissingId) {
  ClassificationTree tree;
  tree.set_root(ProteinId("p1"));
  tree.attach(ProteinId("p3"), ProteinId("p1"));
  const auto result = coverage_check(tree, synthetic_ids(3));
  EXPECT_FALSE(result.passed);
  ASSERT_EQ(result.missing.size(), 1u);
  EXPECT_EQ(result.missing[0].str(), "p2");
}

TEST(Coverage, EmptyExpectation) {
  EXPECT_TRUE(coverage_check(ClassificationTree{}, {}).passed);
}

}  // namespace
}  // namespace bondtree
