#include <gtest/gtest.h>

#include "bondtree/errors.hpp"
#include "bondtree/paper_dataset.hpp"
#include "bondtree/tree_builder.hpp"
#include "support.hpp"

namespace bondtree {
namespace {

const BondSource& paper() {
  static const BondSource source = paper_dataset().source();
  return source;
}

std::vector<ProteinId> paper_order(std::size_t n = 15) {
  return synthetic_ids(n);
}

TEST(LevelSelect, DescendsIntoBestChild) {
  const auto children = make_ids({"p2", "p4", "p6", "p7"});
  const auto level = level_select(ProteinId("p1"), children, ProteinId("p8"), paper());
  EXPECT_EQ(level.current_bond, 1.88);
  ASSERT_EQ(level.child_scores.size(), 4u);
  const double scores[] = {0.65, 2.88, 0.02, 1.26};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(level.child_scores[i].child, children[i]);
    EXPECT_EQ(level.child_scores[i].score, scores[i]);
  }
  EXPECT_EQ(level.descend_to, ProteinId("p4"));
}

TEST(LevelSelect, AttachesWhenCurrentBeatsChildren) {
  const auto children = make_ids({"p2", "p4"});
  const auto level = level_select(ProteinId("p1"), children, ProteinId("p6"), paper());
  EXPECT_EQ(level.current_bond, 1.33);
  EXPECT_EQ(level.child_scores[0].score, 0.35);
  EXPECT_EQ(level.child_scores[1].score, 1.26);
  EXPECT_TRUE(level.attaches_here());
}

TEST(LevelSelect, NoChildrenAttaches) {
  const auto level = level_select(ProteinId("p1"), {}, ProteinId("p2"), paper());
  EXPECT_TRUE(level.attaches_here());
  EXPECT_TRUE(level.child_scores.empty());
}

TEST(LevelSelect, TieWithCurrentAttaches) {
  const auto src = testing::flat_source(3, 2.0);
  const auto children = make_ids({"p2"});
  EXPECT_TRUE(level_select(ProteinId("p1"), children, ProteinId("p3"), src).attaches_here());
}

TEST(LevelSelect, FirstOfTiedChildrenWins) {
  // p4 scores 3 against both children and 1 against the root.
  const auto src = testing::bond_source(make_ids({"p1", "p2", "p3", "p4"}),
                                        {{6, 0, 0, 1}, {0, 6, 0, 3}, {0, 0, 6, 3}, {1, 3, 3, 6}});
  const auto children = make_ids({"p3", "p2"});
  EXPECT_EQ(level_select(ProteinId("p1"), children, ProteinId("p4"), src).descend_to, ProteinId("p3"));
}

TEST(Insert, EmptyTreeCreatesRoot) {
  ClassificationTree tree;
  const auto trace = insert(tree, ProteinId("p1"), paper());
  EXPECT_EQ(tree.root(), ProteinId("p1"));
  EXPECT_EQ(trace.nodes_visited, 1u);
  EXPECT_TRUE(trace.created_root());
  ASSERT_EQ(trace.levels.size(), 1u);
  EXPECT_TRUE(trace.levels[0].attaches_here());
}

TEST(Insert, SecondProteinJoinsRoot) {
  const auto src = testing::flat_source(2, 0.0);
  ClassificationTree tree;
  insert(tree, ProteinId("p1"), src);
  const auto trace = insert(tree, ProteinId("p2"), src);
  EXPECT_EQ(tree.parent_of(ProteinId("p2")), ProteinId("p1"));
  EXPECT_EQ(trace.nodes_visited, 1u);
}

TEST(Insert, EighthReferenceProteinGoesUnderP4) {
  const auto order = paper_order(7);
  auto result = build(order, paper());
  const auto trace = insert(result.tree, ProteinId("p8"), paper());
  EXPECT_EQ(trace.attached_to, ProteinId("p4"));
  ASSERT_EQ(trace.levels.size(), 2u);
  EXPECT_EQ(trace.levels[0].current, ProteinId("p1"));
  EXPECT_EQ(trace.levels[1].current, ProteinId("p4"));
  EXPECT_TRUE(trace.levels[1].attaches_here());
}

TEST(Insert, Errors) {
  ClassificationTree tree;
  insert(tree, ProteinId("p1"), paper());
  EXPECT_THROW(insert(tree, ProteinId("p1"), paper()), DuplicateProtein);
  EXPECT_THROW(insert(tree, ProteinId("q1"), paper()), UnknownProtein);
}

TEST(Insert, TraceShapeInvariants) {
  const auto result = build(paper_order(), paper());
  for (const auto& trace : result.traces) {
    std::size_t visits = 1;
    for (std::size_t i = 0; i < trace.levels.size(); ++i) {
      visits += trace.levels[i].child_scores.size();
      EXPECT_EQ(trace.levels[i].attaches_here(), i + 1 == trace.levels.size());
    }
    EXPECT_EQ(trace.nodes_visited, visits);
    EXPECT_EQ(trace.levels.back().current, trace.attached_to);
  }
}

TEST(Build, ReferenceGoldenTree) {
  const auto result = build(paper_order(), paper());
  const auto golden = testing::golden_parents();
  ASSERT_EQ(result.tree.node_count(), 15u);
  EXPECT_EQ(result.tree.root(), ProteinId("p1"));
  for (const auto& [child, parent] : golden) {
    EXPECT_EQ(result.tree.parent_of(ProteinId(child)), ProteinId(parent)) << child;
  }
}

TEST(Build, ReferenceVisitCounts) {
  const auto result = build(paper_order(), paper());
  const std::size_t expected[] = {1, 1, 2, 2, 4, 3, 4, 5, 5, 6, 7, 8, 6, 9, 7};
  for (std::size_t i = 0; i < 15; ++i) EXPECT_EQ(result.traces[i].nodes_visited, expected[i]) << i;
}

TEST(Build, ChildrenKeepInsertionOrder) {
  const auto result = build(paper_order(), paper());
  const auto kids = result.tree.children_of(ProteinId("p1"));
  const auto expected = make_ids({"p2", "p4", "p6", "p7", "p9"});
  EXPECT_TRUE(std::equal(kids.begin(), kids.end(), expected.begin(), expected.end()));
}

TEST(Build, SingleAndPair) {
  const auto one = build(paper_order(1), paper());
  EXPECT_EQ(one.tree.node_count(), 1u);
  const auto src = testing::flat_source(2, 0.0);
  const auto ids = synthetic_ids(2);
  EXPECT_EQ(build(ids, src).tree.parent_of(ids[1]), ids[0]);
}

TEST(Stats, ReferenceBuild) {
  const auto result = build(paper_order(), paper());
  const auto s = stats(result.tree, result.traces);
  EXPECT_EQ(s.node_count, 15u);
  EXPECT_EQ(s.max_depth, 3u);
  EXPECT_TRUE(s.worst_case_bound_holds);
  EXPECT_TRUE(s.level_bound_holds);
  for (std::size_t i = 0; i < s.visits.size(); ++i) EXPECT_LE(s.visits[i], std::max<std::size_t>(i, 1));
  // p1:5, p2:2, p4:2, p5:2, p6:2, p9:1
  EXPECT_DOUBLE_EQ(s.mean_branching, 14.0 / 6.0);
}

TEST(Stats, RootWithKChildren) {
  const auto src = testing::star_source(6);
  const auto result = build(synthetic_ids(6), src);
  for (std::size_t i = 1; i < 6; ++i) EXPECT_EQ(result.traces[i].nodes_visited, i);
}

TEST(Stats, MismatchedTraces) {
  const auto result = build(paper_order(), paper());
  auto traces = result.traces;
  traces.pop_back();
  EXPECT_THROW(stats(result.tree, traces), MismatchedTrace);
}

}  // namespace
}  // namespace bondtree
