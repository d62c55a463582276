#include <gtest/gtest.h>

#include "bondtree/errors.hpp"
#include "bondtree/paper_dataset.hpp"
#include "bondtree/random.hpp"
#include "bondtree/similarity.hpp"
#include "bondtree/synth.hpp"
#include "support.hpp"

namespace bondtree {
namespace {

using testing::dense;

const ProteinId p1("p1"), p2("p2"), p4("p4"), p5("p5"), p6("p6"), p15("p15");

SimilarityMatrix pair_matrix(double a, double b) {
  return SimilarityMatrix(PropertyKind::Structure, dense(make_ids({"p1", "p2"}), {{100, a}, {b, 100}}));
}

TEST(PropertyProbability, Examples) {
  const auto m = validate(pair_matrix(40, 40)).matrix;
  EXPECT_DOUBLE_EQ(property_probability(m, p1, p2), 0.40);
  EXPECT_EQ(property_probability(m, p1, p1), 1.0);
  const auto zero = validate(pair_matrix(0, 0)).matrix;
  EXPECT_EQ(property_probability(zero, p1, p2), 0.0);
}

TEST(PropertyProbability, UnvalidatedOutOfRangeThrows) {
  EXPECT_THROW(property_probability(pair_matrix(105, 105), p1, p2), UnvalidatedMatrix);
}

TEST(BondFactor, ReferenceAnchors) {
  const auto bundle = paper_dataset();
  const auto& props = *bundle.properties;
  EXPECT_EQ(bond_factor(props, p2, p1), 2.65);
  EXPECT_EQ(bond_factor(props, p6, p6), 6.0);
  const auto bonds = bond_matrix(props);
  EXPECT_EQ(bonds.bond(p4, p1), 4.30);
  EXPECT_EQ(bonds.bond(p5, p2), 5.65);
  EXPECT_EQ(bonds.bond(p15, p6), 5.70);
}

TEST(BondFactor, SixTermsOfReferenceRow) {
  const auto bundle = paper_dataset();
  const auto& props = *bundle.properties;
  EXPECT_EQ(props[PropertyKind::Structure].similarity_of(p2, p1), 40);
  EXPECT_EQ(props[PropertyKind::Sequence].similarity_of(p2, p1), 45);
  EXPECT_EQ(props[PropertyKind::Interactivity].similarity_of(p2, p1), 48);
  EXPECT_EQ(props[PropertyKind::Connectivity].similarity_of(p2, p1), 42);
  EXPECT_EQ(props[PropertyKind::ClusterIndex].similarity_of(p2, p1), 45);
  EXPECT_EQ(props[PropertyKind::TaxonomicAgeDiversity].similarity_of(p2, p1), 45);
}

TEST(BondFactor, AllZeroAndSingleton) {
  const auto zero = testing::uniform_properties(make_ids({"a", "b"}), {{100, 0}, {0, 100}});
  EXPECT_EQ(bond_factor(zero, ProteinId("a"), ProteinId("b")), 0.0);

  const auto one = testing::uniform_properties(make_ids({"a"}), {{100}});
  const auto b = bond_matrix(one);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.grid().at(0, 0), 6.0);
}

TEST(BondFactor, AdditivityOverRandomSets) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto props = random_property_set({.n = 12, .seed = seed});
    const auto ids = props.ids();
    for (const auto& p : ids) {
      for (const auto& q : ids) {
        double sum = 0;
        for (auto kind : kAllPropertyKinds) sum += property_probability(props[kind], p, q);
        const double b = bond_factor(props, p, q);
        EXPECT_NEAR(b, sum, kDecimalEpsilon);
        EXPECT_EQ(b, bond_factor(props, q, p));
        EXPECT_GE(b, 0.0);
        EXPECT_LE(b, kMaxBond);
      }
      EXPECT_EQ(bond_factor(props, p, p), kMaxBond);
    }
  }
}

TEST(Validate, RangeViolation) {
  try {
    validate(pair_matrix(105, 105));
    FAIL() << "expected ValidationFailed";
  } catch (const ValidationFailed& e) {
    ASSERT_FALSE(e.report().ok());
    const auto& issue = e.report().errors.front();
    EXPECT_EQ(issue.rule, "range");
    EXPECT_EQ(issue.value, 105);
    EXPECT_EQ(issue.row_id, "p1");
    EXPECT_EQ(issue.column_id, "p2");
  }
}

TEST(Validate, DiagonalViolation) {
  const SimilarityMatrix m(PropertyKind::Sequence, dense(make_ids({"a", "b"}), {{99, 3}, {3, 100}}));
  const auto report = check(m);
  ASSERT_EQ(report.errors.size(), 1u);
  EXPECT_EQ(report.errors[0].rule, "diagonal");
  EXPECT_EQ(report.errors[0].row, 0u);
}

TEST(Validate, SymmetrizeRepairsToMean) {
  const auto out = validate(pair_matrix(40, 42), {.symmetrize = true, .tolerance = 5});
  EXPECT_EQ(out.matrix.similarity_of(p1, p2), 41.0);
  EXPECT_EQ(out.matrix.similarity_of(p2, p1), 41.0);
  EXPECT_TRUE(out.report.ok());
  ASSERT_EQ(out.report.warnings.size(), 1u);
  EXPECT_EQ(out.report.warnings[0].delta, 2.0);
}

TEST(Validate, AsymmetryBeyondToleranceOrWithoutRepair) {
  EXPECT_THROW(validate(pair_matrix(40, 42)), ValidationFailed);
  const auto report = check(pair_matrix(40, 50), {.symmetrize = true, .tolerance = 5});
  ASSERT_EQ(report.errors.size(), 1u);
  EXPECT_EQ(report.errors[0].rule, "asymmetry");
  EXPECT_EQ(report.errors[0].value, 10.0);
}

TEST(Validate, SymmetricIsUnchanged) {
  const auto in = pair_matrix(40, 40);
  const auto out = validate(in);
  EXPECT_EQ(out.matrix, in);
  EXPECT_TRUE(out.report.errors.empty());
  EXPECT_TRUE(out.report.warnings.empty());
  EXPECT_TRUE(out.matrix.validated());
}

TEST(Validate, BondRules) {
  const auto ids = make_ids({"a", "b"});
  EXPECT_NO_THROW(validate(BondMatrix(dense(ids, {{6, 2.5}, {2.5, 6}}))));
  EXPECT_EQ(check(BondMatrix(dense(ids, {{6, 6.5}, {6.5, 6}}))).errors.size(), 2u);
  EXPECT_EQ(check(BondMatrix(dense(ids, {{5, 1}, {1, 6}}))).errors.at(0).rule, "diagonal");
}

TEST(Reconcile, ReferenceTableWithinTolerance) {
  const auto bundle = paper_dataset();
  const auto report =
      reconcile(*bundle.properties, *bundle.bond, {.tolerance = 0.005, .excluded = bundle.manifest.excluded_cells});
  EXPECT_TRUE(report.within_tolerance());
  EXPECT_LE(report.max_delta, 0.005);
  EXPECT_EQ(report.compared + report.excluded, 15u * 16u / 2u);
  EXPECT_EQ(report.excluded, 2u);
}

TEST(Reconcile, SelfConsistency) {
  const auto props = random_property_set({.n = 10, .seed = 3});
  const auto report = reconcile(props, bond_matrix(props));
  EXPECT_EQ(report.max_delta, 0.0);
  EXPECT_TRUE(report.cells.empty());
}

TEST(Reconcile, SinglePerturbedCell) {
  const auto props = random_property_set({.n = 8, .seed = 9});
  auto reference = bond_matrix(props);
  const std::size_t i = 5, j = 2;
  reference.grid().at(i, j) += 0.1;
  reference.grid().at(j, i) += 0.1;
  const auto report = reconcile(props, reference);
  ASSERT_EQ(report.cells.size(), 1u);
  EXPECT_NEAR(report.cells[0].delta, 0.1, 1e-12);
  EXPECT_EQ(report.cells[0].p.str(), "p6");
  EXPECT_EQ(report.cells[0].q.str(), "p3");
  EXPECT_FALSE(report.within_tolerance());
}

TEST(Reconcile, IdMismatch) {
  const auto a = bond_matrix(random_property_set({.n = 3, .seed = 1}));
  const auto b = bond_matrix(random_property_set({.n = 4, .seed = 1}));
  EXPECT_THROW(reconcile(a, b), IdMismatch);
}

}  // namespace
}  // namespace bondtree
