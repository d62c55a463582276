#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bondtree/bond_source.hpp"
#include "bondtree/tree.hpp"
#include "bondtree/tree_builder.hpp"

namespace bondtree {

// Reference realization of insert(): a plain recursive walk sharing no code
// with the builder. Same contract and errors.
InsertionTrace oracle_insert(ClassificationTree& tree, const ProteinId& incoming, const BondSource& source);

// Folds oracle_insert over `order`.
BuildResult oracle_build(std::span<const ProteinId> order, const BondSource& source);

using InsertFn = std::function<InsertionTrace(ClassificationTree&, const ProteinId&, const BondSource&)>;

struct TraceDivergence {
  std::size_t dataset = 0;
  std::size_t order = 0;
  std::size_t insertion = 0;
  std::optional<std::size_t> level;  // set when the difference is inside a level
  std::string field;
  std::string engine_value;
  std::string oracle_value;
};

// First field where two traces differ, or nullopt if identical.
std::optional<TraceDivergence> compare_traces(const InsertionTrace& engine, const InsertionTrace& oracle);

struct EquivalenceCase {
  std::string dataset_id;
  BondSource source;
  std::vector<std::vector<ProteinId>> orders;
};

struct EquivalenceResult {
  bool passed = true;
  std::size_t builds_compared = 0;
  std::optional<TraceDivergence> first_divergence;
};

// Builds every (case, order) with `engine` and with oracle_insert and stops at
// the first trace divergence. `engine` defaults to the builder's insert.
EquivalenceResult equivalence_check(std::span<const EquivalenceCase> cases, const InsertFn& engine = insert);

struct OrderSensitivityReport {
  std::string dataset_id;
  std::size_t proteins = 0;
  std::size_t permutations_tried = 0;
  std::size_t distinct_tree_count = 0;
  // Mean over all pairs of permutation trees of the number of proteins whose
  // parent differs.
  double mean_parent_disagreement = 0;
  std::uint64_t seed = 0;
};

// Builds under `permutations` seeded shuffles of source.ids(). Trees are
// equal iff every protein has the same parent. Throws InvalidArgument if
// permutations == 0.
OrderSensitivityReport order_sensitivity(const BondSource& source, std::size_t permutations, std::uint64_t seed,
                                         std::string dataset_id = "");

struct ProbePoint {
  std::size_t tree_size = 0;  // nodes before the insertion
  std::size_t visits = 0;
  std::size_t attach_depth = 0;
  bool at_root = false;  // attached directly under the root
  std::size_t root_children = 0;  // root child count before the insertion

  friend bool operator==(const ProbePoint&, const ProbePoint&) = default;
};

struct ComplexityProbeReport {
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 0;
  std::vector<ProbePoint> points;
  double worst_observed = 0;  // max visits / tree_size over non-empty trees
  double best_observed = 0;   // min visits / (attach_depth + 1)
  bool worst_case_bound_holds = true;  // visits <= tree_size (== 1 into an empty tree)
  bool level_bound_holds = true;       // visits >= attach_depth + 1
};

// One point per insertion of a finished build.
std::vector<ProbePoint> probe_points(const BuildResult& result);

// Folds points into the report's summary fields.
void summarize(ComplexityProbeReport& report);

// Random-mode synthetic dataset per size (seed derived from `seed` and the
// size's position), built in id order. Throws InvalidArgument on a zero size.
ComplexityProbeReport complexity_probe(std::span<const std::size_t> sizes, std::uint64_t seed);

}  // namespace bondtree
