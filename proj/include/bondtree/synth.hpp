#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "bondtree/core.hpp"
#include "bondtree/tree.hpp"

namespace bondtree {

struct RandomMode {};

struct ScaleFreeMode {
  std::size_t attach_edges = 2;
};

struct SynthSpec {
  std::size_t n = 15;
  std::uint64_t seed = 0;
  std::variant<RandomMode, ScaleFreeMode> mode = RandomMode{};
  double granularity = 1.0;  // step between generated percentages
};

// "p1" … "pn".
std::vector<ProteinId> synthetic_ids(std::size_t n);

// Six independent symmetric matrices, diagonal 100, off-diagonal values
// uniform over {0, g, 2g, …} ∩ [0, 100]. Throws InvalidArgument unless the
// spec is in random mode.
PropertySet random_property_set(const SynthSpec& spec);

// Undirected preferential-attachment graph: a complete seed graph on
// min(n, edges + 1) nodes, then each new node links to `edges` distinct
// existing nodes picked proportionally to degree. Sorted adjacency lists.
std::vector<std::vector<std::size_t>> preferential_attachment(std::size_t n, std::size_t edges, std::uint64_t seed);

// Connectivity and interactivity derive from a preferential-attachment graph:
//   connectivity(p, q)  = 100 * (shared(p, q) + adj(p, q)) / max over pairs
//   interactivity(p, q) = 100 * adj(p, q) / max over pairs
// (max taken as 1 when zero). The other four matrices are as in random mode.
// Throws InvalidArgument unless the spec is in scale-free mode.
PropertySet scale_free_property_set(const SynthSpec& spec);

// Dispatches on spec.mode.
PropertySet generate(const SynthSpec& spec);

struct CoverageResult {
  bool passed = true;
  std::vector<ProteinId> missing;  // in expected order
};

CoverageResult coverage_check(const ClassificationTree& tree, std::span<const ProteinId> expected);

}  // namespace bondtree
