#include "bondtree/synth.hpp"

#include <algorithm>
#include <cmath>

#include "bondtree/errors.hpp"
#include "bondtree/random.hpp"
#include "bondtree/similarity.hpp"

namespace bondtree {
namespace {

void check_spec(const SynthSpec& spec) {
  if (spec.n < 1) throw InvalidArgument("synthetic dataset needs n >= 1");
  if (!(spec.granularity > 0.0) || spec.granularity > kFullSimilarity) {
    throw InvalidArgument("granularity must be in (0, 100]");
  }
}

SimilarityMatrix random_matrix(PropertyKind kind, const std::vector<ProteinId>& ids, double granularity, Rng& rng) {
  const std::size_t n = ids.size();
  const auto steps = static_cast<std::uint64_t>(std::floor(kFullSimilarity / granularity + kDecimalEpsilon)) + 1;
  LabeledMatrix grid = LabeledMatrix::filled(ids, 0.0, kFullSimilarity);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::min(kFullSimilarity, static_cast<double>(rng.below(steps)) * granularity);
      grid.at(i, j) = v;
      grid.at(j, i) = v;
    }
  }
  return SimilarityMatrix(kind, std::move(grid));
}

// Normalizes `scores` (symmetric, upper triangle filled) into a percentage
// matrix with diagonal 100.
SimilarityMatrix normalized_matrix(PropertyKind kind, const std::vector<ProteinId>& ids,
                                   const std::vector<std::size_t>& scores) {
  const std::size_t n = ids.size();
  std::size_t max_score = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) max_score = std::max(max_score, scores[i * n + j]);
  }
  const double denom = max_score == 0 ? 1.0 : static_cast<double>(max_score);
  LabeledMatrix grid = LabeledMatrix::filled(ids, 0.0, kFullSimilarity);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = kFullSimilarity * static_cast<double>(scores[i * n + j]) / denom;
      grid.at(i, j) = v;
      grid.at(j, i) = v;
    }
  }
  return SimilarityMatrix(kind, std::move(grid));
}


// Generated grids satisfy every rule by construction; validating marks them.
PropertySet validated_set(std::array<SimilarityMatrix, kPropertyCount> matrices) {
  for (auto& m : matrices) m = validate(m).matrix;
  return PropertySet(std::move(matrices));
}

}  // namespace

std::vector<ProteinId> synthetic_ids(std::size_t n) {
  std::vector<ProteinId> ids;
  ids.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) ids.emplace_back("p" + std::to_string(i));
  return ids;
}

PropertySet random_property_set(const SynthSpec& spec) {
  if (!std::holds_alternative<RandomMode>(spec.mode)) throw InvalidArgument("random_property_set needs random mode");
  check_spec(spec);
  const auto ids = synthetic_ids(spec.n);
  Rng rng(spec.seed);
  std::array<SimilarityMatrix, kPropertyCount> matrices;
  for (auto kind : kAllPropertyKinds) matrices[index_of(kind)] = random_matrix(kind, ids, spec.granularity, rng);
  return validated_set(std::move(matrices));
}

std::vector<std::vector<std::size_t>> preferential_attachment(std::size_t n, std::size_t edges, std::uint64_t seed) {
  if (edges < 1) throw InvalidArgument("preferential attachment needs at least one edge per node");
  std::vector<std::vector<std::size_t>> adjacency(n);
  // Every edge endpoint, so a uniform pick is a degree-proportional pick.
  std::vector<std::size_t> endpoints;

  const std::size_t core = std::min(n, edges + 1);
  for (std::size_t i = 0; i < core; ++i) {
    for (std::size_t j = i + 1; j < core; ++j) {
      adjacency[i].push_back(j);
      adjacency[j].push_back(i);
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  }

  Rng rng(seed);
  std::vector<std::size_t> targets;
  for (std::size_t v = core; v < n; ++v) {
    targets.clear();
    while (targets.size() < edges) {
      const std::size_t t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (auto t : targets) {
      adjacency[v].push_back(t);
      adjacency[t].push_back(v);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
  return adjacency;
}

PropertySet scale_free_property_set(const SynthSpec& spec) {
  const auto* mode = std::get_if<ScaleFreeMode>(&spec.mode);
  if (mode == nullptr) throw InvalidArgument("scale_free_property_set needs scale-free mode");
  if (mode->attach_edges < 1) throw InvalidArgument("scale-free mode needs attach_edges >= 1");
  check_spec(spec);

  const std::size_t n = spec.n;
  const auto ids = synthetic_ids(n);
  const auto graph = preferential_attachment(n, mode->attach_edges, derive_seed(spec.seed, 0));

  std::vector<std::size_t> adjacent(n * n, 0);
  std::vector<std::size_t> linked(n * n, 0);  // shared neighbours + adjacency
  for (std::size_t p = 0; p < n; ++p) {
    for (auto q : graph[p]) {
      adjacent[p * n + q] = 1;
      if (p < q) ++linked[p * n + q];
    }
  }
  for (const auto& neighbours : graph) {
    for (std::size_t a = 0; a < neighbours.size(); ++a) {
      for (std::size_t b = a + 1; b < neighbours.size(); ++b) ++linked[neighbours[a] * n + neighbours[b]];
    }
  }

  Rng rng(derive_seed(spec.seed, 1));
  std::array<SimilarityMatrix, kPropertyCount> matrices;
  for (auto kind : kAllPropertyKinds) {
    switch (kind) {
      case PropertyKind::Connectivity: matrices[index_of(kind)] = normalized_matrix(kind, ids, linked); break;
      case PropertyKind::Interactivity: matrices[index_of(kind)] = normalized_matrix(kind, ids, adjacent); break;
      default: matrices[index_of(kind)] = random_matrix(kind, ids, spec.granularity, rng); break;
    }
  }
  return validated_set(std::move(matrices));
}

PropertySet generate(const SynthSpec& spec) {
  return std::holds_alternative<RandomMode>(spec.mode) ? random_property_set(spec) : scale_free_property_set(spec);
}

CoverageResult coverage_check(const ClassificationTree& tree, std::span<const ProteinId> expected) {
  CoverageResult result;
  for (const auto& id : expected) {
    if (!tree.contains(id)) result.missing.push_back(id);
  }
  result.passed = result.missing.empty();
  return result;
}

}  // namespace bondtree
