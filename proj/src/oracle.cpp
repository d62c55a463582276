#include "bondtree/oracle.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "bondtree/errors.hpp"
#include "bondtree/random.hpp"
#include "bondtree/similarity.hpp"
#include "bondtree/synth.hpp"

namespace bondtree {
namespace {

// Scores one level, records it, and recurses into the winning child.
// Returns the node the incoming protein attaches under.
ProteinId walk(const ClassificationTree& tree, const ProteinId& node, const ProteinId& incoming,
               const BondSource& source, InsertionTrace& trace) {
  LevelRecord record{node, source.bond(node, incoming), {}, std::nullopt};
  for (const auto& child : tree.children_of(node)) record.child_scores.push_back({child, source.bond(child, incoming)});
  trace.nodes_visited += record.child_scores.size();

  std::optional<std::size_t> winner;
  for (std::size_t k = 0; k < record.child_scores.size(); ++k) {
    if (!winner || record.child_scores[k].score - record.child_scores[*winner].score > kDecimalEpsilon) winner = k;
  }

  if (!winner || record.child_scores[*winner].score - record.current_bond <= kDecimalEpsilon) {
    trace.levels.push_back(std::move(record));
    return node;
  }
  ProteinId next = record.child_scores[*winner].child;
  record.descend_to = next;
  trace.levels.push_back(std::move(record));
  return walk(tree, next, incoming, source, trace);
}

std::string show(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

std::string show(const std::optional<ProteinId>& id) { return id ? id->str() : "(attach)"; }

}  // namespace

InsertionTrace oracle_insert(ClassificationTree& tree, const ProteinId& incoming, const BondSource& source) {
  if (tree.contains(incoming)) throw DuplicateProtein(incoming.str());
  if (!source.contains(incoming)) throw UnknownProtein(incoming.str());

  InsertionTrace trace{incoming, {}, incoming, 1};
  if (!tree.root()) {
    trace.levels.push_back({incoming, source.bond(incoming, incoming), {}, std::nullopt});
    tree.set_root(incoming);
    return trace;
  }
  trace.attached_to = walk(tree, *tree.root(), incoming, source, trace);
  tree.attach(incoming, trace.attached_to);
  return trace;
}

BuildResult oracle_build(std::span<const ProteinId> order, const BondSource& source) {
  BuildResult result;
  for (const auto& id : order) result.traces.push_back(oracle_insert(result.tree, id, source));
  return result;
}

std::optional<TraceDivergence> compare_traces(const InsertionTrace& engine, const InsertionTrace& oracle) {
  auto diverge = [](std::optional<std::size_t> level, std::string field, std::string a, std::string b) {
    TraceDivergence d;
    d.level = level;
    d.field = std::move(field);
    d.engine_value = std::move(a);
    d.oracle_value = std::move(b);
    return d;
  };

  if (engine.inserted != oracle.inserted) return diverge({}, "inserted", engine.inserted.str(), oracle.inserted.str());
  const std::size_t shared = std::min(engine.levels.size(), oracle.levels.size());
  for (std::size_t l = 0; l < shared; ++l) {
    const auto& a = engine.levels[l];
    const auto& b = oracle.levels[l];
    if (a.current != b.current) return diverge(l, "current", a.current.str(), b.current.str());
    if (a.current_bond != b.current_bond) return diverge(l, "current_bond", show(a.current_bond), show(b.current_bond));
    if (a.child_scores.size() != b.child_scores.size()) {
      return diverge(l, "child_scores.size", std::to_string(a.child_scores.size()),
                     std::to_string(b.child_scores.size()));
    }
    for (std::size_t c = 0; c < a.child_scores.size(); ++c) {
      if (a.child_scores[c].child != b.child_scores[c].child) {
        return diverge(l, "child_scores[" + std::to_string(c) + "].child", a.child_scores[c].child.str(),
                       b.child_scores[c].child.str());
      }
      if (a.child_scores[c].score != b.child_scores[c].score) {
        return diverge(l, "child_scores[" + std::to_string(c) + "].score", show(a.child_scores[c].score),
                       show(b.child_scores[c].score));
      }
    }
    if (a.descend_to != b.descend_to) return diverge(l, "decision", show(a.descend_to), show(b.descend_to));
  }
  if (engine.levels.size() != oracle.levels.size()) {
    return diverge({}, "levels.size", std::to_string(engine.levels.size()), std::to_string(oracle.levels.size()));
  }
  if (engine.attached_to != oracle.attached_to) {
    return diverge({}, "attached_to", engine.attached_to.str(), oracle.attached_to.str());
  }
  if (engine.nodes_visited != oracle.nodes_visited) {
    return diverge({}, "nodes_visited", std::to_string(engine.nodes_visited), std::to_string(oracle.nodes_visited));
  }
  return std::nullopt;
}

EquivalenceResult equivalence_check(std::span<const EquivalenceCase> cases, const InsertFn& engine) {
  EquivalenceResult result;
  for (std::size_t d = 0; d < cases.size(); ++d) {
    const auto& c = cases[d];
    for (std::size_t o = 0; o < c.orders.size(); ++o) {
      ClassificationTree engine_tree;
      ClassificationTree oracle_tree;
      for (std::size_t k = 0; k < c.orders[o].size(); ++k) {
        const auto& id = c.orders[o][k];
        const auto a = engine(engine_tree, id, c.source);
        const auto b = oracle_insert(oracle_tree, id, c.source);
        if (auto div = compare_traces(a, b)) {
          div->dataset = d;
          div->order = o;
          div->insertion = k;
          result.passed = false;
          result.first_divergence = std::move(div);
          return result;
        }
      }
      ++result.builds_compared;
    }
  }
  return result;
}

OrderSensitivityReport order_sensitivity(const BondSource& source, std::size_t permutations, std::uint64_t seed,
                                         std::string dataset_id) {
  if (permutations == 0) throw InvalidArgument("order_sensitivity needs at least one permutation");

  const auto ids = source.ids();
  Rng rng(seed);
  std::vector<ClassificationTree> trees;
  trees.reserve(permutations);
  std::vector<ProteinId> order(ids.begin(), ids.end());
  for (std::size_t p = 0; p < permutations; ++p) {
    order.assign(ids.begin(), ids.end());
    rng.shuffle(std::span<ProteinId>(order));
    trees.push_back(build(order, source).tree);
  }

  OrderSensitivityReport report;
  report.dataset_id = std::move(dataset_id);
  report.proteins = ids.size();
  report.permutations_tried = permutations;
  report.seed = seed;

  std::vector<std::size_t> representatives;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const bool seen = std::any_of(representatives.begin(), representatives.end(),
                                  [&](std::size_t r) { return same_parents(trees[r], trees[i]); });
    if (!seen) representatives.push_back(i);
  }
  report.distinct_tree_count = representatives.size();

  std::size_t pairs = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      total += parent_disagreement(trees[i], trees[j]);
      ++pairs;
    }
  }
  report.mean_parent_disagreement = pairs == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(pairs);
  return report;
}

std::vector<ProbePoint> probe_points(const BuildResult& result) {
  std::vector<ProbePoint> points;
  points.reserve(result.traces.size());
  for (std::size_t k = 0; k < result.traces.size(); ++k) {
    const auto& t = result.traces[k];
    ProbePoint p;
    p.tree_size = k;
    p.visits = t.nodes_visited;
    if (!t.created_root()) {
      p.attach_depth = result.tree.depth_of(t.attached_to);
      p.at_root = p.attach_depth == 0;
      p.root_children = t.levels.front().child_scores.size();
    }
    points.push_back(p);
  }
  return points;
}

void summarize(ComplexityProbeReport& report) {
  report.worst_observed = 0;
  report.best_observed = report.points.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  report.worst_case_bound_holds = true;
  report.level_bound_holds = true;
  for (const auto& p : report.points) {
    if (p.tree_size == 0) {
      if (p.visits != 1) report.worst_case_bound_holds = false;
    } else {
      if (p.visits > p.tree_size) report.worst_case_bound_holds = false;
      report.worst_observed =
          std::max(report.worst_observed, static_cast<double>(p.visits) / static_cast<double>(p.tree_size));
    }
    if (p.visits < p.attach_depth + 1) report.level_bound_holds = false;
    report.best_observed =
        std::min(report.best_observed, static_cast<double>(p.visits) / static_cast<double>(p.attach_depth + 1));
  }
}

ComplexityProbeReport complexity_probe(std::span<const std::size_t> sizes, std::uint64_t seed) {
  ComplexityProbeReport report;
  report.sizes.assign(sizes.begin(), sizes.end());
  report.seed = seed;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw InvalidArgument("complexity_probe sizes must be >= 1");
    SynthSpec spec;
    spec.n = sizes[i];
    spec.seed = derive_seed(seed, i);
    const auto source = BondSource::from_properties(random_property_set(spec));
    const auto ids = source.ids();
    const auto result = build(std::vector<ProteinId>(ids.begin(), ids.end()), source);
    const auto points = probe_points(result);
    report.points.insert(report.points.end(), points.begin(), points.end());
  }
  summarize(report);
  return report;
}

}  // namespace bondtree
