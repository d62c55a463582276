#include "bondtree/tree_builder.hpp"

#include <algorithm>
#include <unordered_set>

#include "bondtree/errors.hpp"

namespace bondtree {

LevelRecord level_select(const ProteinId& current, std::span<const ProteinId> children, const ProteinId& incoming,
                         const BondSource& source) {
  LevelRecord level{current, source.bond(current, incoming), {}, std::nullopt};
  level.child_scores.reserve(children.size());

  const ProteinId* best = nullptr;
  double best_score = 0;
  for (const auto& child : children) {
    const double score = source.bond(child, incoming);
    level.child_scores.push_back({child, score});
    if (best == nullptr || score > best_score + kDecimalEpsilon) {
      best = &child;
      best_score = score;
    }
  }
  if (best != nullptr && best_score > level.current_bond + kDecimalEpsilon) level.descend_to = *best;
  return level;
}

InsertionTrace insert(ClassificationTree& tree, const ProteinId& incoming, const BondSource& source) {
  if (tree.contains(incoming)) throw DuplicateProtein(incoming.str());
  if (!source.contains(incoming)) throw UnknownProtein(incoming.str());

  InsertionTrace trace{incoming, {}, incoming, 1};
  if (tree.empty()) {
    trace.levels.push_back({incoming, source.bond(incoming, incoming), {}, std::nullopt});
    tree.set_root(incoming);
    return trace;
  }

  ProteinId current = *tree.root();
  while (true) {
    LevelRecord level = level_select(current, tree.children_of(current), incoming, source);
    trace.nodes_visited += level.child_scores.size();
    const bool attach = level.attaches_here();
    if (!attach) current = *level.descend_to;
    trace.levels.push_back(std::move(level));
    if (attach) break;
  }
  trace.attached_to = current;
  tree.attach(incoming, current);
  return trace;
}

BuildResult build(std::span<const ProteinId> order, const BondSource& source) {
  BuildResult result;
  result.traces.reserve(order.size());
  for (const auto& id : order) result.traces.push_back(insert(result.tree, id, source));
  return result;
}

BuildStats stats(const ClassificationTree& tree, std::span<const InsertionTrace> traces) {
  if (traces.size() != tree.node_count()) {
    throw MismatchedTrace(std::to_string(traces.size()) + " traces for a tree of " +
                          std::to_string(tree.node_count()) + " nodes");
  }

  BuildStats s;
  s.node_count = tree.node_count();
  std::unordered_set<ProteinId> seen;
  for (std::size_t k = 0; k < traces.size(); ++k) {
    const auto& t = traces[k];
    if (!tree.contains(t.inserted) || !seen.insert(t.inserted).second) {
      throw MismatchedTrace("trace " + std::to_string(k) + " inserts '" + t.inserted.str() +
                            "', which is not a distinct node of the tree");
    }
    const auto parent = tree.parent_of(t.inserted);
    const bool placed_as_root = !parent.has_value();
    if (placed_as_root != t.created_root() || (parent && *parent != t.attached_to)) {
      throw MismatchedTrace("trace " + std::to_string(k) + " attaches '" + t.inserted.str() + "' to '" +
                            t.attached_to.str() + "', tree disagrees");
    }

    s.visits.push_back(t.nodes_visited);
    s.total_visits += t.nodes_visited;
    const std::size_t size_before = k;
    if (size_before == 0 ? t.nodes_visited != 1 : t.nodes_visited > size_before) s.worst_case_bound_holds = false;
    const std::size_t attach_depth = t.created_root() ? 0 : tree.depth_of(t.attached_to);
    if (t.levels.size() != attach_depth + 1) s.level_bound_holds = false;
  }

  std::size_t internal = 0;
  std::size_t edges = 0;
  for (const auto& id : tree.insertion_order()) {
    s.max_depth = std::max(s.max_depth, tree.depth_of(id));
    const auto kids = tree.children_of(id).size();
    if (kids > 0) {
      ++internal;
      edges += kids;
    }
  }
  s.mean_branching = internal == 0 ? 0.0 : static_cast<double>(edges) / static_cast<double>(internal);
  return s;
}

}  // namespace bondtree
