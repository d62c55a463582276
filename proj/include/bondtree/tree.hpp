#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "bondtree/core.hpp"

namespace bondtree {

// Rooted tree, one node per inserted protein. Children keep insertion order.
class ClassificationTree {
 public:
  bool empty() const noexcept { return !root_.has_value(); }
  std::size_t node_count() const noexcept { return order_.size(); }
  const std::optional<ProteinId>& root() const noexcept { return root_; }
  bool contains(const ProteinId& id) const { return nodes_.contains(id); }

  // nullopt means "is root". Throws UnknownProtein.
  std::optional<ProteinId> parent_of(const ProteinId& id) const;
  std::span<const ProteinId> children_of(const ProteinId& id) const;
  std::size_t depth_of(const ProteinId& id) const;

  // Every node, in the order it was added.
  std::span<const ProteinId> insertion_order() const noexcept { return order_; }

  // Throws InvalidArgument if a root already exists.
  void set_root(ProteinId id);
  // Appends `child` as the last child of `parent`. Throws DuplicateProtein or
  // UnknownProtein.
  void attach(ProteinId child, const ProteinId& parent);

  // Same nodes, same parents, same child order.
  friend bool operator==(const ClassificationTree& a, const ClassificationTree& b);

 private:
  struct Node {
    std::optional<ProteinId> parent;
    std::vector<ProteinId> children;
    std::size_t depth = 0;
  };

  const Node& node(const ProteinId& id) const;

  std::optional<ProteinId> root_;
  std::unordered_map<ProteinId, Node> nodes_;
  std::vector<ProteinId> order_;
};

// Parent-assignment equality: both trees hold the same ids and every id has
// the same parent. Sibling order is ignored.
bool same_parents(const ClassificationTree& a, const ClassificationTree& b);

// Number of proteins present in both trees whose parents differ (a protein
// missing from either side counts as differing).
std::size_t parent_disagreement(const ClassificationTree& a, const ClassificationTree& b);

struct ChildScore {
  ProteinId child;
  double score = 0;

  friend bool operator==(const ChildScore&, const ChildScore&) = default;
};

// One level of the descent: the incoming protein is scored against `current`
// and each of its children.
struct LevelRecord {
  ProteinId current;
  double current_bond = 0;
  std::vector<ChildScore> child_scores;
  std::optional<ProteinId> descend_to;  // nullopt: attach here

  bool attaches_here() const noexcept { return !descend_to.has_value(); }
  friend bool operator==(const LevelRecord&, const LevelRecord&) = default;
};

struct InsertionTrace {
  ProteinId inserted;
  std::vector<LevelRecord> levels;
  ProteinId attached_to;  // equals `inserted` when it became the root
  std::size_t nodes_visited = 0;

  bool created_root() const { return attached_to == inserted; }
  friend bool operator==(const InsertionTrace&, const InsertionTrace&) = default;
};

}  // namespace bondtree
