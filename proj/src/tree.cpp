#include "bondtree/tree.hpp"

#include "bondtree/errors.hpp"

namespace bondtree {

const ClassificationTree::Node& ClassificationTree::node(const ProteinId& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw UnknownProtein(id.str());
  return it->second;
}

std::optional<ProteinId> ClassificationTree::parent_of(const ProteinId& id) const { return node(id).parent; }

std::span<const ProteinId> ClassificationTree::children_of(const ProteinId& id) const { return node(id).children; }

std::size_t ClassificationTree::depth_of(const ProteinId& id) const { return node(id).depth; }

void ClassificationTree::set_root(ProteinId id) {
  if (root_) throw InvalidArgument("tree already has root '" + root_->str() + "'");
  nodes_.emplace(id, Node{});
  order_.push_back(id);
  root_ = std::move(id);
}

void ClassificationTree::attach(ProteinId child, const ProteinId& parent) {
  if (nodes_.contains(child)) throw DuplicateProtein(child.str());
  auto it = nodes_.find(parent);
  if (it == nodes_.end()) throw UnknownProtein(parent.str());
  it->second.children.push_back(child);
  const std::size_t depth = it->second.depth + 1;
  order_.push_back(child);
  nodes_.emplace(std::move(child), Node{parent, {}, depth});
}

bool operator==(const ClassificationTree& a, const ClassificationTree& b) {
  if (a.root_ != b.root_ || a.nodes_.size() != b.nodes_.size()) return false;
  for (const auto& [id, node] : a.nodes_) {
    auto it = b.nodes_.find(id);
    if (it == b.nodes_.end() || it->second.parent != node.parent || it->second.children != node.children) {
      return false;
    }
  }
  return true;
}

bool same_parents(const ClassificationTree& a, const ClassificationTree& b) {
  if (a.node_count() != b.node_count()) return false;
  return parent_disagreement(a, b) == 0;
}

std::size_t parent_disagreement(const ClassificationTree& a, const ClassificationTree& b) {
  std::size_t differing = 0;
  for (const auto& id : a.insertion_order()) {
    if (!b.contains(id) || a.parent_of(id) != b.parent_of(id)) ++differing;
  }
  for (const auto& id : b.insertion_order()) {
    if (!a.contains(id)) ++differing;
  }
  return differing;
}

}  // namespace bondtree
