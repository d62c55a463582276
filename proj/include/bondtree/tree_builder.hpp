#pragma once

#include <span>
#include <vector>

#include "bondtree/bond_source.hpp"
#include "bondtree/tree.hpp"

namespace bondtree {

// Online greedy insertion.
//
// A new protein starts at the root. At each node it is scored against the
// node itself (the baseline) and against every child, in stored child order.
// The first child with the maximum score wins; the protein descends into it
// only if that score strictly beats the baseline, otherwise it attaches as
// the node's last child. The running maximum restarts at every level.

LevelRecord level_select(const ProteinId& current, std::span<const ProteinId> children, const ProteinId& incoming,
                         const BondSource& source);

// Throws DuplicateProtein if `incoming` is already placed and UnknownProtein
// if the source has no bonds for it. An empty tree makes `incoming` the root
// with a one-level trace (nodes_visited == 1).
InsertionTrace insert(ClassificationTree& tree, const ProteinId& incoming, const BondSource& source);

struct BuildResult {
  ClassificationTree tree;
  std::vector<InsertionTrace> traces;
};

BuildResult build(std::span<const ProteinId> order, const BondSource& source);

struct BuildStats {
  std::size_t node_count = 0;
  std::size_t max_depth = 0;
  double mean_branching = 0;  // mean child count over nodes with children
  std::size_t total_visits = 0;
  std::vector<std::size_t> visits;  // per insertion, in build order
  // Insertions into a non-empty tree visit at most as many nodes as the tree
  // held; the root-creating insertion visits exactly one.
  bool worst_case_bound_holds = true;
  // levels == depth of attachment point + 1 for every insertion.
  bool level_bound_holds = true;
};

// Throws MismatchedTrace if the traces do not describe `tree`.
BuildStats stats(const ClassificationTree& tree, std::span<const InsertionTrace> traces);

}  // namespace bondtree
