#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

/// Leaf-labeled d-combining phylogenetic networks.
namespace tcnet::networks {

enum class Role : std::uint8_t { root, tree, reticulation, leaf };

std::string_view to_string(Role r);
Role role_from_string(std::string_view s);

using NodeId = int;

struct Edge {
  NodeId parent;
  NodeId child;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable DAG with role-typed nodes. Construction only checks that edge
/// endpoints and label keys are in range; structural rules are checked by
/// validate(), so deliberately malformed networks can be represented.
class PhyloNetwork {
 public:
  PhyloNetwork(int d, std::vector<Role> roles, std::vector<Edge> edges, std::map<NodeId, int> leaf_labels);

  /// The network consisting of a root whose only child is leaf 1.
  static PhyloNetwork single_leaf(int d);

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int node_count() const { return static_cast<int>(roles_.size()); }
  [[nodiscard]] Role role(NodeId v) const { return roles_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] const std::vector<Role>& roles() const { return roles_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<NodeId>& children(NodeId v) const { return children_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] const std::vector<NodeId>& parents(NodeId v) const { return parents_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] const std::map<NodeId, int>& leaf_labels() const { return labels_; }
  /// Label of a leaf, 0 for unlabeled nodes.
  [[nodiscard]] int label(NodeId v) const;

  [[nodiscard]] int count_role(Role r) const;
  [[nodiscard]] int leaf_count() const { return count_role(Role::leaf); }
  [[nodiscard]] int reticulation_count() const { return count_role(Role::reticulation); }
  /// First node with role root, or -1.
  [[nodiscard]] NodeId root() const;

 private:
  int d_;
  std::vector<Role> roles_;
  std::vector<Edge> edges_;
  std::map<NodeId, int> labels_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::vector<NodeId>> parents_;
};

struct Check {
  std::string rule;
  bool pass;
  std::string witness;  ///< offending node ("node 4") or edge ("edge 2->5") on failure
};

struct ValidationReport {
  std::vector<Check> checks;
  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::string summary() const;
};

/// Checks the degree conventions (single root with outdegree 1, tree nodes
/// 1-in/2-out, reticulations d-in/1-out, leaves 1-in/0-out), simplicity,
/// acyclicity and the leaf-label bijection onto {1..n}.
ValidationReport validate(const PhyloNetwork& net);

/// Every non-leaf node has a child that is not a reticulation.
/// Throws std::invalid_argument when `net` fails validate().
bool is_tree_child(const PhyloNetwork& net);

/// Tree-child and every reticulation's child is a leaf.
/// Throws std::invalid_argument when `net` is not tree-child.
bool is_one_component(const PhyloNetwork& net);

/// Out-edges of tree nodes whose children are both non-reticulations.
/// A tree-child network with n leaves and k reticulations has 2(n-k-1).
std::vector<Edge> free_edges(const PhyloNetwork& net);

/// Edges not incident to any reticulation node, in edge order.
std::vector<Edge> candidate_edges(const PhyloNetwork& net);

/// Subdivides `e` with a new tree node carrying a new leaf labeled `label`;
/// existing labels >= label shift up by one. Preserves the tree-child property.
PhyloNetwork leaf_insertion(const PhyloNetwork& net, const Edge& e, int label);

/// Places d new tree nodes on the given edges (a multiset: repeated edges get
/// several new nodes in series), joins them to a new reticulation, and hangs
/// a new leaf `label` under it. No class membership checks are made.
PhyloNetwork reticulate_leaf(const PhyloNetwork& net, const std::vector<Edge>& positions, int label);

/// The one-component construction: like reticulate_leaf, but every position
/// must be a candidate edge of the one-component input.
PhyloNetwork otc_insertion(const PhyloNetwork& net, const std::vector<Edge>& positions, int label);

/// Inserts d tree nodes on the root edge and a reticulation on `free_edge`,
/// joining them; adds one reticulation and keeps the leaf set.
PhyloNetwork ret_insertion(const PhyloNetwork& net, const Edge& free_edge);

}  // namespace tcnet::networks
