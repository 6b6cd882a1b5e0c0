#include "tcnet/network.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tcnet::networks {

std::string_view to_string(Role r) {
  switch (r) {
    case Role::root: return "root";
    case Role::tree: return "tree";
    case Role::reticulation: return "reticulation";
    case Role::leaf: return "leaf";
  }
  return "unknown";
}

Role role_from_string(std::string_view s) {
  if (s == "root") return Role::root;
  if (s == "tree") return Role::tree;
  if (s == "reticulation") return Role::reticulation;
  if (s == "leaf") return Role::leaf;
  throw std::invalid_argument("unknown node role '" + std::string(s) + "'");
}

PhyloNetwork::PhyloNetwork(int d, std::vector<Role> roles, std::vector<Edge> edges, std::map<NodeId, int> leaf_labels)
    : d_(d), roles_(std::move(roles)), edges_(std::move(edges)), labels_(std::move(leaf_labels)) {
  if (d_ < 2) throw std::invalid_argument("network multiplicity d must be >= 2");
  const auto n = roles_.size();
  children_.resize(n);
  parents_.resize(n);
  for (const auto& e : edges_) {
    if (e.parent < 0 || e.child < 0 || static_cast<std::size_t>(e.parent) >= n ||
        static_cast<std::size_t>(e.child) >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    children_[static_cast<std::size_t>(e.parent)].push_back(e.child);
    parents_[static_cast<std::size_t>(e.child)].push_back(e.parent);
  }
  for (const auto& [v, lab] : labels_) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("leaf label on unknown node");
    (void)lab;
  }
}

PhyloNetwork PhyloNetwork::single_leaf(int d) {
  return PhyloNetwork(d, {Role::root, Role::leaf}, {{0, 1}}, {{1, 1}});
}

int PhyloNetwork::label(NodeId v) const {
  auto it = labels_.find(v);
  return it == labels_.end() ? 0 : it->second;
}

int PhyloNetwork::count_role(Role r) const {
  return static_cast<int>(std::count(roles_.begin(), roles_.end(), r));
}

NodeId PhyloNetwork::root() const {
  auto it = std::find(roles_.begin(), roles_.end(), Role::root);
  return it == roles_.end() ? -1 : static_cast<NodeId>(it - roles_.begin());
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : checks) {
    if (c.pass) continue;
    if (!first) os << "; ";
    os << c.rule << " (" << c.witness << ")";
    first = false;
  }
  return first ? "ok" : os.str();
}

namespace {

std::string node_witness(NodeId v) { return "node " + std::to_string(v); }
std::string edge_witness(const Edge& e) { return "edge " + std::to_string(e.parent) + "->" + std::to_string(e.child); }

// Reports the first node violating `bad`, or a pass.
template <class Pred>
Check first_node(const PhyloNetwork& net, std::string rule, Pred bad) {
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (bad(v)) return {std::move(rule), false, node_witness(v)};
  }
  return {std::move(rule), true, {}};
}

std::size_t indeg(const PhyloNetwork& net, NodeId v) { return net.parents(v).size(); }
std::size_t outdeg(const PhyloNetwork& net, NodeId v) { return net.children(v).size(); }

void require_valid(const PhyloNetwork& net) {
  auto report = validate(net);
  if (!report.ok()) throw std::invalid_argument("invalid network: " + report.summary());
}

void require_tree_child(const PhyloNetwork& net) {
  if (!is_tree_child(net)) throw std::invalid_argument("network is not tree-child");
}

std::map<NodeId, int> shifted_labels(const PhyloNetwork& net, int label) {
  std::map<NodeId, int> labels;
  for (const auto& [v, lab] : net.leaf_labels()) labels[v] = lab >= label ? lab + 1 : lab;
  return labels;
}

void check_new_label(const PhyloNetwork& net, int label) {
  if (label < 1 || label > net.leaf_count() + 1) {
    throw std::invalid_argument("new leaf label must lie in 1.." + std::to_string(net.leaf_count() + 1));
  }
}

// Removes edge e (which must exist) and returns the remaining edge list.
std::vector<Edge> without_edge(const PhyloNetwork& net, const Edge& e) {
  std::vector<Edge> out;
  out.reserve(net.edges().size() + 8);
  bool removed = false;
  for (const auto& f : net.edges()) {
    if (!removed && f == e) {
      removed = true;
      continue;
    }
    out.push_back(f);
  }
  if (!removed) throw std::invalid_argument(edge_witness(e) + " is not in the network");
  return out;
}

}  // namespace

ValidationReport validate(const PhyloNetwork& net) {
  ValidationReport report;
  const int d = net.d();
  auto& checks = report.checks;

  const int roots = net.count_role(Role::root);
  checks.push_back({"single_root", roots == 1, roots == 1 ? "" : std::to_string(roots) + " roots"});

  checks.push_back(first_node(net, "root_degree", [&](NodeId v) {
    return net.role(v) == Role::root && (indeg(net, v) != 0 || outdeg(net, v) != 1);
  }));
  checks.push_back(first_node(net, "no_in1_out1", [&](NodeId v) { return indeg(net, v) == 1 && outdeg(net, v) == 1; }));
  checks.push_back(first_node(net, "tree_degree", [&](NodeId v) {
    return net.role(v) == Role::tree && (indeg(net, v) != 1 || outdeg(net, v) != 2);
  }));
  checks.push_back(first_node(net, "reticulation_degree", [&](NodeId v) {
    return net.role(v) == Role::reticulation && (indeg(net, v) != static_cast<std::size_t>(d) || outdeg(net, v) != 1);
  }));
  checks.push_back(first_node(net, "leaf_degree", [&](NodeId v) {
    return net.role(v) == Role::leaf && (indeg(net, v) != 1 || outdeg(net, v) != 0);
  }));

  {
    Check simple{"simple", true, {}};
    std::set<Edge> seen;
    for (const auto& e : net.edges()) {
      if (e.parent == e.child || !seen.insert(e).second) {
        simple = {"simple", false, edge_witness(e)};
        break;
      }
    }
    checks.push_back(std::move(simple));
  }

  {
    // Kahn's algorithm; any node left unprocessed lies on or below a cycle.
    std::vector<std::size_t> in(static_cast<std::size_t>(net.node_count()));
    std::vector<NodeId> stack;
    for (NodeId v = 0; v < net.node_count(); ++v) {
      in[static_cast<std::size_t>(v)] = indeg(net, v);
      if (in[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
    }
    int processed = 0;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      ++processed;
      for (NodeId c : net.children(v)) {
        if (--in[static_cast<std::size_t>(c)] == 0) stack.push_back(c);
      }
    }
    Check acyclic{"acyclic", processed == net.node_count(), {}};
    if (!acyclic.pass) {
      for (NodeId v = 0; v < net.node_count(); ++v) {
        if (in[static_cast<std::size_t>(v)] != 0) {
          acyclic.witness = node_witness(v);
          break;
        }
      }
    }
    checks.push_back(std::move(acyclic));
  }

  {
    Check labels{"leaf_labels", true, {}};
    const int n = net.leaf_count();
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (NodeId v = 0; v < net.node_count() && labels.pass; ++v) {
      const int lab = net.label(v);
      if (net.role(v) == Role::leaf) {
        if (lab < 1 || lab > n || used[static_cast<std::size_t>(lab)]) labels = {"leaf_labels", false, node_witness(v)};
        else used[static_cast<std::size_t>(lab)] = true;
      } else if (lab != 0) {
        labels = {"leaf_labels", false, node_witness(v)};
      }
    }
    checks.push_back(std::move(labels));
  }
  return report;
}

bool is_tree_child(const PhyloNetwork& net) {
  require_valid(net);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (net.role(v) == Role::leaf) continue;
    const auto& ch = net.children(v);
    const bool has_non_ret =
        std::any_of(ch.begin(), ch.end(), [&](NodeId c) { return net.role(c) != Role::reticulation; });
    if (!has_non_ret) return false;
  }
  return true;
}

bool is_one_component(const PhyloNetwork& net) {
  require_tree_child(net);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (net.role(v) == Role::reticulation && net.role(net.children(v).front()) != Role::leaf) return false;
  }
  return true;
}

std::vector<Edge> free_edges(const PhyloNetwork& net) {
  require_tree_child(net);
  std::vector<Edge> out;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (net.role(v) != Role::tree) continue;
    const auto& ch = net.children(v);
    if (std::none_of(ch.begin(), ch.end(), [&](NodeId c) { return net.role(c) == Role::reticulation; })) {
      for (NodeId c : ch) out.push_back({v, c});
    }
  }
  return out;
}

std::vector<Edge> candidate_edges(const PhyloNetwork& net) {
  std::vector<Edge> out;
  for (const auto& e : net.edges()) {
    if (net.role(e.parent) != Role::reticulation && net.role(e.child) != Role::reticulation) out.push_back(e);
  }
  return out;
}

PhyloNetwork leaf_insertion(const PhyloNetwork& net, const Edge& e, int label) {
  check_new_label(net, label);
  auto edges = without_edge(net, e);
  auto roles = net.roles();
  const NodeId t = static_cast<NodeId>(roles.size());
  const NodeId leaf = t + 1;
  roles.push_back(Role::tree);
  roles.push_back(Role::leaf);
  edges.push_back({e.parent, t});
  edges.push_back({t, e.child});
  edges.push_back({t, leaf});
  auto labels = shifted_labels(net, label);
  labels[leaf] = label;
  return PhyloNetwork(net.d(), std::move(roles), std::move(edges), std::move(labels));
}

PhyloNetwork reticulate_leaf(const PhyloNetwork& net, const std::vector<Edge>& positions, int label) {
  if (positions.size() != static_cast<std::size_t>(net.d())) {
    throw std::invalid_argument("reticulation insertion needs exactly d positions");
  }
  check_new_label(net, label);
  std::vector<Edge> sorted = positions;
  std::sort(sorted.begin(), sorted.end());

  auto roles = net.roles();
  std::vector<Edge> edges = net.edges();
  const NodeId ret = static_cast<NodeId>(roles.size());
  const NodeId leaf = ret + 1;
  roles.push_back(Role::reticulation);
  roles.push_back(Role::leaf);
  std::vector<Edge> added;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const Edge e = sorted[i];
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) throw std::invalid_argument(edge_witness(e) + " is not in the network");
    edges.erase(it);
    // j - i new tree nodes in series on e, each also feeding the new reticulation.
    NodeId above = e.parent;
    for (std::size_t s = i; s < j; ++s) {
      const NodeId p = static_cast<NodeId>(roles.size());
      roles.push_back(Role::tree);
      added.push_back({above, p});
      added.push_back({p, ret});
      above = p;
    }
    added.push_back({above, e.child});
    i = j;
  }
  edges.insert(edges.end(), added.begin(), added.end());
  edges.push_back({ret, leaf});
  auto labels = shifted_labels(net, label);
  labels[leaf] = label;
  return PhyloNetwork(net.d(), std::move(roles), std::move(edges), std::move(labels));
}

PhyloNetwork otc_insertion(const PhyloNetwork& net, const std::vector<Edge>& positions, int label) {
  if (!is_one_component(net)) throw std::invalid_argument("otc_insertion requires a one-component network");
  const auto cand = candidate_edges(net);
  for (const auto& e : positions) {
    if (std::find(cand.begin(), cand.end(), e) == cand.end()) {
      throw std::invalid_argument(edge_witness(e) + " is not a candidate edge");
    }
  }
  return reticulate_leaf(net, positions, label);
}

PhyloNetwork ret_insertion(const PhyloNetwork& net, const Edge& free_edge) {
  const auto fe = free_edges(net);
  if (std::find(fe.begin(), fe.end(), free_edge) == fe.end()) {
    throw std::invalid_argument(edge_witness(free_edge) + " is not a free edge");
  }
  const NodeId root = net.root();
  const NodeId top = net.children(root).front();

  auto edges = without_edge(net, free_edge);
  edges.erase(std::find(edges.begin(), edges.end(), Edge{root, top}));
  auto roles = net.roles();
  const NodeId ret = static_cast<NodeId>(roles.size());
  roles.push_back(Role::reticulation);
  // The free edge's tail becomes one parent; d-1 new tree nodes on the root edge supply the rest.
  edges.push_back({free_edge.parent, ret});
  edges.push_back({ret, free_edge.child});
  NodeId above = root;
  for (int i = 0; i < net.d() - 1; ++i) {
    const NodeId q = static_cast<NodeId>(roles.size());
    roles.push_back(Role::tree);
    edges.push_back({above, q});
    edges.push_back({q, ret});
    above = q;
  }
  edges.push_back({above, top});
  return PhyloNetwork(net.d(), std::move(roles), std::move(edges), net.leaf_labels());
}

}  // namespace tcnet::networks
