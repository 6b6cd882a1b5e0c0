#include "tcnet/network_io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tcnet/canonical.hpp"

namespace tcnet::networks {

namespace {

std::string to_json(const PhyloNetwork& net) {
  nlohmann::ordered_json j;
  j["d"] = net.d();
  j["n"] = net.leaf_count();
  j["k"] = net.reticulation_count();
  auto nodes = nlohmann::ordered_json::array();
  for (NodeId v = 0; v < net.node_count(); ++v) {
    nlohmann::ordered_json node;
    node["id"] = v;
    node["role"] = std::string(to_string(net.role(v)));
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : net.edges()) edges.push_back({e.parent, e.child});
  j["edges"] = std::move(edges);
  auto labels = nlohmann::ordered_json::object();
  for (const auto& [v, lab] : net.leaf_labels()) labels[std::to_string(v)] = lab;
  j["leaf_labels"] = std::move(labels);
  return j.dump();
}

std::string to_dot(const PhyloNetwork& net) {
  std::ostringstream os;
  os << "digraph network {\n";
  for (NodeId v = 0; v < net.node_count(); ++v) {
    os << "  n" << v << " [";
    switch (net.role(v)) {
      case Role::root: os << "shape=point,label=\"\""; break;
      case Role::tree: os << "shape=circle,label=\"\""; break;
      case Role::reticulation: os << "shape=box,label=\"\""; break;
      case Role::leaf: os << "shape=plaintext,label=\"" << net.label(v) << "\""; break;
    }
    os << "];\n";
  }
  for (const auto& e : net.edges()) os << "  n" << e.parent << " -> n" << e.child << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_network(const PhyloNetwork& net, ExportFormat format) {
  const auto canon = canonical_relabel(net);
  return format == ExportFormat::json ? to_json(canon) : to_dot(canon);
}

PhyloNetwork import_network_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  const int d = j.at("d").get<int>();
  const auto& nodes = j.at("nodes");
  std::vector<Role> roles(nodes.size(), Role::tree);
  std::vector<bool> seen(nodes.size(), false);
  for (const auto& node : nodes) {
    const auto id = node.at("id").get<std::size_t>();
    if (id >= roles.size() || seen[id]) throw std::invalid_argument("node ids must be 0..N-1 without repeats");
    seen[id] = true;
    roles[id] = role_from_string(node.at("role").get<std::string>());
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<NodeId>(), e.at(1).get<NodeId>()});
  std::map<NodeId, int> labels;
  for (const auto& [key, value] : j.at("leaf_labels").items()) labels[std::stoi(key)] = value.get<int>();
  return PhyloNetwork(d, std::move(roles), std::move(edges), std::move(labels));
}

}  // namespace tcnet::networks
