#pragma once

#include <string>
#include <string_view>

#include "tcnet/network.hpp"

namespace tcnet::networks {

enum class ExportFormat { json, dot };

/// Deterministic serialization. Nodes are renumbered into canonical order
/// first, so isomorphic networks serialize to identical bytes.
///
/// JSON: {"d":3,"n":4,"k":2,"nodes":[{"id":0,"role":"root"},...],
///        "edges":[[0,1],...],"leaf_labels":{"7":1,"8":2}}
/// DOT: reticulations are boxes, tree nodes circles, leaves plaintext.
std::string export_network(const PhyloNetwork& net, ExportFormat format);

/// Inverse of the JSON export (node ids are taken as given).
PhyloNetwork import_network_json(std::string_view text);

}  // namespace tcnet::networks
