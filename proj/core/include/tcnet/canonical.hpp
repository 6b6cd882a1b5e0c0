#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tcnet/network.hpp"

namespace tcnet::networks {

/// Byte string identifying a network up to isomorphisms that fix leaf labels
/// and node roles.
struct CanonicalKey {
  std::string bytes;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
  CanonicalKey key;
  /// order[pos] is the node placed at canonical position pos.
  std::vector<NodeId> order;
};

struct CanonicalStats {
  bool used_fallback = false;      ///< refinement left ties and permutations were searched
  std::uint64_t permutations = 0;  ///< numberings examined by the fallback
};

/// Nodes are ranked level by level (height = longest path to a leaf) by
/// (role, label, ranks of children). In leaf-labeled tree-child networks this
/// separates all nodes; any remaining ties are resolved by trying every
/// numbering within tied classes and keeping the smallest encoding.
///
/// Precondition: `net` is acyclic. Throws std::invalid_argument otherwise.
CanonicalForm canonicalize(const PhyloNetwork& net, CanonicalStats* stats = nullptr);

inline CanonicalKey canonical_key(const PhyloNetwork& net) { return canonicalize(net).key; }

/// Copy of `net` renumbered into canonical order with sorted edges.
PhyloNetwork canonical_relabel(const PhyloNetwork& net);

}  // namespace tcnet::networks
