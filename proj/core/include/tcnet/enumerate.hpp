#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tcnet/canonical.hpp"
#include "tcnet/network.hpp"

namespace tcnet::networks {

struct EnumerationBudget {
  /// Candidate networks built (before deduplication) across all levels.
  std::uint64_t max_candidates = 100'000'000;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// All phylogenetic trees on n labeled leaves (root edge included), sorted by
/// canonical key. There are (2n-3)!! of them.
std::vector<PhyloNetwork> phylogenetic_trees(int d, int n, const EnumerationBudget& budget = {});

/// One-component tree-child networks with n leaves and k reticulations: trees
/// on n-k leaves, then k rounds of otc_insertion over every multiset of d
/// candidate edges and every new label, deduplicated by canonical key.
std::vector<PhyloNetwork> enumerate_otc(int d, int n, int k, const EnumerationBudget& budget = {});
std::uint64_t count_otc(int d, int n, int k, const EnumerationBudget& budget = {});

/// All tree-child networks with n leaves and k reticulations.
///
/// Every tree-child network with n >= 2 leaves has either a cherry or a
/// reticulation whose child is a leaf; removing that leaf (and suppressing
/// what becomes degree-2) leaves a tree-child network with n-1 leaves. The
/// search runs those reductions backwards: leaf_insertion from level
/// (n-1, k) and reticulate_leaf from level (n-1, k-1), deduplicated by
/// canonical key at every level.
std::vector<PhyloNetwork> enumerate_tc(int d, int n, int k, const EnumerationBudget& budget = {});
/// Same search; the final level keeps only canonical keys.
std::uint64_t count_tc(int d, int n, int k, const EnumerationBudget& budget = {});

/// Raw outputs of otc_insertion applied to every network of OTC(d, n-1, k-1)
/// with every multiset of candidate edges and every label, grouped by key.
struct InsertionTally {
  std::uint64_t outputs = 0;
  std::map<CanonicalKey, std::uint64_t> multiplicity;
};
InsertionTally otc_insertion_tally(int d, int n, int k, const EnumerationBudget& budget = {});

}  // namespace tcnet::networks
