#pragma once

#include <cstdint>

#include "tcnet/bigcount.hpp"

/// Closed-form exact counts for d-combining tree-child networks.
namespace tcnet::counts {

/// Network-class parameters: multiplicity d >= 2 (parents per reticulation),
/// leaf count n >= 1, reticulation count k.
///
/// k is allowed to be any integer; counting operations return 0 outside the
/// tree-child range 0 <= k <= n-1 so that summations need no special cases.
struct Params {
  int d = 2;
  int n = 1;
  int k = 0;

  /// Throws std::invalid_argument when d < 2 or n < 1.
  void validate() const;
  [[nodiscard]] bool k_in_range() const { return k >= 0 && k <= n - 1; }
};

BigCount factorial(unsigned m);

/// m!! for odd m, with the conventions (-1)!! = 0!! = 1.
/// Throws std::invalid_argument for even m > 0 or m < -1.
BigCount double_factorial_odd(int m);

/// C(a, b); zero when b > a.
BigCount binomial(unsigned a, unsigned b);

/// Number of one-component d-combining tree-child networks with n leaves and
/// k reticulations:
///   C(n,k) (2n+(d-2)k-2)! / ( (d!)^k 2^(n-k-1) (n-k-1)! )
/// for 0 <= k <= n-1, zero otherwise. The division is checked to be exact.
BigCount otc_count(const Params& p);

/// Sum of otc_count over k = 0..n-1.
BigCount otc_total(int d, int n);

struct NodeCounts {
  std::int64_t tree_nodes;
  std::int64_t total_nodes;
};

/// Tree-node and total node counts implied by the degree conventions:
/// t = n + (d-1)k - 1 and N = 2n + dk (root and leaves included).
NodeCounts node_counts(const Params& p);

/// Upper bound TC_{n,k} <= TC_{n,n-1} / (2^(n-k-1) (n-k-1)!), obtained by
/// iterating the reticulation insertion on free edges.
struct UpperBound {
  BigCount floor;  ///< floor of the exact rational bound
  bool exact;      ///< true iff the bound is an integer
};
UpperBound tc_upper_bound(const Params& p, const BigCount& tc_max);

}  // namespace tcnet::counts
