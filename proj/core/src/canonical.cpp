#include "tcnet/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tcnet::networks {

namespace {

constexpr std::uint64_t kMaxFallbackPermutations = 1'000'000;

// Heights (longest path down to a sink); throws on cycles.
std::vector<int> heights(const PhyloNetwork& net) {
  const auto n = static_cast<std::size_t>(net.node_count());
  std::vector<std::size_t> out_left(n);
  std::vector<NodeId> ready;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    out_left[static_cast<std::size_t>(v)] = net.children(v).size();
    if (out_left[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  std::vector<int> h(n, 0);
  std::size_t processed = 0;
  while (!ready.empty()) {
    const NodeId v = ready.back();
    ready.pop_back();
    ++processed;
    for (NodeId p : net.parents(v)) {
      auto& hp = h[static_cast<std::size_t>(p)];
      hp = std::max(hp, h[static_cast<std::size_t>(v)] + 1);
      if (--out_left[static_cast<std::size_t>(p)] == 0) ready.push_back(p);
    }
  }
  if (processed != n) throw std::invalid_argument("canonicalize requires an acyclic network");
  return h;
}

class Encoder {
 public:
  explicit Encoder(const PhyloNetwork& net) : net_(net) {
    int max_label = 0;
    for (const auto& [v, lab] : net.leaf_labels()) max_label = std::max(max_label, lab);
    wide_ = net.node_count() > 250 || max_label > 250 || net.d() > 250;
  }

  std::string encode(const std::vector<NodeId>& order) const {
    const auto n = order.size();
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::string out;
    out.reserve(4 + n * 5 * (wide_ ? 2 : 1));
    out.push_back(wide_ ? 'W' : 'N');
    put(out, net_.d());
    put(out, static_cast<int>(n));
    std::vector<int> ch;
    for (NodeId v : order) {
      put(out, static_cast<int>(net_.role(v)));
      put(out, net_.label(v));
      ch.clear();
      for (NodeId c : net_.children(v)) ch.push_back(pos[static_cast<std::size_t>(c)]);
      std::sort(ch.begin(), ch.end());
      put(out, static_cast<int>(ch.size()));
      for (int c : ch) put(out, c);
    }
    return out;
  }

 private:
  void put(std::string& out, int v) const {
    if (wide_) {
      if (v < 0 || v > 0xFFFF) throw std::length_error("network too large for canonical encoding");
      out.push_back(static_cast<char>(v & 0xFF));
      out.push_back(static_cast<char>((v >> 8) & 0xFF));
    } else {
      out.push_back(static_cast<char>(v));
    }
  }

  const PhyloNetwork& net_;
  bool wide_;
};

}  // namespace

CanonicalForm canonicalize(const PhyloNetwork& net, CanonicalStats* stats) {
  const auto n = static_cast<std::size_t>(net.node_count());
  const auto h = heights(net);
  const int max_h = n == 0 ? -1 : *std::max_element(h.begin(), h.end());

  std::vector<std::vector<NodeId>> by_height(static_cast<std::size_t>(max_h + 1));
  for (NodeId v = 0; v < net.node_count(); ++v) by_height[static_cast<std::size_t>(h[static_cast<std::size_t>(v)])].push_back(v);

  // Invariant class per node: equal tuples (role, label, sorted child classes) share a class.
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> tuple(n);
  int next_class = 0;
  for (auto& level : by_height) {
    for (NodeId v : level) {
      auto& t = tuple[static_cast<std::size_t>(v)];
      t.clear();
      t.push_back(static_cast<int>(net.role(v)));
      t.push_back(net.label(v));
      const auto first_child = t.size();
      for (NodeId c : net.children(v)) t.push_back(cls[static_cast<std::size_t>(c)]);
      std::sort(t.begin() + static_cast<std::ptrdiff_t>(first_child), t.end());
    }
    std::sort(level.begin(), level.end(),
              [&](NodeId a, NodeId b) { return tuple[static_cast<std::size_t>(a)] < tuple[static_cast<std::size_t>(b)]; });
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i > 0 && tuple[static_cast<std::size_t>(level[i])] != tuple[static_cast<std::size_t>(level[i - 1])]) ++next_class;
      cls[static_cast<std::size_t>(level[i])] = next_class;
    }
    ++next_class;
  }

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return cls[static_cast<std::size_t>(a)] < cls[static_cast<std::size_t>(b)]; });

  // Maximal runs of equal class are the tied groups.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  std::uint64_t perms = 1;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && cls[static_cast<std::size_t>(order[j])] == cls[static_cast<std::size_t>(order[i])]) ++j;
    if (j - i > 1) {
      groups.emplace_back(i, j);
      for (std::size_t f = 2; f <= j - i; ++f) {
        perms *= f;
        if (perms > kMaxFallbackPermutations) {
          throw std::runtime_error("canonicalize: symmetric ties exceed the exhaustive search limit");
        }
      }
    }
    i = j;
  }

  const Encoder enc(net);
  if (groups.empty()) {
    if (stats) *stats = {false, 1};
    return {CanonicalKey{enc.encode(order)}, std::move(order)};
  }

  for (auto [b, e] : groups) std::sort(order.begin() + static_cast<std::ptrdiff_t>(b), order.begin() + static_cast<std::ptrdiff_t>(e));
  std::string best = enc.encode(order);
  std::vector<NodeId> best_order = order;
  std::uint64_t examined = 1;
  // Odometer over the permutations of every tied group.
  while (true) {
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto [b, e] = groups[g];
      if (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(b), order.begin() + static_cast<std::ptrdiff_t>(e))) break;
    }
    if (g == groups.size()) break;
    ++examined;
    auto candidate = enc.encode(order);
    if (candidate < best) {
      best = std::move(candidate);
      best_order = order;
    }
  }
  if (stats) *stats = {true, examined};
  return {CanonicalKey{std::move(best)}, std::move(best_order)};
}

PhyloNetwork canonical_relabel(const PhyloNetwork& net) {
  const auto form = canonicalize(net);
  std::vector<int> pos(static_cast<std::size_t>(net.node_count()));
  for (std::size_t i = 0; i < form.order.size(); ++i) pos[static_cast<std::size_t>(form.order[i])] = static_cast<int>(i);
  std::vector<Role> roles;
  roles.reserve(form.order.size());
  for (NodeId v : form.order) roles.push_back(net.role(v));
  std::vector<Edge> edges;
  edges.reserve(net.edges().size());
  for (const auto& e : net.edges()) edges.push_back({pos[static_cast<std::size_t>(e.parent)], pos[static_cast<std::size_t>(e.child)]});
  std::sort(edges.begin(), edges.end());
  std::map<NodeId, int> labels;
  for (const auto& [v, lab] : net.leaf_labels()) labels[pos[static_cast<std::size_t>(v)]] = lab;
  return PhyloNetwork(net.d(), std::move(roles), std::move(edges), std::move(labels));
}

}  // namespace tcnet::networks
