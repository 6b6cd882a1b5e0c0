#include "tcnet/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "tcnet/errors.hpp"

namespace tcnet::networks {

namespace {

using Sink = std::function<void(PhyloNetwork&&)>;

enum class Expansion { leaf, otc_reticulation, tc_reticulation };

class CandidateCounter {
 public:
  explicit CandidateCounter(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (count_.fetch_add(1, std::memory_order_relaxed) + 1 > limit_) {
      throw BudgetExceeded("network enumeration built more than " + std::to_string(limit_) + " candidates");
    }
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> count_{0};
};

// Calls f on every nondecreasing index sequence of length len over [0, size).
template <class F>
void for_each_multiset(std::size_t size, int len, F&& f) {
  if (size == 0) return;
  std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
  while (true) {
    f(idx);
    int pos = len - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == size - 1) --pos;
    if (pos < 0) return;
    const auto v = idx[static_cast<std::size_t>(pos)] + 1;
    for (auto p = static_cast<std::size_t>(pos); p < idx.size(); ++p) idx[p] = v;
  }
}

void expand(const PhyloNetwork& parent, Expansion kind, CandidateCounter& counter, const Sink& sink) {
  const int new_labels = parent.leaf_count() + 1;
  if (kind == Expansion::leaf) {
    for (const auto& e : parent.edges()) {
      for (int label = 1; label <= new_labels; ++label) {
        counter.tick();
        sink(leaf_insertion(parent, e, label));
      }
    }
    return;
  }
  std::vector<Edge> sites;
  if (kind == Expansion::otc_reticulation) {
    sites = candidate_edges(parent);
  } else {
    // A new tree node directly above a reticulation would have two reticulation children.
    for (const auto& e : parent.edges()) {
      if (parent.role(e.child) != Role::reticulation) sites.push_back(e);
    }
  }
  std::vector<Edge> positions(static_cast<std::size_t>(parent.d()));
  for_each_multiset(sites.size(), parent.d(), [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) positions[i] = sites[idx[i]];
    for (int label = 1; label <= new_labels; ++label) {
      counter.tick();
      sink(reticulate_leaf(parent, positions, label));
    }
  });
}

unsigned worker_count(const EnumerationBudget& budget, std::size_t work_items) {
  unsigned t = budget.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : budget.threads;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work_items, 1)));
}

// Runs `per_worker(begin, end, slot)` on contiguous slices of [0, items) and
// rethrows the first worker exception.
void parallel_slices(std::size_t items, unsigned workers, const std::function<void(std::size_t, std::size_t, unsigned)>& per_worker) {
  if (workers <= 1) {
    per_worker(0, items, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t chunk = (items + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t b = std::min(items, w * chunk);
    const std::size_t e = std::min(items, b + chunk);
    pool.emplace_back([&, b, e, w] {
      try {
        per_worker(b, e, w);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

using NetworkMap = std::map<CanonicalKey, PhyloNetwork>;

struct Source {
  const std::vector<PhyloNetwork>* parents;
  Expansion kind;
};

// One level of the search: expand every parent of every source, deduplicate,
// return networks sorted by key.
std::vector<PhyloNetwork> expand_level(const std::vector<Source>& sources, CandidateCounter& counter,
                                       const EnumerationBudget& budget) {
  std::vector<std::pair<const PhyloNetwork*, Expansion>> jobs;
  for (const auto& s : sources) {
    for (const auto& p : *s.parents) jobs.emplace_back(&p, s.kind);
  }
  const unsigned workers = worker_count(budget, jobs.size());
  std::vector<NetworkMap> partial(workers);
  parallel_slices(jobs.size(), workers, [&](std::size_t b, std::size_t e, unsigned slot) {
    auto& local = partial[slot];
    for (std::size_t i = b; i < e; ++i) {
      expand(*jobs[i].first, jobs[i].second, counter, [&](PhyloNetwork&& net) {
        auto key = canonical_key(net);
        if (!local.contains(key)) local.emplace(std::move(key), std::move(net));
      });
    }
  });
  NetworkMap merged;
  for (auto& m : partial) merged.merge(m);
  std::vector<PhyloNetwork> out;
  out.reserve(merged.size());
  for (auto& [key, net] : merged) out.push_back(std::move(net));
  return out;
}

std::uint64_t count_level(const std::vector<Source>& sources, CandidateCounter& counter, const EnumerationBudget& budget) {
  std::vector<std::pair<const PhyloNetwork*, Expansion>> jobs;
  for (const auto& s : sources) {
    for (const auto& p : *s.parents) jobs.emplace_back(&p, s.kind);
  }
  const unsigned workers = worker_count(budget, jobs.size());
  std::vector<std::set<CanonicalKey>> partial(workers);
  parallel_slices(jobs.size(), workers, [&](std::size_t b, std::size_t e, unsigned slot) {
    auto& local = partial[slot];
    for (std::size_t i = b; i < e; ++i) {
      expand(*jobs[i].first, jobs[i].second, counter, [&](PhyloNetwork&& net) { local.insert(canonical_key(net)); });
    }
  });
  std::set<CanonicalKey> merged;
  for (auto& s : partial) merged.merge(s);
  return merged.size();
}

void check_args(int d, int n, int k) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
}

std::vector<PhyloNetwork> trees(int d, int n, CandidateCounter& counter, const EnumerationBudget& budget) {
  std::vector<PhyloNetwork> level{PhyloNetwork::single_leaf(d)};
  for (int m = 2; m <= n; ++m) level = expand_level({{&level, Expansion::leaf}}, counter, budget);
  return level;
}

// OTC levels up to (n-1, k-1); returns the parents of the final round.
std::vector<PhyloNetwork> otc_parents(int d, int n, int k, CandidateCounter& counter, const EnumerationBudget& budget) {
  auto level = trees(d, n - k, counter, budget);
  for (int round = 1; round < k; ++round) {
    level = expand_level({{&level, Expansion::otc_reticulation}}, counter, budget);
  }
  return level;
}

// Memoized tree-child levels.
class TcSearch {
 public:
  TcSearch(int d, const EnumerationBudget& budget) : d_(d), budget_(budget), counter_(budget.max_candidates) {}

  const std::vector<PhyloNetwork>& level(int n, int k) {
    auto key = std::pair{n, k};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<PhyloNetwork> out;
    if (n == 1 && k == 0) {
      out.push_back(PhyloNetwork::single_leaf(d_));
    } else if (n >= 2 && k >= 0 && k <= n - 1) {
      out = expand_level(sources(n, k), counter_, budget_);
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  std::uint64_t count(int n, int k) {
    if (n == 1) return k == 0 ? 1 : 0;
    if (k < 0 || k > n - 1) return 0;
    return count_level(sources(n, k), counter_, budget_);
  }

 private:
  std::vector<Source> sources(int n, int k) {
    std::vector<Source> s;
    if (k <= n - 2) s.push_back({&level(n - 1, k), Expansion::leaf});
    if (k >= 1) s.push_back({&level(n - 1, k - 1), Expansion::tc_reticulation});
    return s;
  }

  int d_;
  EnumerationBudget budget_;
  CandidateCounter counter_;
  std::map<std::pair<int, int>, std::vector<PhyloNetwork>> memo_;
};

}  // namespace

std::vector<PhyloNetwork> phylogenetic_trees(int d, int n, const EnumerationBudget& budget) {
  check_args(d, n, 0);
  CandidateCounter counter(budget.max_candidates);
  return trees(d, n, counter, budget);
}

std::vector<PhyloNetwork> enumerate_otc(int d, int n, int k, const EnumerationBudget& budget) {
  check_args(d, n, k);
  if (k > n - 1) return {};
  CandidateCounter counter(budget.max_candidates);
  if (k == 0) return trees(d, n, counter, budget);
  auto parents = otc_parents(d, n, k, counter, budget);
  return expand_level({{&parents, Expansion::otc_reticulation}}, counter, budget);
}

std::uint64_t count_otc(int d, int n, int k, const EnumerationBudget& budget) {
  check_args(d, n, k);
  if (k > n - 1) return 0;
  CandidateCounter counter(budget.max_candidates);
  if (k == 0) {
    if (n == 1) return 1;
    auto parents = trees(d, n - 1, counter, budget);
    return count_level({{&parents, Expansion::leaf}}, counter, budget);
  }
  auto parents = otc_parents(d, n, k, counter, budget);
  return count_level({{&parents, Expansion::otc_reticulation}}, counter, budget);
}

std::vector<PhyloNetwork> enumerate_tc(int d, int n, int k, const EnumerationBudget& budget) {
  check_args(d, n, k);
  TcSearch search(d, budget);
  return search.level(n, k);
}

std::uint64_t count_tc(int d, int n, int k, const EnumerationBudget& budget) {
  check_args(d, n, k);
  TcSearch search(d, budget);
  return search.count(n, k);
}

InsertionTally otc_insertion_tally(int d, int n, int k, const EnumerationBudget& budget) {
  check_args(d, n, k);
  if (k < 1 || k > n - 1) throw std::invalid_argument("otc_insertion_tally requires 1 <= k <= n-1");
  CandidateCounter counter(budget.max_candidates);
  auto parents = otc_parents(d, n, k, counter, budget);
  InsertionTally tally;
  for (const auto& p : parents) {
    const auto cand = candidate_edges(p);
    std::vector<Edge> positions(static_cast<std::size_t>(d));
    for_each_multiset(cand.size(), d, [&](const std::vector<std::size_t>& idx) {
      for (std::size_t i = 0; i < idx.size(); ++i) positions[i] = cand[idx[i]];
      for (int label = 1; label <= n; ++label) {
        counter.tick();
        ++tally.outputs;
        ++tally.multiplicity[canonical_key(otc_insertion(p, positions, label))];
      }
    });
  }
  return tally;
}

}  // namespace tcnet::networks
