#include "tcnet/exact_counts.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcnet::counts {

namespace {

// Factorials are memoized up to the largest argument requested so far.
class FactorialCache {
 public:
  BigCount get(unsigned m) {
    std::lock_guard lock(mutex_);
    if (table_.empty()) table_.emplace_back(1);
    while (table_.size() <= m) {
      BigCount next = table_.back();
      next *= static_cast<std::uint64_t>(table_.size());
      table_.push_back(std::move(next));
    }
    return table_[m];
  }

 private:
  std::mutex mutex_;
  std::vector<BigCount> table_;
};

FactorialCache& factorial_cache() {
  static FactorialCache cache;
  return cache;
}

}  // namespace

void Params::validate() const {
  if (d < 2) throw std::invalid_argument("d must be >= 2 (got " + std::to_string(d) + ")");
  if (n < 1) throw std::invalid_argument("n must be >= 1 (got " + std::to_string(n) + ")");
}

BigCount factorial(unsigned m) { return factorial_cache().get(m); }

BigCount double_factorial_odd(int m) {
  if (m == -1 || m == 0) return 1;
  if (m < -1) throw std::invalid_argument("double factorial of a negative argument below -1");
  if (m % 2 == 0) throw std::invalid_argument("double_factorial_odd requires an odd argument");
  BigCount out = 1;
  for (int i = 3; i <= m; i += 2) out *= static_cast<std::uint64_t>(i);
  return out;
}

BigCount binomial(unsigned a, unsigned b) {
  if (b > a) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), a, b);
  return BigCount(std::move(out));
}

BigCount otc_count(const Params& p) {
  p.validate();
  if (!p.k_in_range()) return 0;
  const auto n = static_cast<unsigned>(p.n);
  const auto k = static_cast<unsigned>(p.k);
  const auto d = static_cast<unsigned>(p.d);

  const BigCount numerator = binomial(n, k) * factorial(2 * n + (d - 2) * k - 2);

  mpz_class d_fact_pow;
  mpz_pow_ui(d_fact_pow.get_mpz_t(), factorial(d).raw().get_mpz_t(), k);
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n - k - 1);
  const BigCount denominator =
      BigCount(std::move(d_fact_pow)) * BigCount(std::move(two_pow)) * factorial(n - k - 1);

  return divide_exact(numerator, denominator);
}

BigCount otc_total(int d, int n) {
  Params{d, n, 0}.validate();
  BigCount sum = 0;
  for (int k = 0; k <= n - 1; ++k) sum += otc_count({d, n, k});
  return sum;
}

NodeCounts node_counts(const Params& p) {
  p.validate();
  if (!p.k_in_range()) throw std::invalid_argument("node_counts requires 0 <= k <= n-1");
  const std::int64_t n = p.n;
  const std::int64_t d = p.d;
  const std::int64_t k = p.k;
  return {n + (d - 1) * k - 1, 2 * n + d * k};
}

UpperBound tc_upper_bound(const Params& p, const BigCount& tc_max) {
  p.validate();
  if (!p.k_in_range()) throw std::invalid_argument("tc_upper_bound requires 0 <= k <= n-1");
  const auto free_tree_nodes = static_cast<unsigned>(p.n - p.k - 1);
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, free_tree_nodes);
  const BigCount den = BigCount(std::move(two_pow)) * factorial(free_tree_nodes);
  auto q = divide_floor(tc_max, den);
  return {std::move(q.floor), q.exact};
}

}  // namespace tcnet::counts
