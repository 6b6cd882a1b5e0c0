#include "tcnet/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tcnet/asymptotics.hpp"

namespace tcnet::distributions {

using asymptotics::ln_factorial;

double Pmf::prob(int k) const {
  if (k < 0 || k >= static_cast<int>(log_probs.size())) return 0.0;
  return std::exp(log_probs[static_cast<std::size_t>(k)]);
}

int Pmf::mode() const {
  return static_cast<int>(std::max_element(log_probs.begin(), log_probs.end()) - log_probs.begin());
}

double Pmf::log_total() const { return asymptotics::log_sum_exp(log_probs); }

std::string Pmf::to_csv() const {
  std::string out = "k,log_prob\n";
  char buf[64];
  for (std::size_t k = 0; k < log_probs.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", k, log_probs[k]);
    out += buf;
  }
  return out;
}

Pmf r_pmf(int d, int n) {
  if (d < 2 || n < 1) throw std::invalid_argument("r_pmf: need d >= 2 and n >= 1");
  Pmf pmf{d, n, {}};
  pmf.log_probs.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pmf.log_probs.push_back(asymptotics::ln_otc_count(d, n, k));
  const double total = asymptotics::log_sum_exp(pmf.log_probs);
  for (double& v : pmf.log_probs) v -= total;
  return pmf;
}

double modified_bessel_i(int v, double a) {
  if (v < 0) throw std::domain_error("modified_bessel_i: order must be >= 0");
  if (std::fabs(a) > 20.0) throw std::domain_error("modified_bessel_i: |a| must be <= 20");
  const double q = a * a / 4.0;
  double term = std::pow(a / 2.0, v) / std::exp(std::lgamma(v + 1.0));
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * static_cast<double>(k + v));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double bessel_pmf(int k) {
  if (k < 0) return 0.0;
  static const double ln_i1 = std::log(modified_bessel_i(1, 2.0));
  return std::exp(-ln_i1 - ln_factorial(k) - ln_factorial(k + 1.0));
}

double otc_tail_expansion(int d, int n, int k) {
  if (d < 3) throw std::invalid_argument("otc_tail_expansion: defined for d >= 3");
  if (n < 1 || k < 0) throw std::invalid_argument("otc_tail_expansion: need n >= 1 and k >= 0");
  const double lnfd = ln_factorial(d);
  const double ratio = 2.0 * std::log(d) + lnfd - std::numbers::ln2 - d * std::log(d);
  const double ln_n = std::log(n);
  return k * ratio - ln_factorial(k) - ln_factorial(k + 1.0) + (3.0 - d) * k * ln_n + ln_n +
         ln_factorial(static_cast<double>(d) * n - d) - (n - 1.0) * lnfd;
}

MomentSummary moments(const std::vector<double>& support, const std::vector<double>& probs) {
  if (support.size() != probs.size()) throw std::invalid_argument("moments: size mismatch");
  double mean = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) mean += support[i] * probs[i];
  double var = 0.0;
  double third = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double c = support[i] - mean;
    var += c * c * probs[i];
    third += std::fabs(c * c * c) * probs[i];
  }
  return {mean, var, var > 0.0 ? third / std::pow(var, 1.5) : 0.0};
}

NormalCheck normal_limit_check(int n) {
  if (n < 2) throw std::invalid_argument("normal_limit_check: n must be >= 2");
  const Pmf pmf = r_pmf(2, n);
  const double shift = n - std::sqrt(static_cast<double>(n));
  const double sigma = std::pow(n / 4.0, 0.25);
  const auto phi = [](double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); };

  std::vector<double> support(static_cast<std::size_t>(n));
  std::vector<double> probs(static_cast<std::size_t>(n));
  // The lattice CDF is compared with Phi at the half-integer points between atoms.
  double sup = phi((-0.5 - shift) / sigma);
  double cdf = 0.0;
  for (int k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    support[i] = (k - shift) / sigma;
    probs[i] = pmf.prob(k);
    cdf += probs[i];
    sup = std::max(sup, std::fabs(cdf - phi((k + 0.5 - shift) / sigma)));
  }
  return {n, moments(support, probs), sup};
}

double bessel_limit_check(int n) {
  if (n < 2) throw std::invalid_argument("bessel_limit_check: n must be >= 2");
  const Pmf pmf = r_pmf(3, n);
  double diff = 0.0;
  double covered = 0.0;
  for (int j = 0; j < n; ++j) {
    const double q = bessel_pmf(j);
    covered += q;
    diff += std::fabs(pmf.prob(n - 1 - j) - q);
  }
  // Bessel mass beyond the support of R counts in full.
  diff += std::max(0.0, 1.0 - covered);
  return 0.5 * diff;
}

double degenerate_check(int d, int n) {
  if (d < 4) throw std::invalid_argument("degenerate_check: d must be >= 4");
  return r_pmf(d, n).prob(n - 1);
}

double poisson_pmf(double rate, int k) {
  if (k < 0) return 0.0;
  return std::exp(-rate + k * std::log(rate) - ln_factorial(k));
}

PoissonReport conjecture_poisson_report(const CountTable& table, int n) {
  if (n < table.n_min() || n > table.n_max()) throw std::out_of_range("conjecture_poisson_report: n not in table");
  const double ln_total = table.row_total(n).log();
  PoissonReport rep{n, {}};
  for (int j = 0; j < n; ++j) {
    const BigCount& c = table.at(n, n - 1 - j);
    const double emp = c.is_zero() ? 0.0 : std::exp(c.log() - ln_total);
    rep.rows.push_back({j, emp, poisson_pmf(0.5, j)});
  }
  return rep;
}

}  // namespace tcnet::distributions
