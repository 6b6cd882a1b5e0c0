#pragma once

#include <string>
#include <vector>

#include "tcnet/count_table.hpp"

/// Reticulation-number laws of uniformly random one-component networks.
namespace tcnet::distributions {

/// Law on the support k = 0..size-1, stored as natural-log probabilities.
struct Pmf {
  int d;
  int n;
  std::vector<double> log_probs;

  [[nodiscard]] double prob(int k) const;
  [[nodiscard]] int mode() const;
  /// ln of the total mass (0 for a normalized law).
  [[nodiscard]] double log_total() const;
  /// `k,log_prob` lines with a header; %.17g formatting.
  [[nodiscard]] std::string to_csv() const;
};

struct MomentSummary {
  double mean;
  double variance;
  double abs_third;  ///< E|X - mean|^3 / variance^{3/2}
};

/// P(R = k) proportional to OTC^(d)_{n,k}, from log-gamma differences.
Pmf r_pmf(int d, int n);

/// I_v(a) = (a/2)^v sum_k (a^2/4)^k / (k! Gamma(k+v+1)) for integer v >= 0.
/// Throws std::domain_error for v < 0 or |a| > 20.
double modified_bessel_i(int v, double a);

/// P(Bessel(1,2) = k) = 1 / (I_1(2) k! (k+1)!).
double bessel_pmf(int k);

/// ln of the leading-term prediction for OTC^(d)_{n,n-1-k}, d >= 3:
///   (d^2 d! / (2 d^d))^k / (k! (k+1)!) n^{(3-d)k} n (dn-d)! / d!^{n-1}.
double otc_tail_expansion(int d, int n, int k);

struct NormalCheck {
  int n;
  MomentSummary moments;  ///< of (R - n + sqrt n) / (n/4)^{1/4}
  double sup_distance;    ///< max_k |P(R <= k) - Phi(z_{k+1/2})|
};
/// d = 2 standardization against N(0,1).
NormalCheck normal_limit_check(int n);

/// Total variation distance (1/2 sum |p - q|) between n-1-R^(3)_n and Bessel(1,2).
double bessel_limit_check(int n);

/// P(R^(d)_n = n-1), d >= 4.
double degenerate_check(int d, int n);

double poisson_pmf(double rate, int k);

/// Empirical law of n-1-k from a fixture row, next to Poisson(1/2). Report only.
struct PoissonRow {
  int deficiency;
  double empirical;
  double poisson;
};
struct PoissonReport {
  int n;
  std::vector<PoissonRow> rows;
};
PoissonReport conjecture_poisson_report(const CountTable& table, int n);

MomentSummary moments(const std::vector<double>& support, const std::vector<double>& probs);

}  // namespace tcnet::distributions
