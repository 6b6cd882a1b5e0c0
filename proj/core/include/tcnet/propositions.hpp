#pragma once

#include <cstdint>
#include <string>
#include <vector>

/// Numerical sweeps of the Airy-type sub- and super-solution inequalities for
/// the transformed e-recurrence. These check instances on a finite grid; they
/// say nothing about the "for all n >= n0" quantifier.
namespace tcnet::asymptotics {

/// Literal reading of the m/n prefactor coefficient: 3d^2 + 1.
double default_q_coeff(int d);
/// Alternative reading 3d^2 + d - 1 (equal to the literal one at d = 2).
double alternative_q_coeff(int d);
/// 3d^2 + 12d - 11: the value for which the 1/n terms of s_n and of the
/// recurrence applied to the prefactor agree at m = 0 (25 at d = 2).
double consistent_q_coeff(int d);
/// Smallest admissible eta plus 0.01: (2d-1)^2 / (18(d+1)^2) + 0.01.
double default_eta(int d);

/// s~_n (sign = -1) and s^_n (sign = +1):
///   2 + a1 B^{2/3} / n^{2/3} - (3d^2-5d+4) / (3(d+1)n) + sign n^{-7/6}.
double s_sub(int d, double n);
double s_super(int d, double n);

/// Polynomial prefactor of X~ (eta = 0) and X^ (eta > 0):
///   1 - (2d-1)/(3(d+1)) m^2/n - q/(6(d+1)) m/n + eta m^4/n^2.
double prefactor(int d, double n, double m, double q_coeff, double eta);

enum class PropositionKind { subsolution, supersolution };

struct SweepConfig {
  int n_lo = 200;
  int n_hi = 5000;
  int n_step = 1;
  double epsilon = 0.1;
  double q_coeff = 13.0;
  double eta = 0.0;  ///< used by the super-solution check only
  std::size_t max_recorded = 50;
};

/// Both sides are divided by Ai(a1 + B^{1/3}(m+1)/n^{1/3}) > 0, which keeps
/// them in double range for large m without changing the comparison.
struct PropositionViolation {
  int n;
  int m;
  double lhs;
  double rhs;
};

struct PropositionReport {
  int d = 2;
  PropositionKind kind = PropositionKind::subsolution;
  SweepConfig config;
  std::uint64_t samples = 0;
  std::uint64_t violation_count = 0;
  std::vector<PropositionViolation> violations;  ///< the first max_recorded
  /// Smallest sampled n from which no sampled point violates the inequality
  /// (n_hi + n_step if the last sampled n still violates).
  int n_threshold = 0;

  [[nodiscard]] bool pass() const { return violation_count == 0; }
  /// True when the sampled tail is clean: no violation at the last sampled n.
  [[nodiscard]] bool settled() const { return n_threshold <= config.n_hi; }
  [[nodiscard]] std::string to_json() const;
};

/// X~_{n,m} s~_n <= mu X~_{n-1,m+1} + nu X~_{n-1,m-1} for 0 <= m < n^{2/3-eps}.
PropositionReport check_subsolution(int d, const SweepConfig& config);
/// X^_{n,m} s^_n >= mu X^_{n-1,m+1} + nu X^_{n-1,m-1} for 0 <= m < n^{1-eps}.
PropositionReport check_supersolution(int d, const SweepConfig& config);

}  // namespace tcnet::asymptotics
