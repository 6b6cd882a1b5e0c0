#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

/// Log-space evaluation of the asymptotic formulas and the numerical
/// experiments around them.
namespace tcnet::asymptotics {

/// A positive real stored as its natural logarithm.
struct LogValue {
  double ln = -std::numeric_limits<double>::infinity();

  static LogValue from_linear(double v) { return {std::log(v)}; }
  [[nodiscard]] bool is_zero() const { return ln == -std::numeric_limits<double>::infinity(); }
  [[nodiscard]] bool finite() const { return std::isfinite(ln); }
  [[nodiscard]] double linear() const { return std::exp(ln); }

  friend LogValue operator*(LogValue a, LogValue b) { return {a.ln + b.ln}; }
  friend LogValue operator/(LogValue a, LogValue b) { return {a.ln - b.ln}; }
  friend bool operator==(LogValue, LogValue) = default;
};

/// ln(a + b) without leaving log space.
LogValue log_add(LogValue a, LogValue b);
/// ln(sum exp(x_i)).
double log_sum_exp(std::span<const double> xs);

/// ln m! via the log-gamma function.
double ln_factorial(double m);
/// ln C(a, b) for real a >= b >= 0.
double ln_binomial(double a, double b);

struct AsymptoticParams {
  int d;
  double lambda;  ///< (d+1)^{d-1} / (d-1)!
  double gamma;   ///< 4 (d+1)^{d-1} / (d-1)!
  double alpha;   ///< -d(3d-1) / (2(d+1))
  double beta;    ///< ((d-1)/(d+1))^{2/3}
  double B;       ///< 2(d-1)/(d+1)
  double a1;      ///< largest zero of Ai
};

AsymptoticParams params(int d);

/// Coefficients of the transformed recurrence
///   e_{n,m} = mu(n,m) e_{n-1,m+1} + nu(n,m) e_{n-1,m-1}.
/// Throws std::domain_error at a pole.
double mu(int d, double n, double m);
double nu(int d, double n, double m);

/// ln of (n!)^d gamma^n exp(3 a1 beta n^{1/3}) n^alpha (constant omitted).
/// `a1_override` replaces the Airy zero (used to test the sign).
LogValue theta_tc_max(int d, double n, std::optional<double> a1_override = std::nullopt);

/// ln of 2^{(4-d)k-1} / (d!^k k! sqrt(pi)) n! 2^n n^{(4-d)k-3/2}.
LogValue fixed_k_asymptotic(int d, double n, int k);

/// First-order asymptotics of the total number of one-component networks:
/// the stretched-exponential form for d = 2, the Bessel-constant form for
/// d = 3 and the dominant-term form for d >= 4.
LogValue otc_total_asymptotic(int d, double n);

/// ln OTC^(d)_{n,k} from log-gamma differences; -inf outside 0 <= k <= n-1.
double ln_otc_count(int d, int n, int k);
/// ln of the sum over k of OTC^(d)_{n,k}.
double ln_otc_total(int d, int n);

/// ln TC^(d)_{m,m-1} for m = 2..n_max, from the exact integer recurrence.
/// Entry i holds m = i + 2.
std::vector<double> ln_tc_max_exact(int d, int n_max);

/// Least-squares fit of y = c0 + c1 n^{1/3} + c2 ln n over the upper half of
/// the supplied points (which must be sorted by n).
struct FitResult {
  double c0;
  double c1;
  double c2;
  std::size_t points_used;
};
/// Throws std::invalid_argument for fewer than 50 points, std::runtime_error
/// for a singular system.
FitResult stretched_fit(std::span<const double> n, std::span<const double> y);

/// Stores e_{i,j} row by row with a per-row scale, so rows of any length stay
/// in double range. Row i keeps j = 0..horizon-i; every stored entry is exact
/// with respect to the recurrence because row i+1 only reads j+1 <= horizon-i.
class ESequence {
 public:
  /// Starts at row 2 with e_{2,0} = initial (the other row-2 entries are 0).
  ESequence(int d, int horizon, double initial = 1.0);

  /// Computes the next row. Throws std::domain_error if a coefficient that
  /// multiplies a stored entry is negative.
  void advance();
  void advance_to(int row);

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int row_index() const { return row_; }
  [[nodiscard]] int horizon() const { return horizon_; }
  /// Largest j stored for the current row.
  [[nodiscard]] int max_j() const { return static_cast<int>(values_.size()) - 1; }
  /// ln e_{row, j}; -inf for zero entries (wrong parity or j > row).
  [[nodiscard]] double log_at(int j) const;

 private:
  int d_;
  int horizon_;
  int row_;
  double log_scale_;
  std::vector<double> values_;
};

/// ln e_{2n,0} for n = 1..n_max (entry n-1), with e_{2,0} = initial.
std::vector<double> e_diagonal(int d, int n_max, double initial = 1.0);

/// s_i = 2 + a1 B^{2/3} / i^{2/3} - (3d^2-5d+4) / (3(d+1) i) - i^{-7/6}.
double s_factor(int d, int i);

/// Smallest i with s_j > 0 for every j >= i (2 for d = 2, 3 for d = 3).
int first_positive_index(int d);

/// ln of the product prod_{i=first}^{2n} s_i. The first factors are negative
/// for every d, so a non-positive `first_index` starts at first_positive_index(d).
/// Throws std::domain_error if a factor is <= 0.
LogValue lower_bound_product(int d, int n, int first_index = 0);

/// Max relative deviation between e_{n,m}/e_{n,m0} and
/// Ai(a1 + B^{1/3}(m+1)/n^{1/3}) normalized at the same m0, over the first
/// `count` admissible m (n - m even) starting at the smallest one m0.
double airy_profile_deviation(int d, int n, int count = 30);

/// With `with_prefactor` the Airy values are multiplied by the polynomial
/// prefactor of the sub-solution (eta = 0, q = default_q_coeff(d)), which
/// absorbs the m^2/n correction.
double airy_profile_deviation(int d, int n, int count, bool with_prefactor);

/// residual(n) = ln TC_{n,n-1} - theta_tc_max(d, n) for n = n_lo..n_hi.
struct ResidualWindow {
  int d;
  int n_lo;
  int n_hi;
  std::vector<double> residual;  ///< entry n - n_lo
  [[nodiscard]] double at(int n) const { return residual[static_cast<std::size_t>(n - n_lo)]; }
  [[nodiscard]] double oscillation() const;
};
ResidualWindow theta_residuals(int d, int n_lo, int n_hi, std::optional<double> a1_override = std::nullopt);
/// Same, reusing ln TC_{m,m-1} values from ln_tc_max_exact (entry m-2).
ResidualWindow theta_residuals(int d, int n_lo, int n_hi, std::span<const double> ln_tc_max,
                               std::optional<double> a1_override = std::nullopt);

}  // namespace tcnet::asymptotics
