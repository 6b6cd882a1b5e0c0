#include "tcnet/asymptotics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tcnet/airy.hpp"
#include "tcnet/distributions.hpp"
#include "tcnet/propositions.hpp"
#include "tcnet/words.hpp"

namespace tcnet::asymptotics {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_degree(int d, const char* where) {
  if (d < 2) throw std::invalid_argument(std::string(where) + ": d must be >= 2");
}

}  // namespace

LogValue log_add(LogValue a, LogValue b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const double hi = std::max(a.ln, b.ln);
  const double lo = std::min(a.ln, b.ln);
  return {hi + std::log1p(std::exp(lo - hi))};
}

double log_sum_exp(std::span<const double> xs) {
  double hi = kNegInf;
  for (double x : xs) hi = std::max(hi, x);
  if (hi == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - hi);
  return hi + std::log(s);
}

double ln_factorial(double m) {
  if (m < 0) throw std::domain_error("ln_factorial: negative argument");
  return std::lgamma(m + 1.0);
}

double ln_binomial(double a, double b) {
  if (b < 0 || b > a) throw std::domain_error("ln_binomial: need 0 <= b <= a");
  return ln_factorial(a) - ln_factorial(b) - ln_factorial(a - b);
}

AsymptoticParams params(int d) {
  require_degree(d, "params");
  AsymptoticParams p{};
  p.d = d;
  p.lambda = std::exp((d - 1) * std::log(d + 1.0) - ln_factorial(d - 1));
  p.gamma = 4.0 * p.lambda;
  p.alpha = -d * (3.0 * d - 1.0) / (2.0 * (d + 1.0));
  p.beta = std::cbrt(std::pow((d - 1.0) / (d + 1.0), 2.0));
  p.B = 2.0 * (d - 1.0) / (d + 1.0);
  p.a1 = airy_root_a1();
  return p;
}

double mu(int d, double n, double m) {
  const double den = (d + 1.0) * n + (d - 1.0) * m - 2.0 * (d + 1.0);
  if (den == 0.0) throw std::domain_error("mu: pole at n = " + std::to_string(n));
  return 1.0 + 2.0 * (d - 1.0) / den;
}

double nu(int d, double n, double m) {
  const double den = (d + 1.0) * (n + m);
  if (den == 0.0) throw std::domain_error("nu: pole at n + m = 0");
  double r = 1.0;
  for (int i = 2; i <= d; ++i) r *= 1.0 - 2.0 * (m + i) / den;
  return r;
}

LogValue theta_tc_max(int d, double n, std::optional<double> a1_override) {
  const AsymptoticParams p = params(d);
  const double a1 = a1_override.value_or(p.a1);
  return {d * ln_factorial(n) + n * std::log(p.gamma) + 3.0 * a1 * p.beta * std::cbrt(n) +
          p.alpha * std::log(n)};
}

LogValue fixed_k_asymptotic(int d, double n, int k) {
  require_degree(d, "fixed_k_asymptotic");
  const double e = (4.0 - d) * k;
  return {(e - 1.0) * std::numbers::ln2 - k * ln_factorial(d) - ln_factorial(k) -
          0.5 * std::log(std::numbers::pi) + ln_factorial(n) + n * std::numbers::ln2 +
          (e - 1.5) * std::log(n)};
}

LogValue otc_total_asymptotic(int d, double n) {
  require_degree(d, "otc_total_asymptotic");
  const double ln_n = std::log(n);
  if (d == 2) {
    return {-std::log(4.0 * std::numbers::pi * std::sqrt(std::numbers::e)) + 2.0 * ln_factorial(n) +
            n * std::numbers::ln2 + 2.0 * std::sqrt(n) - 2.25 * ln_n};
  }
  if (d == 3) {
    const double c = distributions::modified_bessel_i(1, 2.0) * std::sqrt(3.0) / (9.0 * std::numbers::pi);
    return {std::log(c) + 3.0 * ln_factorial(n) + n * std::log(4.5) - 3.0 * ln_n};
  }
  const double lnfd = ln_factorial(d);
  const double c = lnfd - (d - 0.5) * std::log(d) - 0.5 * (d - 1.0) * std::log(2.0 * std::numbers::pi);
  return {c + d * ln_factorial(n) + n * (d * std::log(d) - lnfd) + 1.5 * (1.0 - d) * ln_n};
}

double ln_otc_count(int d, int n, int k) {
  require_degree(d, "ln_otc_count");
  if (n < 1 || k < 0 || k > n - 1) return kNegInf;
  return ln_binomial(n, k) + ln_factorial(2.0 * n + (d - 2.0) * k - 2.0) - k * ln_factorial(d) -
         (n - k - 1.0) * std::numbers::ln2 - ln_factorial(n - k - 1.0);
}

double ln_otc_total(int d, int n) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) terms.push_back(ln_otc_count(d, n, k));
  return log_sum_exp(terms);
}

std::vector<double> ln_tc_max_exact(int d, int n_max) {
  if (n_max < 2) throw std::invalid_argument("ln_tc_max_exact: n_max must be >= 2");
  const std::vector<BigCount> c = words::c_sequence(d, n_max - 1);
  std::vector<double> out;
  out.reserve(c.size());
  for (int m = 2; m <= n_max; ++m) out.push_back(ln_factorial(m) + c[static_cast<std::size_t>(m - 2)].log());
  return out;
}

FitResult stretched_fit(std::span<const double> n, std::span<const double> y) {
  if (n.size() != y.size()) throw std::invalid_argument("stretched_fit: size mismatch");
  if (n.size() < 50) throw std::invalid_argument("stretched_fit: need at least 50 points");
  const std::size_t first = n.size() / 2;
  const auto rows = static_cast<Eigen::Index>(n.size() - first);
  Eigen::MatrixXd a(rows, 3);
  Eigen::VectorXd b(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double x = n[first + static_cast<std::size_t>(r)];
    a(r, 0) = 1.0;
    a(r, 1) = std::cbrt(x);
    a(r, 2) = std::log(x);
    b(r) = y[first + static_cast<std::size_t>(r)];
  }
  // Column scaling keeps the normal matrix well conditioned.
  const Eigen::Vector3d scale = a.colwise().norm().transpose();
  const Eigen::MatrixXd as = a * scale.cwiseInverse().asDiagonal();
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(as);
  if (qr.rank() < 3) throw std::runtime_error("stretched_fit: singular design matrix");
  const Eigen::Vector3d c = qr.solve(b).cwiseQuotient(scale);
  return {c(0), c(1), c(2), static_cast<std::size_t>(rows)};
}

std::vector<double> e_diagonal(int d, int n_max, double initial) {
  if (n_max < 1) throw std::invalid_argument("e_diagonal: n_max must be >= 1");
  ESequence seq(d, 2 * n_max, initial);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  out.push_back(seq.log_at(0));
  for (int n = 2; n <= n_max; ++n) {
    seq.advance_to(2 * n);
    out.push_back(seq.log_at(0));
  }
  return out;
}

double s_factor(int d, int i) {
  const AsymptoticParams p = params(d);
  const double x = i;
  return 2.0 + p.a1 * std::pow(p.B, 2.0 / 3.0) / std::pow(x, 2.0 / 3.0) -
         (3.0 * d * d - 5.0 * d + 4.0) / (3.0 * (d + 1.0) * x) - std::pow(x, -7.0 / 6.0);
}

int first_positive_index(int d) {
  // The negative terms decay in i; for d <= 50 no factor past i = 64 is negative.
  if (d < 2 || d > 50) throw std::invalid_argument("first_positive_index: need 2 <= d <= 50");
  int first = 1;
  for (int i = 1; i <= 64; ++i) {
    if (!(s_factor(d, i) > 0.0)) first = i + 1;
  }
  return first;
}

LogValue lower_bound_product(int d, int n, int first_index) {
  if (first_index <= 0) first_index = first_positive_index(d);
  double acc = 0.0;
  for (int i = first_index; i <= 2 * n; ++i) {
    const double s = s_factor(d, i);
    if (!(s > 0.0)) {
      throw std::domain_error("lower_bound_product: factor s_" + std::to_string(i) + " is not positive");
    }
    acc += std::log(s);
  }
  return {acc};
}

double airy_profile_deviation(int d, int n, int count) { return airy_profile_deviation(d, n, count, false); }

double airy_profile_deviation(int d, int n, int count, bool with_prefactor) {
  if (count < 1) throw std::invalid_argument("airy_profile_deviation: count must be >= 1");
  const int m0 = n % 2;
  const int m_last = m0 + 2 * (count - 1);
  if (m_last > n) throw std::invalid_argument("airy_profile_deviation: count too large for n");
  const AsymptoticParams p = params(d);
  ESequence seq(d, n + m_last);
  seq.advance_to(n);
  const double scale = std::cbrt(p.B) / std::cbrt(static_cast<double>(n));
  const double q = default_q_coeff(d);
  const auto model = [&](int m) {
    const double ai = log_airy_ai(p.a1 + scale * (m + 1.0));
    return with_prefactor ? ai + std::log(prefactor(d, n, m, q, 0.0)) : ai;
  };
  const double e0 = seq.log_at(m0);
  const double ai0 = model(m0);
  double worst = 0.0;
  for (int m = m0; m <= m_last; m += 2) {
    const double ratio = std::exp((seq.log_at(m) - e0) - (model(m) - ai0));
    worst = std::max(worst, std::fabs(ratio - 1.0));
  }
  return worst;
}

double ResidualWindow::oscillation() const {
  const auto [lo, hi] = std::minmax_element(residual.begin(), residual.end());
  return residual.empty() ? 0.0 : *hi - *lo;
}

ResidualWindow theta_residuals(int d, int n_lo, int n_hi, std::span<const double> ln_tc_max,
                               std::optional<double> a1_override) {
  if (n_lo < 2 || n_hi < n_lo) throw std::invalid_argument("theta_residuals: need 2 <= n_lo <= n_hi");
  if (ln_tc_max.size() < static_cast<std::size_t>(n_hi - 1)) {
    throw std::invalid_argument("theta_residuals: exact values do not reach n_hi");
  }
  ResidualWindow w{d, n_lo, n_hi, {}};
  w.residual.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (int n = n_lo; n <= n_hi; ++n) {
    w.residual.push_back(ln_tc_max[static_cast<std::size_t>(n - 2)] - theta_tc_max(d, n, a1_override).ln);
  }
  return w;
}

ResidualWindow theta_residuals(int d, int n_lo, int n_hi, std::optional<double> a1_override) {
  const std::vector<double> exact = ln_tc_max_exact(d, n_hi);
  return theta_residuals(d, n_lo, n_hi, exact, a1_override);
}

}  // namespace tcnet::asymptotics
