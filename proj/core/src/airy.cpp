#include "tcnet/airy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tcnet::asymptotics {

namespace {

// Ai(0) = 3^{-2/3} / Gamma(2/3) and Ai'(0) = -3^{-1/3} / Gamma(1/3).
constexpr long double kAi0 = 0.355028053887817239260063186004183176L;
constexpr long double kAiPrime0 = -0.258819403792806798405183560189203963L;

struct SeriesValue {
  long double value;
  long double derivative;
};

// f(x) = sum 3^k (1/3)_k x^{3k} / (3k)!,  g(x) = sum 3^k (2/3)_k x^{3k+1} / (3k+1)!
// with derivative series f' and g' carried alongside.
SeriesValue maclaurin(double xd) {
  const long double x = xd;
  const long double x3 = x * x * x;
  long double f = 0.0L, g = 0.0L, fp = 0.0L, gp = 0.0L;
  long double tf = 1.0L;          // x^{3k} term of f
  long double tg = x;             // x^{3k+1} term of g
  long double tfp = x * x / 2.0L; // x^{3k-1} term of f', starting at k = 1
  long double tgp = 1.0L;         // x^{3k} term of g'
  for (int k = 0; k < 200; ++k) {
    const long double a = 3.0L * k;
    f += tf;
    g += tg;
    gp += tgp;
    if (k > 0) {
      fp += tfp;
      tfp *= x3 / (a * (a + 2.0L));
    }
    tf *= x3 / ((a + 2.0L) * (a + 3.0L));
    tg *= x3 / ((a + 3.0L) * (a + 4.0L));
    tgp *= x3 / ((a + 1.0L) * (a + 3.0L));
    const long double scale = std::fabs(f) + std::fabs(g) + 1.0L;
    if (std::fabs(tf) + std::fabs(tg) + std::fabs(tfp) + std::fabs(tgp) < 1e-30L * scale) break;
  }
  return {kAi0 * f + kAiPrime0 * g, kAi0 * fp + kAiPrime0 * gp};
}

void check_window(double x) {
  if (!(std::fabs(x) <= kAirySeriesWindow)) {
    throw std::domain_error("airy_ai: |x| must be <= 8 (got " + std::to_string(x) + ")");
  }
}

// ln Ai(x) for large x: Ai(x) ~ e^{-z} / (2 sqrt(pi) x^{1/4}) sum (-1)^k u_k / z^k, z = (2/3) x^{3/2}.
double log_airy_large(double x) {
  const double z = 2.0 / 3.0 * x * std::sqrt(x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    // u_k / u_{k-1} = (6k-5)(6k-3)(6k-1) / ((2k-1) 216 k)
    const double next =
        -term * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k * z);
    if (std::fabs(next) >= std::fabs(term)) break;  // asymptotic series started to diverge
    term = next;
    sum += term;
    if (std::fabs(term) < 1e-17) break;
  }
  return -z - std::log(2.0 * std::sqrt(std::numbers::pi)) - 0.25 * std::log(x) + std::log(sum);
}

}  // namespace

double airy_ai(double x) {
  check_window(x);
  return static_cast<double>(maclaurin(x).value);
}

double airy_ai_prime(double x) {
  check_window(x);
  return static_cast<double>(maclaurin(x).derivative);
}

double log_airy_ai(double x) {
  if (x > kLogAiryExpansionFrom) return log_airy_large(x);
  const double v = airy_ai(x);
  if (!(v > 0.0)) throw std::domain_error("log_airy_ai: Ai(x) <= 0 at x = " + std::to_string(x));
  return std::log(v);
}

double airy_root_a1() {
  static const double root = [] {
    double lo = -3.0;  // Ai(-3) < 0
    double hi = -2.0;  // Ai(-2) > 0
    for (int i = 0; i < 60 && hi - lo > 1e-15; ++i) {
      const double mid = 0.5 * (lo + hi);
      (airy_ai(mid) > 0.0 ? hi : lo) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 3; ++i) x -= airy_ai(x) / airy_ai_prime(x);
    return x;
  }();
  return root;
}

}  // namespace tcnet::asymptotics
