#include "tcnet/propositions.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

#include "tcnet/airy.hpp"
#include "tcnet/asymptotics.hpp"

namespace tcnet::asymptotics {

double default_q_coeff(int d) { return 3.0 * d * d + 1.0; }
double alternative_q_coeff(int d) { return 3.0 * d * d + d - 1.0; }
double consistent_q_coeff(int d) { return 3.0 * d * d + 12.0 * d - 11.0; }
double default_eta(int d) {
  const double t = 2.0 * d - 1.0;
  return t * t / (18.0 * (d + 1.0) * (d + 1.0)) + 0.01;
}

namespace {

double s_common(int d, double n, double sign) {
  const AsymptoticParams p = params(d);
  return 2.0 + p.a1 * std::pow(p.B, 2.0 / 3.0) / std::pow(n, 2.0 / 3.0) -
         (3.0 * d * d - 5.0 * d + 4.0) / (3.0 * (d + 1.0) * n) + sign * std::pow(n, -7.0 / 6.0);
}

// Largest integer m with m < n^e.
int strict_floor(double n, double e) {
  return static_cast<int>(std::ceil(std::pow(n, e))) - 1;
}

// ln Ai(a1 + B^{1/3}(m+1)/n^{1/3}) for m = 0..m_max.
std::vector<double> airy_row(const AsymptoticParams& p, int n, int m_max) {
  std::vector<double> row(static_cast<std::size_t>(m_max + 1));
  const double scale = std::cbrt(p.B) / std::cbrt(static_cast<double>(n));
  for (int m = 0; m <= m_max; ++m) row[static_cast<std::size_t>(m)] = log_airy_ai(p.a1 + scale * (m + 1.0));
  return row;
}

PropositionReport sweep(int d, const SweepConfig& cfg, PropositionKind kind) {
  if (d < 2) throw std::invalid_argument("proposition sweep: d must be >= 2");
  if (cfg.n_lo < 3 || cfg.n_hi < cfg.n_lo || cfg.n_step < 1) {
    throw std::invalid_argument("proposition sweep: need 3 <= n_lo <= n_hi and n_step >= 1");
  }
  const bool sub = kind == PropositionKind::subsolution;
  const double exponent = (sub ? 2.0 / 3.0 : 1.0) - cfg.epsilon;
  const double eta = sub ? 0.0 : cfg.eta;
  const AsymptoticParams p = params(d);

  PropositionReport rep;
  rep.d = d;
  rep.kind = kind;
  rep.config = cfg;
  rep.config.eta = eta;
  int last_bad = -1;

  int prev_n = -1;
  std::vector<double> prev_row;
  for (int n = cfg.n_lo; n <= cfg.n_hi; n += cfg.n_step) {
    const int m_max = strict_floor(n, exponent);
    if (m_max < 0) continue;
    // Row n-1 is read up to m_max + 1.
    std::vector<double> lower = prev_n == n - 1 && static_cast<int>(prev_row.size()) >= m_max + 2
                                    ? std::move(prev_row)
                                    : airy_row(p, n - 1, m_max + 1);
    const std::vector<double> here = airy_row(p, n, m_max + 1);
    const double s = sub ? s_sub(d, n) : s_super(d, n);
    bool bad_here = false;
    for (int m = 0; m <= m_max; ++m) {
      const auto idx = static_cast<std::size_t>(m);
      const double l0 = here[idx];
      const double lhs = prefactor(d, n, m, cfg.q_coeff, eta) * s;
      const double t1 =
          mu(d, n, m) * prefactor(d, n - 1.0, m + 1.0, cfg.q_coeff, eta) * std::exp(lower[idx + 1] - l0);
      // X at m - 1 = -1 vanishes because Ai(a1) = 0.
      const double t2 =
          m > 0 ? nu(d, n, m) * prefactor(d, n - 1.0, m - 1.0, cfg.q_coeff, eta) * std::exp(lower[idx - 1] - l0)
                : 0.0;
      const double rhs = t1 + t2;
      const double tol = 1e-12 * (std::fabs(lhs) + std::fabs(t1) + std::fabs(t2));
      const bool bad = sub ? lhs - rhs > tol : rhs - lhs > tol;
      ++rep.samples;
      if (bad) {
        ++rep.violation_count;
        bad_here = true;
        if (rep.violations.size() < cfg.max_recorded) rep.violations.push_back({n, m, lhs, rhs});
      }
    }
    if (bad_here) last_bad = n;
    prev_n = n;
    prev_row = here;
  }
  rep.n_threshold = last_bad < 0 ? cfg.n_lo : last_bad + cfg.n_step;
  return rep;
}

}  // namespace

double s_sub(int d, double n) { return s_common(d, n, -1.0); }
double s_super(int d, double n) { return s_common(d, n, 1.0); }

double prefactor(int d, double n, double m, double q_coeff, double eta) {
  return 1.0 - (2.0 * d - 1.0) / (3.0 * (d + 1.0)) * m * m / n - q_coeff / (6.0 * (d + 1.0)) * m / n +
         eta * m * m * m * m / (n * n);
}

PropositionReport check_subsolution(int d, const SweepConfig& config) {
  return sweep(d, config, PropositionKind::subsolution);
}

PropositionReport check_supersolution(int d, const SweepConfig& config) {
  return sweep(d, config, PropositionKind::supersolution);
}

std::string PropositionReport::to_json() const {
  nlohmann::ordered_json j;
  j["d"] = d;
  j["check"] = kind == PropositionKind::subsolution ? "subsolution" : "supersolution";
  j["q_coeff"] = config.q_coeff;
  j["epsilon"] = config.epsilon;
  j["eta"] = config.eta;
  j["n_lo"] = config.n_lo;
  j["n_hi"] = config.n_hi;
  j["n_step"] = config.n_step;
  j["samples"] = samples;
  j["violation_count"] = violation_count;
  j["n_threshold"] = n_threshold;
  j["pass"] = pass();
  j["settled"] = settled();
  auto& arr = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) arr.push_back({{"n", v.n}, {"m", v.m}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  return j.dump();
}

}  // namespace tcnet::asymptotics
