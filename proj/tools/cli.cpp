#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcnet/airy.hpp"
#include "tcnet/asymptotics.hpp"
#include "tcnet/count_table.hpp"
#include "tcnet/distributions.hpp"
#include "tcnet/enumerate.hpp"
#include "tcnet/errors.hpp"
#include "tcnet/exact_counts.hpp"
#include "tcnet/network_io.hpp"
#include "tcnet/propositions.hpp"
#include "tcnet/words.hpp"

#ifndef TCNET_VERSION
#define TCNET_VERSION "0.0.0"
#endif

namespace tcnet::cli {

namespace {

using json = nlohmann::ordered_json;
namespace asy = tcnet::asymptotics;

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json envelope(const std::string& command, json params, json result) {
  json j;
  j["command"] = command;
  j["params"] = std::move(params);
  j["result"] = std::move(result);
  j["version"] = TCNET_VERSION;
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::vector<int> degrees_or(int d, std::vector<int> fallback) {
  return d > 0 ? std::vector<int>{d} : fallback;
}

double parse_q(const std::string& q, int d) {
  if (q == "literal") return asy::default_q_coeff(d);
  if (q == "alternative") return asy::alternative_q_coeff(d);
  if (q == "consistent") return asy::consistent_q_coeff(d);
  try {
    std::size_t used = 0;
    const double v = std::stod(q, &used);
    if (used == q.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--q must be literal, alternative, consistent or a number (got '" + q + "')");
}

// ---- count ---------------------------------------------------------------

struct CountArgs {
  std::string what;
  int d = 2;
  int n = 0;
  std::optional<int> k;
  std::optional<int> m;
  std::string format = "plain";
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  BigCount value;
  if (a.what == "otc") {
    if (!a.k) throw UsageError("count otc needs --k");
    value = counts::otc_count({a.d, a.n, *a.k});
  } else if (a.what == "total") {
    value = counts::otc_total(a.d, a.n);
  } else if (a.what == "tcmax") {
    if (a.n < 2) throw UsageError("count tcmax needs --n >= 2");
    value = words::tc_max_count(a.d, a.n);
  } else if (a.what == "c") {
    value = words::c_count(a.d, a.n);
  } else {
    if (!a.m) throw UsageError("count b needs --m");
    value = words::b_table_int(a.d, a.n).at(a.n, *a.m);
  }
  if (a.format == "json") {
    json params{{"what", a.what}, {"d", a.d}, {"n", a.n}};
    if (a.k) params["k"] = *a.k;
    if (a.m) params["m"] = *a.m;
    emit(out, envelope("count", params, json{{"value", value.to_string()}}));
  } else {
    out << value << '\n';
  }
  return kOk;
}

// ---- enumerate -----------------------------------------------------------

struct EnumerateArgs {
  std::string what;
  int d = 2;
  int n = 0;
  std::optional<int> k;
  std::string cls = "tc";
  std::optional<std::string> format;
  std::optional<std::uint64_t> budget;
  unsigned threads = 0;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  json params{{"what", a.what}, {"d", a.d}, {"n", a.n}};
  if (a.what == "networks") {
    if (!a.k) throw UsageError("enumerate networks needs --k");
    const std::string format = a.format.value_or("count");
    if (format == "plain") throw UsageError("enumerate networks supports --format json|dot|count");
    networks::EnumerationBudget budget;
    if (a.budget) budget.max_candidates = *a.budget;
    budget.threads = a.threads;
    params["k"] = *a.k;
    params["class"] = a.cls;
    const bool tc = a.cls == "tc";
    if (format == "count") {
      out << (tc ? networks::count_tc(a.d, a.n, *a.k, budget) : networks::count_otc(a.d, a.n, *a.k, budget)) << '\n';
      return kOk;
    }
    const auto nets = tc ? networks::enumerate_tc(a.d, a.n, *a.k, budget) : networks::enumerate_otc(a.d, a.n, *a.k, budget);
    if (format == "dot") {
      for (std::size_t i = 0; i < nets.size(); ++i) {
        if (i) out << '\n';
        out << networks::export_network(nets[i], networks::ExportFormat::dot);
      }
      return kOk;
    }
    json list = json::array();
    for (const auto& net : nets) list.push_back(json::parse(networks::export_network(net, networks::ExportFormat::json)));
    emit(out, envelope("enumerate", params, json{{"count", nets.size()}, {"networks", std::move(list)}}));
    return kOk;
  }

  const std::string format = a.format.value_or("plain");
  if (format == "dot") throw UsageError("enumerate words supports --format plain|json|count");
  words::Budget budget;
  if (a.budget) budget.max_nodes = *a.budget;
  std::uint64_t count = 0;
  json list = json::array();
  words::enumerate_words(a.d, a.n, [&](const words::Word& w) {
    ++count;
    if (format == "plain") out << w.to_string() << '\n';
    if (format == "json") list.push_back(w.to_string());
  }, budget);
  if (format == "count") out << count << '\n';
  if (format == "json") emit(out, envelope("enumerate", params, json{{"count", count}, {"words", std::move(list)}}));
  return kOk;
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
  std::string what;
  int d = 2;
  int n_min = 1;
  int n_max = 8;
  std::string format = "csv";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  if (a.what == "tcmax") {
    if (a.n_max < 2) throw UsageError("table tcmax needs --n-max >= 2");
    const auto c = words::c_sequence(a.d, a.n_max - 1);
    if (a.format == "json") {
      json entries = json::array();
      for (int n = 2; n <= a.n_max; ++n) {
        entries.push_back({{"n", n}, {"count", (counts::factorial(n) * c[static_cast<std::size_t>(n - 2)]).to_string()}});
      }
      out << json{{"d", a.d}, {"entries", std::move(entries)}}.dump() << '\n';
    } else {
      out << "n,count\n";
      for (int n = 2; n <= a.n_max; ++n) out << n << ',' << counts::factorial(n) * c[static_cast<std::size_t>(n - 2)] << '\n';
    }
    return kOk;
  }
  const CountTable table = [&] {
    if (a.what == "otc") return otc_table(a.d, a.n_min, a.n_max);
    if (a.what == "fixture") return appendix_table(a.d);
    return words::b_table_int(a.d, a.n_max).to_count_table(Provenance::recurrence);
  }();
  out << (a.format == "json" ? table.to_json() + "\n" : table.to_csv());
  return kOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int d = 0;
  std::optional<int> n_max;
  std::string q = "literal";
  int n_lo = 200;
  int n_hi = 5000;
  int n_step = 1;
  double epsilon = 0.1;
  std::optional<double> eta;
};

// Collects named checks; the first failure of each keeps its witness.
class Suite {
 public:
  void check(const std::string& name, bool ok, json witness = json::object()) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, checks_.size()).first;
      checks_.push_back({{"name", name}, {"pass", true}, {"cases", 0}});
    }
    json& c = checks_[it->second];
    c["cases"] = c["cases"].get<int>() + 1;
    if (!ok && c["pass"].get<bool>()) {
      c["pass"] = false;
      c["witness"] = std::move(witness);
    }
    pass_ = pass_ && ok;
  }
  void attach(const std::string& key, json value) { extra_[key] = std::move(value); }
  [[nodiscard]] bool pass() const { return pass_; }
  [[nodiscard]] json to_json() const {
    json j{{"pass", pass_}, {"checks", checks_}};
    for (const auto& [k, v] : extra_.items()) j[k] = v;
    return j;
  }

 private:
  bool pass_ = true;
  json checks_ = json::array();
  std::map<std::string, std::size_t> index_;
  json extra_ = json::object();
};

void suite_tables(const VerifyArgs& a, Suite& s) {
  for (int d : degrees_or(a.d, {2, 3, 4, 5, 6})) {
    const CountTable& t = appendix_table(d);
    for (int n = t.n_min(); n <= t.n_max(); ++n) {
      const BigCount got = words::tc_max_count(d, n);
      s.check("tc_max_count", got == t.at(n, n - 1),
              {{"d", d}, {"n", n}, {"expected", t.at(n, n - 1).to_string()}, {"got", got.to_string()}});
    }
    const int brute = std::min(t.n_max(), a.n_max.value_or(d <= 3 ? 4 : 3));
    for (int n = t.n_min(); n <= brute; ++n) {
      for (int k = 0; k < n; ++k) {
        const auto got = networks::count_tc(d, n, k);
        s.check("enumerate_tc", BigCount(got) == t.at(n, k),
                {{"d", d}, {"n", n}, {"k", k}, {"expected", t.at(n, k).to_string()}, {"got", got}});
      }
    }
  }
}

void suite_formulas(const VerifyArgs& a, Suite& s) {
  for (int d : degrees_or(a.d, {2, 3, 4, 5})) {
    const int brute = a.n_max.value_or(d <= 3 ? 4 : 3);
    for (int n = 1; n <= brute; ++n) {
      for (int k = 0; k < n; ++k) {
        const auto got = networks::count_otc(d, n, k);
        const BigCount want = counts::otc_count({d, n, k});
        s.check("otc_count", BigCount(got) == want,
                {{"d", d}, {"n", n}, {"k", k}, {"expected", want.to_string()}, {"got", got}});
      }
    }
    for (int n = 2; n <= 30; ++n) {
      for (int k = 1; k < n; ++k) {
        const BigCount lhs = counts::otc_count({d, n, k}) * static_cast<std::uint64_t>(k);
        const BigCount rhs = counts::otc_count({d, n - 1, k - 1}) * static_cast<std::uint64_t>(n) *
                             counts::binomial(static_cast<unsigned>(2 * n + (d - 2) * k - 2), static_cast<unsigned>(d));
        s.check("otc_step_identity", lhs == rhs, {{"d", d}, {"n", n}, {"k", k}});
      }
    }
    const int n_b = 30;
    s.check("b_table_int_equals_rational", words::b_table_int(d, n_b) == words::b_table_rational(d, n_b),
            {{"d", d}, {"n_max", n_b}});
    for (int n = 2; n <= n_b; ++n) s.check("bnn_identity", words::bnn_identity_check(d, n), {{"d", d}, {"n", n}});
  }
}

void suite_words(const VerifyArgs& a, Suite& s) {
  const int len = a.n_max.value_or(12);
  for (int d : degrees_or(a.d, {2, 3, 4, 5})) {
    for (int n = 1; n * (d + 1) <= len; ++n) {
      const words::BTable b = words::b_table_int(d, n);
      std::vector<std::uint64_t> by_m(static_cast<std::size_t>(n + 1), 0);
      std::uint64_t total = 0;
      words::enumerate_words(d, n, [&](const words::Word& w) {
        ++total;
        ++by_m[static_cast<std::size_t>(words::suffix_index(w))];
      });
      s.check("word_count", BigCount(total) == b.c(n),
              {{"d", d}, {"n", n}, {"expected", b.c(n).to_string()}, {"got", total}});
      for (int m = 1; m <= n; ++m) {
        s.check("suffix_partition", BigCount(by_m[static_cast<std::size_t>(m)]) == b.at(n, m),
                {{"d", d}, {"n", n}, {"m", m}, {"expected", b.at(n, m).to_string()}, {"got", by_m[static_cast<std::size_t>(m)]}});
      }
    }
  }
}

void suite_sandwich(const VerifyArgs& a, Suite& s) {
  const double half = 0.5;  // ln sqrt(e)
  for (int d : degrees_or(a.d, {2, 3, 4, 5, 6})) {
    const CountTable& t = appendix_table(d);
    for (int n = t.n_min(); n <= t.n_max(); ++n) {
      const double top = t.at(n, n - 1).log();
      const double total = t.row_total(n).log();
      s.check("sandwich", top <= total && total <= top + half,
              {{"d", d}, {"n", n}, {"ln_tc_max", top}, {"ln_total", total}});
      for (int k = 0; k + 1 < n; ++k) {
        s.check("step_bound", t.at(n, k) * static_cast<std::uint64_t>(2 * (n - k - 1)) <= t.at(n, k + 1),
                {{"d", d}, {"n", n}, {"k", k}});
      }
      if (d == 2 && n >= 3) {
        const auto bound = counts::tc_upper_bound({d, n, n - 2}, t.at(n, n - 1));
        s.check("d2_bound_attained", bound.exact && bound.floor == t.at(n, n - 2),
                {{"n", n}, {"bound", bound.floor.to_string()}, {"count", t.at(n, n - 2).to_string()}});
      }
    }
  }
}

void suite_props(const VerifyArgs& a, Suite& s) {
  json reports = json::array();
  for (int d : degrees_or(a.d, {2})) {
    asy::SweepConfig cfg;
    cfg.n_lo = a.n_lo;
    cfg.n_hi = a.n_hi;
    cfg.n_step = a.n_step;
    cfg.epsilon = a.epsilon;
    cfg.q_coeff = parse_q(a.q, d);
    cfg.eta = a.eta.value_or(asy::default_eta(d));
    for (const auto& rep : {asy::check_subsolution(d, cfg), asy::check_supersolution(d, cfg)}) {
      const std::string name = rep.kind == asy::PropositionKind::subsolution ? "subsolution" : "supersolution";
      s.check(name, rep.settled(), {{"d", d}, {"n_threshold", rep.n_threshold}});
      reports.push_back(json::parse(rep.to_json()));
    }
  }
  s.attach("reports", std::move(reports));
}

void suite_asym(const VerifyArgs& a, Suite& s) {
  for (int d : degrees_or(a.d, {2, 3, 4})) {
    if (d == 2) {
      std::vector<double> gaps;
      json ratios = json::array();
      for (int n : {250, 500, 1000, 2000}) {
        const double r = std::exp(asy::ln_otc_total(d, n) - asy::otc_total_asymptotic(d, n).ln);
        gaps.push_back(std::fabs(r - 1.0));
        ratios.push_back(r);
      }
      const bool ok = std::is_sorted(gaps.rbegin(), gaps.rend()) &&
                      std::adjacent_find(gaps.begin(), gaps.end()) == gaps.end();
      s.check("otc_total_monotone", ok, {{"d", d}, {"ratios", ratios}});
    } else {
      const double r = std::exp(asy::ln_otc_total(d, 500) - asy::otc_total_asymptotic(d, 500).ln);
      s.check("otc_total_2pct", std::fabs(r - 1.0) < 0.02, {{"d", d}, {"ratio", r}});
    }
    if (d == 2 || d == 3) {
      const auto exact = asy::ln_tc_max_exact(d, 2000);
      const auto w = asy::theta_residuals(d, 500, 2000, exact);
      s.check("theta_oscillation", w.oscillation() < 0.5, {{"d", d}, {"oscillation", w.oscillation()}});
      const auto wrong = asy::theta_residuals(d, 500, 2000, exact, -asy::airy_root_a1());
      s.check("theta_sign", wrong.oscillation() > 5.0, {{"d", d}, {"oscillation", wrong.oscillation()}});
    }
  }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  static const std::map<std::string, std::function<void(const VerifyArgs&, Suite&)>> suites{
      {"tables", suite_tables}, {"formulas", suite_formulas}, {"words", suite_words},
      {"sandwich", suite_sandwich}, {"props", suite_props}, {"asym", suite_asym}};
  Suite s;
  suites.at(a.suite)(a, s);
  json params{{"suite", a.suite}};
  if (a.d > 0) params["d"] = a.d;
  if (a.suite == "props") params["q"] = a.q;
  emit(out, envelope("verify", params, s.to_json()));
  return s.pass() ? kOk : kVerificationFailed;
}

// ---- dist ----------------------------------------------------------------

struct DistArgs {
  int d = 2;
  int n = 0;
  std::optional<std::string> limit;
  std::optional<std::string> exploratory;
  std::string format = "json";
};

int cmd_dist(const DistArgs& a, std::ostream& out) {
  namespace dist = tcnet::distributions;
  json params{{"d", a.d}, {"n", a.n}};
  if (a.limit) {
    params["limit"] = *a.limit;
    json result;
    if (*a.limit == "bessel") {
      if (a.d != 3) throw UsageError("--limit bessel applies to d = 3");
      result["tv"] = dist::bessel_limit_check(a.n);
    } else if (*a.limit == "normal") {
      if (a.d != 2) throw UsageError("--limit normal applies to d = 2");
      const auto c = dist::normal_limit_check(a.n);
      result = {{"sup_distance", c.sup_distance}, {"mean", c.moments.mean}, {"variance", c.moments.variance},
                {"abs_third", c.moments.abs_third}};
    } else {
      if (a.d < 4) throw UsageError("--limit degenerate applies to d >= 4");
      result["p_max"] = dist::degenerate_check(a.d, a.n);
    }
    emit(out, envelope("dist", params, result));
    return kOk;
  }
  if (a.exploratory) {
    params["exploratory"] = *a.exploratory;
    const auto rep = dist::conjecture_poisson_report(appendix_table(a.d), a.n);
    json rows = json::array();
    for (const auto& r : rep.rows) rows.push_back({{"deficiency", r.deficiency}, {"empirical", r.empirical}, {"poisson", r.poisson}});
    emit(out, envelope("dist", params, json{{"rate", 0.5}, {"rows", std::move(rows)}}));
    return kOk;
  }
  const auto pmf = dist::r_pmf(a.d, a.n);
  if (a.format == "csv") {
    out << pmf.to_csv();
  } else {
    emit(out, envelope("dist", params, json{{"mode", pmf.mode()}, {"log_probs", pmf.log_probs}}));
  }
  return kOk;
}

// ---- asym ----------------------------------------------------------------

struct AsymArgs {
  std::string what;
  int d = 2;
  int n = 0;
  int n_max = 5000;
  std::string source = "e";
  std::vector<int> window{500, 2000};
  std::optional<double> a1;
  int count = 30;
  bool prefactor = false;
  std::string format = "plain";
};

int cmd_asym(const AsymArgs& a, std::ostream& out) {
  json params{{"what", a.what}};
  if (a.what == "root") {
    const double r = asy::airy_root_a1();
    if (a.format == "json") {
      emit(out, envelope("asym", params, json{{"a1", r}, {"ai_at_root", asy::airy_ai(r)}}));
    } else {
      out << fmt_double(r) << '\n';
    }
    return kOk;
  }
  params["d"] = a.d;
  const asy::AsymptoticParams p = asy::params(a.d);
  json result;
  if (a.what == "fit") {
    params["n_max"] = a.n_max;
    params["source"] = a.source;
    std::vector<double> ns;
    std::vector<double> ys;
    if (a.source == "e") {
      const auto e = asy::e_diagonal(a.d, a.n_max);
      for (int n = 1; n <= a.n_max; ++n) {
        ns.push_back(n);
        ys.push_back(e[static_cast<std::size_t>(n - 1)] - n * std::log(4.0));
      }
    } else {
      const auto ex = asy::ln_tc_max_exact(a.d, a.n_max);
      for (int n = 2; n <= a.n_max; ++n) {
        ns.push_back(n);
        ys.push_back(ex[static_cast<std::size_t>(n - 2)] - a.d * asy::ln_factorial(n) - n * std::log(p.gamma));
      }
    }
    const auto f = asy::stretched_fit(ns, ys);
    const double target = 3.0 * p.a1 * p.beta;
    result = {{"c0", f.c0}, {"c1", f.c1}, {"c2", f.c2}, {"target_c1", target},
              {"rel_err", std::fabs(f.c1 / target - 1.0)}, {"points_used", f.points_used}};
  } else if (a.what == "residual") {
    if (a.window.size() != 2) throw UsageError("--window takes two values");
    const int lo = a.window[0];
    const int hi = a.window[1];
    params["window"] = a.window;
    if (a.a1) params["a1"] = *a.a1;
    const auto w = asy::theta_residuals(a.d, lo, hi, a.a1);
    const auto [mn, mx] = std::minmax_element(w.residual.begin(), w.residual.end());
    json dyadic = json::array();
    for (int n = lo; 2 * n <= hi; n *= 2) dyadic.push_back({{"n", n}, {"diff", std::fabs(w.at(2 * n) - w.at(n))}});
    result = {{"min", *mn}, {"max", *mx}, {"oscillation", w.oscillation()}, {"dyadic", std::move(dyadic)}};
  } else if (a.what == "theta") {
    if (a.n < 2) throw UsageError("asym theta needs --n >= 2");
    params["n"] = a.n;
    result["ln_theta"] = asy::theta_tc_max(a.d, a.n, a.a1).ln;
    if (a.n <= 3000) {
      const double exact = asy::ln_factorial(a.n) + words::c_count(a.d, a.n - 1).log();
      result["ln_exact"] = exact;
      result["residual"] = exact - result["ln_theta"].get<double>();
    }
  } else if (a.what == "profile") {
    params["n"] = a.n;
    params["count"] = a.count;
    params["prefactor"] = a.prefactor;
    result["max_rel_deviation"] = asy::airy_profile_deviation(a.d, a.n, a.count, a.prefactor);
  } else {
    params["n"] = a.n;
    result["ln_product"] = asy::lower_bound_product(a.d, a.n).ln;
    result["first_index"] = asy::first_positive_index(a.d);
  }
  emit(out, envelope("asym", params, result));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, enumeration and asymptotics of d-combining tree-child networks", "tcnet"};
  app.require_subcommand(1);
  app.set_version_flag("--version", TCNET_VERSION);

  const auto degree = CLI::Range(2, 64);
  const auto positive = CLI::Range(1, 1 << 20);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Print an exact count");
  c->add_option("what", count.what, "otc | total | tcmax | c | b")->required()->check(CLI::IsMember({"otc", "total", "tcmax", "c", "b"}));
  c->add_option("--d", count.d, "Parents per reticulation")->check(degree);
  c->add_option("--n", count.n, "Leaves (or word alphabet size)")->required()->check(positive);
  c->add_option("--k", count.k, "Reticulations");
  c->add_option("--m", count.m, "Suffix index for b");
  c->add_option("--format", count.format)->check(CLI::IsMember({"plain", "json"}));

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "Enumerate networks or words");
  e->add_option("what", en.what, "networks | words")->required()->check(CLI::IsMember({"networks", "words"}));
  e->add_option("--d", en.d)->check(degree);
  e->add_option("--n", en.n)->required()->check(positive);
  e->add_option("--k", en.k)->check(CLI::NonNegativeNumber);
  e->add_option("--class", en.cls, "tc | otc")->check(CLI::IsMember({"tc", "otc"}));
  e->add_option("--format", en.format, "json | dot | count | plain")->check(CLI::IsMember({"json", "dot", "count", "plain"}));
  e->add_option("--budget", en.budget, "Work limit (candidates for networks, search states for words)");
  e->add_option("--threads", en.threads, "Worker threads (0 = all cores)");

  TableArgs tb;
  auto* t = app.add_subcommand("table", "Print a count table");
  t->add_option("what", tb.what, "otc | fixture | b | tcmax")->required()->check(CLI::IsMember({"otc", "fixture", "b", "tcmax"}));
  t->add_option("--d", tb.d)->check(degree);
  t->add_option("--n-min", tb.n_min)->check(positive);
  t->add_option("--n-max", tb.n_max)->check(positive);
  t->add_option("--format", tb.format)->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs vf;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", vf.suite)->required()->check(CLI::IsMember({"tables", "formulas", "words", "sandwich", "props", "asym"}));
  v->add_option("--d", vf.d, "Restrict to one d")->check(degree);
  v->add_option("--n-max", vf.n_max, "Brute-force range (word length for the words suite)")->check(positive);
  v->add_option("--q", vf.q, "Prefactor coefficient: literal | alternative | consistent | number");
  v->add_option("--n-lo", vf.n_lo)->check(positive);
  v->add_option("--n-hi", vf.n_hi)->check(positive);
  v->add_option("--n-step", vf.n_step)->check(positive);
  v->add_option("--eps", vf.epsilon)->check(CLI::Range(0.0, 0.6));
  v->add_option("--eta", vf.eta);

  DistArgs ds;
  auto* di = app.add_subcommand("dist", "Reticulation-number distributions");
  di->add_option("--d", ds.d)->check(degree);
  di->add_option("--n", ds.n)->required()->check(positive);
  auto* lim = di->add_option("--limit", ds.limit)->check(CLI::IsMember({"normal", "bessel", "degenerate"}));
  di->add_option("--exploratory", ds.exploratory)->check(CLI::IsMember({"poisson"}))->excludes(lim);
  di->add_option("--format", ds.format)->check(CLI::IsMember({"json", "csv"}));

  AsymArgs as;
  auto* an = app.add_subcommand("asym", "Asymptotic checks");
  an->add_option("what", as.what, "root | fit | residual | theta | profile | bound")->required()
      ->check(CLI::IsMember({"root", "fit", "residual", "theta", "profile", "bound"}));
  an->add_option("--d", as.d)->check(degree);
  an->add_option("--n", as.n)->check(positive);
  an->add_option("--n-max", as.n_max)->check(CLI::Range(100, 1 << 20));
  an->add_option("--source", as.source, "e | tc")->check(CLI::IsMember({"e", "tc"}));
  an->add_option("--window", as.window)->expected(2);
  an->add_option("--a1", as.a1, "Override the Airy zero in theta");
  an->add_option("--count", as.count)->check(positive);
  an->add_flag("--prefactor", as.prefactor, "Include the sub-solution prefactor in the profile");
  an->add_option("--format", as.format)->check(CLI::IsMember({"plain", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (c->parsed()) return cmd_count(count, out);
    if (e->parsed()) return cmd_enumerate(en, out);
    if (t->parsed()) return cmd_table(tb, out);
    if (v->parsed()) return cmd_verify(vf, out);
    if (di->parsed()) return cmd_dist(ds, out);
    return cmd_asym(as, out);
  } catch (const BudgetExceeded& ex) {
    err << "budget exceeded: " << ex.what() << '\n';
    return kBudgetExceeded;
  } catch (const UsageError& ex) {
    err << ex.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& ex) {
    err << ex.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& ex) {
    err << ex.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& ex) {
    err << ex.what() << '\n';
    return kUsageError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace tcnet::cli
