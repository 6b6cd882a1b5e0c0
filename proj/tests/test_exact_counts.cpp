#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "tcnet/count_table.hpp"
#include "tcnet/errors.hpp"
#include "tcnet/exact_counts.hpp"

using namespace tcnet;
using counts::Params;

TEST_CASE("factorial, double factorial and binomial") {
  CHECK(counts::factorial(0) == BigCount(1));
  CHECK(counts::factorial(5) == BigCount(120));
  CHECK(counts::factorial(8) == BigCount(40320));
  CHECK(counts::factorial(30).to_string() == "265252859812191058636308480000000");

  CHECK(counts::double_factorial_odd(-1) == BigCount(1));
  CHECK(counts::double_factorial_odd(0) == BigCount(1));
  CHECK(counts::double_factorial_odd(1) == BigCount(1));
  CHECK(counts::double_factorial_odd(5) == BigCount(15));
  CHECK_THROWS_AS(counts::double_factorial_odd(4), std::invalid_argument);

  CHECK(counts::binomial(4, 1) == BigCount(4));
  CHECK(counts::binomial(5, 2) == BigCount(10));
  CHECK(counts::binomial(3, 5) == BigCount(0));
}

TEST_CASE("BigCount basics") {
  const BigCount a = BigCount::from_string("123456789012345678901234567890");
  CHECK(a.to_string() == "123456789012345678901234567890");
  CHECK_FALSE(a.fits_u64());
  CHECK(std::fabs(a.log() - std::log(1.2345678901234568e29)) < 1e-12);
  CHECK(BigCount(0).log() == -std::numeric_limits<double>::infinity());
  CHECK(divide_exact(BigCount(120), BigCount(24)) == BigCount(5));
  CHECK_THROWS_AS(divide_exact(BigCount(7), BigCount(2)), IntegralityError);
  const auto q = divide_floor(BigCount(7), BigCount(2));
  CHECK(q.floor == BigCount(3));
  CHECK_FALSE(q.exact);
  CHECK_THROWS(BigCount::from_string("-4"));
}

TEST_CASE("otc_count examples") {
  CHECK(counts::otc_count({2, 2, 1}) == BigCount(2));
  for (int d = 2; d <= 6; ++d) CHECK(counts::otc_count({d, 4, 0}) == BigCount(15));
  CHECK(counts::otc_count({3, 3, 2}) == BigCount(60));
  CHECK(counts::otc_count({2, 3, 1}) == BigCount(18));
  CHECK(counts::otc_count({2, 3, 3}) == BigCount(0));
  CHECK(counts::otc_count({2, 3, -1}) == BigCount(0));
  CHECK_THROWS_AS(counts::otc_count({1, 3, 1}), std::invalid_argument);
}

TEST_CASE("otc_count agrees with a 128-bit evaluation") {
  for (int d = 2; d <= 5; ++d) {
    for (int n = 1; n <= 10; ++n) {
      for (int k = 0; k < n; ++k) {
        if (2 * n + (d - 2) * k - 2 > 30) continue;
        CAPTURE(d);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(counts::otc_count({d, n, k}).to_string() == oracles::otc_small(d, n, k));
      }
    }
  }
}

TEST_CASE("k = 0 column is the number of phylogenetic trees") {
  for (int n = 1; n <= 20; ++n) CHECK(counts::otc_count({4, n, 0}) == counts::double_factorial_odd(2 * n - 3));
}

TEST_CASE("otc_total") {
  CHECK(counts::otc_total(2, 2) == BigCount(3));
  CHECK(counts::otc_total(3, 2) == BigCount(3));
  CHECK(counts::otc_total(2, 1) == BigCount(1));
}

TEST_CASE("exact division holds up to n = 60") {
  for (int d = 2; d <= 6; ++d) {
    for (int n = 1; n <= 60; ++n) {
      for (int k = 0; k < n; ++k) CHECK_NOTHROW((void)counts::otc_count({d, n, k}));
    }
  }
}

TEST_CASE("step identity k OTC(n,k) = n C(2n+(d-2)k-2, d) OTC(n-1,k-1)") {
  for (int d = 2; d <= 6; ++d) {
    for (int n = 2; n <= 40; ++n) {
      for (int k = 1; k < n; ++k) {
        const BigCount lhs = counts::otc_count({d, n, k}) * static_cast<std::uint64_t>(k);
        const BigCount rhs = counts::otc_count({d, n - 1, k - 1}) * static_cast<std::uint64_t>(n) *
                             counts::binomial(static_cast<unsigned>(2 * n + (d - 2) * k - 2), static_cast<unsigned>(d));
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("d = 3 counts are nondecreasing in k") {
  for (int n = 2; n <= 40; ++n) {
    for (int k = 0; k + 1 < n; ++k) CHECK(counts::otc_count({3, n, k}) <= counts::otc_count({3, n, k + 1}));
  }
}

TEST_CASE("node_counts") {
  auto nc = counts::node_counts({2, 4, 0});
  CHECK(nc.tree_nodes == 3);
  CHECK(nc.total_nodes == 8);
  nc = counts::node_counts({3, 3, 2});
  CHECK(nc.tree_nodes == 6);
  CHECK(nc.total_nodes == 12);
  nc = counts::node_counts({2, 2, 1});
  CHECK(nc.tree_nodes == 2);
  CHECK(nc.total_nodes == 6);
}

TEST_CASE("tc_upper_bound") {
  const BigCount tc8 = BigCount::from_string("8485564550400");
  auto b = counts::tc_upper_bound({2, 8, 6}, tc8);
  CHECK(b.floor == BigCount::from_string("4242782275200"));
  CHECK(b.exact);
  b = counts::tc_upper_bound({2, 8, 7}, tc8);
  CHECK(b.floor == tc8);
  const BigCount tc7 = BigCount::from_string("560319972030000");
  b = counts::tc_upper_bound({3, 7, 5}, tc7);
  CHECK(b.floor == BigCount::from_string("280159986015000"));
  CHECK(appendix_table(3).at(7, 5) <= b.floor);
  CHECK(appendix_table(3).at(7, 5) == BigCount::from_string("40079165452200"));
}

TEST_CASE("fixture tables") {
  CHECK(appendix_table(2).at(4, 3) == BigCount(2544));
  CHECK(appendix_table(3).at(3, 2) == BigCount(150));
  CHECK(appendix_table(6).at(5, 4) == BigCount::from_string("483098464854720"));
  CHECK_THROWS_AS(appendix_table(7), std::invalid_argument);
  CHECK_THROWS_AS((void)appendix_table(2).at(4, 4), std::out_of_range);
  for (int d = 2; d <= 6; ++d) {
    const CountTable& t = appendix_table(d);
    for (int n = t.n_min(); n <= t.n_max(); ++n) {
      CHECK(t.row(n).size() == static_cast<std::size_t>(n));
      // One-component networks are tree-child.
      for (int k = 0; k < n; ++k) CHECK(counts::otc_count({d, n, k}) <= t.at(n, k));
    }
  }
}

TEST_CASE("fixture sandwich and step inequalities") {
  for (int d = 2; d <= 6; ++d) {
    const CountTable& t = appendix_table(d);
    for (int n = t.n_min(); n <= t.n_max(); ++n) {
      const BigCount top = t.at(n, n - 1);
      const BigCount total = t.row_total(n);
      CHECK(top <= total);
      CHECK(total.log() <= top.log() + 0.5);
      for (int k = 0; k + 1 < n; ++k) {
        CHECK(t.at(n, k) * static_cast<std::uint64_t>(2 * (n - k - 1)) <= t.at(n, k + 1));
      }
    }
  }
}

TEST_CASE("CountTable serialization round trip") {
  const CountTable t = otc_table(3, 1, 6);
  CHECK(t.provenance() == Provenance::formula);
  const std::string csv = t.to_csv();
  CHECK(csv.rfind("n,k,count\n", 0) == 0);
  CHECK(csv.find("3,2,60\n") != std::string::npos);
  const std::string json = t.to_json();
  CHECK(json.find(R"({"n":3,"k":2,"count":"60"})") != std::string::npos);
  const CountTable back = CountTable::from_json(json, Provenance::formula);
  CHECK(back.d() == 3);
  CHECK(back.n_min() == 1);
  CHECK(back.n_max() == 6);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) CHECK(back.at(n, k) == t.at(n, k));
  }
  CHECK(appendix_table(2).to_json().rfind(R"({"d":2,"entries":[)", 0) == 0);
}
