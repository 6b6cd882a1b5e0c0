#include <stdexcept>
#include <string>

#include "tcnet/errors.hpp"
#include "tcnet/exact_counts.hpp"
#include "tcnet/words.hpp"

namespace tcnet::words {

namespace {

void check_d_n(int d, int n_max) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
}

// C(dn+m-2, d-1), the number of placements of the first d-1 copies of omega_n.
mpz_class placement_binomial(int d, int n, int m) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(d * n + m - 2), static_cast<unsigned long>(d - 1));
  return out;
}

}  // namespace

BTable::BTable(int d, int n_max) : d_(d), n_max_(n_max) {
  check_d_n(d, n_max);
  cells_.resize(static_cast<std::size_t>(n_max) * static_cast<std::size_t>(n_max + 1) / 2);
}

std::size_t BTable::index(int n, int m) const {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 + static_cast<std::size_t>(m - 1);
}

BigCount BTable::at(int n, int m) const {
  if (n < 1 || n > n_max_) throw std::out_of_range("BTable row n=" + std::to_string(n) + " not computed");
  if (m < 1 || m > n) return 0;
  return cells_[index(n, m)];
}

void BTable::set(int n, int m, BigCount v) {
  if (n < 1 || n > n_max_ || m < 1 || m > n) throw std::out_of_range("BTable::set outside 1 <= m <= n <= n_max");
  cells_[index(n, m)] = std::move(v);
}

BigCount BTable::c(int n) const {
  BigCount sum = 0;
  for (int m = 1; m <= n; ++m) sum += at(n, m);
  return sum;
}

CountTable BTable::to_count_table(Provenance provenance) const {
  return CountTable(d_, 1, n_max_, provenance, [this](int n, int k) { return at(n, k + 1); });
}

BTable b_table_int(int d, int n_max) {
  BTable t(d, n_max);
  t.set(1, 1, 1);
  for (int n = 2; n <= n_max; ++n) {
    mpz_class prefix = 0;
    for (int m = 1; m <= n; ++m) {
      prefix += t.at(n - 1, m).raw();
      t.set(n, m, BigCount(mpz_class(placement_binomial(d, n, m) * prefix)));
    }
  }
  return t;
}

BTable b_table_rational(int d, int n_max) {
  check_d_n(d, n_max);
  // Exact rationals throughout; integrality of every entry is checked at the end.
  std::vector<mpq_class> prev{mpq_class(0), mpq_class(1)};  // index m, row n = 1
  BTable t(d, n_max);
  t.set(1, 1, 1);
  for (int n = 2; n <= n_max; ++n) {
    std::vector<mpq_class> row(static_cast<std::size_t>(n) + 1, mpq_class(0));
    for (int m = 0; m <= n; ++m) {
      const mpq_class left = m == 0 ? mpq_class(0) : row[static_cast<std::size_t>(m - 1)];
      const mpq_class up = m <= n - 1 ? prev[static_cast<std::size_t>(m)] : mpq_class(0);
      mpq_class ratio(d * n + m - 2, d * n + m - d - 1);
      ratio.canonicalize();
      row[static_cast<std::size_t>(m)] = ratio * left + mpq_class(placement_binomial(d, n, m)) * up;
    }
    for (int m = 1; m <= n; ++m) {
      const mpq_class& v = row[static_cast<std::size_t>(m)];
      if (v.get_den() != 1) {
        throw IntegralityError("rational b-recurrence produced non-integral b(" + std::to_string(n) + "," +
                               std::to_string(m) + ") = " + v.get_str());
      }
      t.set(n, m, BigCount(v.get_num()));
    }
    prev = std::move(row);
  }
  return t;
}

std::vector<BigCount> c_sequence(int d, int n_max) {
  check_d_n(d, n_max);
  std::vector<BigCount> out;
  out.reserve(static_cast<std::size_t>(n_max));
  std::vector<mpz_class> row{mpz_class(1)};  // b(1, 1)
  out.emplace_back(1);
  for (int n = 2; n <= n_max; ++n) {
    std::vector<mpz_class> next(static_cast<std::size_t>(n));
    mpz_class prefix = 0;
    mpz_class c = 0;
    for (int m = 1; m <= n; ++m) {
      if (m <= n - 1) prefix += row[static_cast<std::size_t>(m - 1)];
      auto& cell = next[static_cast<std::size_t>(m - 1)];
      cell = placement_binomial(d, n, m) * prefix;
      c += cell;
    }
    out.emplace_back(std::move(c));
    row = std::move(next);
  }
  return out;
}

BigCount c_count(int d, int n) { return c_sequence(d, n).back(); }

BigCount tc_max_count(int d, int n) {
  if (n < 2) throw std::invalid_argument("tc_max_count requires n >= 2");
  return counts::factorial(static_cast<unsigned>(n)) * c_count(d, n - 1);
}

bool bnn_identity_check(int d, int n) {
  if (n < 2) throw std::invalid_argument("bnn_identity_check requires n >= 2");
  const BTable t = b_table_int(d, n);
  return t.at(n, n) == counts::binomial(static_cast<unsigned>((d + 1) * n - 2), static_cast<unsigned>(d - 1)) *
                           t.c(n - 1);
}

}  // namespace tcnet::words
