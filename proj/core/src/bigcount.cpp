#include "tcnet/bigcount.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tcnet/errors.hpp"

namespace tcnet {

namespace {

mpz_class from_u64(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return out;
}

}  // namespace

BigCount::BigCount(std::uint64_t v) : value_(from_u64(v)) {}

BigCount::BigCount(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw std::invalid_argument("BigCount must be nonnegative");
}

BigCount BigCount::from_string(std::string_view decimal) {
  if (decimal.empty()) throw std::invalid_argument("empty BigCount literal");
  for (char c : decimal) {
    if (c < '0' || c > '9') throw std::invalid_argument("BigCount literal must be decimal digits");
  }
  return BigCount(mpz_class(std::string(decimal), 10));
}

bool BigCount::fits_u64() const { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }

std::uint64_t BigCount::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigCount does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, value_.get_mpz_t());
  return out;
}

double BigCount::log() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, value_.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

BigCount& BigCount::operator*=(std::uint64_t o) {
  if (o <= std::numeric_limits<unsigned long>::max()) {
    value_ *= static_cast<unsigned long>(o);
  } else {
    value_ *= from_u64(o);
  }
  return *this;
}

BigCount divide_exact(const BigCount& num, const BigCount& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(num.raw().get_mpz_t(), den.raw().get_mpz_t())) {
    throw IntegralityError("inexact division: " + num.to_string() + " / " + den.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.raw().get_mpz_t(), den.raw().get_mpz_t());
  return BigCount(std::move(q));
}

FloorQuotient divide_floor(const BigCount& num, const BigCount& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  mpz_class q;
  mpz_class r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.raw().get_mpz_t(), den.raw().get_mpz_t());
  return {BigCount(std::move(q)), sgn(r) == 0};
}

}  // namespace tcnet
