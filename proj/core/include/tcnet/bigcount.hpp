#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace tcnet {

/// Arbitrary-precision nonnegative integer. All exact counts are BigCounts.
///
/// Subtraction is deliberately absent; the only way to shrink a value is
/// exact division, which throws IntegralityError on a non-zero remainder.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit BigCount(mpz_class v);

  static BigCount from_string(std::string_view decimal);

  [[nodiscard]] std::string to_string() const { return value_.get_str(); }
  [[nodiscard]] const mpz_class& raw() const { return value_; }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool fits_u64() const;
  [[nodiscard]] std::uint64_t to_u64() const;

  /// Natural logarithm without converting through a double of the value itself;
  /// -inf for zero.
  [[nodiscard]] double log() const;

  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }
  BigCount& operator*=(const BigCount& o) {
    value_ *= o.value_;
    return *this;
  }
  BigCount& operator*=(std::uint64_t o);

  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
  friend BigCount operator*(BigCount a, std::uint64_t b) { return a *= b; }

  friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigCount& v) { return os << v.value_; }

 private:
  mpz_class value_{0};
};

/// Exact quotient; throws IntegralityError if `den` does not divide `num`.
BigCount divide_exact(const BigCount& num, const BigCount& den);

/// floor(num / den) together with whether the division was exact.
struct FloorQuotient {
  BigCount floor;
  bool exact;
};
FloorQuotient divide_floor(const BigCount& num, const BigCount& den);

}  // namespace tcnet
