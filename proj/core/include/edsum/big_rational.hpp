#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace edsum {

using BigInt = mpz_class;
__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

/// Adds a 128-bit value to an arbitrary-precision accumulator.
void add_to(BigInt& acc, Int128 value);
BigInt to_big(Int128 value);

/// Exact fraction kept in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& n);  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& numerator, const BigInt& denominator);
  BigRational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "p/q" or "n"; throws DomainError on malformed input or q == 0.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Machine form: always "p/q", integers as "n/1".
  std::string to_string() const;
  /// Human form: bare "n" for integers, a terminating decimal when one exists
  /// (3/2 -> "1.5"), otherwise "p/q".
  std::string to_human() const;
  double to_double() const { return value_.get_d(); }

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit BigRational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

}  // namespace edsum
