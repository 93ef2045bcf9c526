#include "edsum/big_rational.hpp"

#include <ostream>

#include "edsum/errors.hpp"

namespace edsum {

namespace {

mpq_class canonical(const BigInt& n, const BigInt& d) {
  if (d == 0) throw DomainError("BigRational: zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

BigInt to_big(Int128 value) {
  const bool negative = value < 0;
  UInt128 mag = negative ? -static_cast<UInt128>(value)
                                   : static_cast<UInt128>(value);
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  const auto lo = static_cast<std::uint64_t>(mag);
  BigInt r;
  const std::uint64_t words[2] = {lo, hi};
  mpz_import(r.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (negative) r = -r;
  return r;
}

void add_to(BigInt& acc, Int128 value) {
  constexpr Int128 kLongMax = static_cast<Int128>(INT64_MAX);
  if (value >= -kLongMax && value <= kLongMax) {
    const auto v = static_cast<long>(value);
    if (v >= 0) {
      mpz_add_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(v));
    } else {
      mpz_sub_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(-v));
    }
    return;
  }
  acc += to_big(value);
}

BigRational::BigRational(std::int64_t n) : value_(to_big(n)) {}
BigRational::BigRational(const BigInt& n) : value_(n) {}
BigRational::BigRational(const BigInt& numerator, const BigInt& denominator)
    : value_(canonical(numerator, denominator)) {}
BigRational::BigRational(std::int64_t numerator, std::int64_t denominator)
    : value_(canonical(to_big(numerator), to_big(denominator))) {}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw DomainError("BigRational: cannot parse '" + std::string(text) + "'");
  } else {
    const auto rhs = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || rhs.empty() || rhs[0] == '-' ||
        !parse_integer(rhs, den)) {
      throw DomainError("BigRational: cannot parse '" + std::string(text) + "'");
    }
  }
  return BigRational(num, den);
}

std::string BigRational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string BigRational::to_human() const {
  if (is_integer()) return value_.get_num().get_str();
  // Terminating decimal iff the denominator is 2^x 5^y.
  BigInt d = value_.get_den();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) { d /= 2; ++twos; }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { d /= 5; ++fives; }
  if (d != 1) return to_string();

  const unsigned places = std::max(twos, fives);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  BigInt scaled = abs(value_.get_num()) * (scale / value_.get_den());
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return (sign() < 0 ? "-" : "") + digits;
}

BigRational& BigRational::operator+=(const BigRational& rhs) { value_ += rhs.value_; return *this; }
BigRational& BigRational::operator-=(const BigRational& rhs) { value_ -= rhs.value_; return *this; }
BigRational& BigRational::operator*=(const BigRational& rhs) { value_ *= rhs.value_; return *this; }
BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw DomainError("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

}  // namespace edsum
