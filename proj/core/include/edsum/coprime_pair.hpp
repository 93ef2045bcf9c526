#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace edsum {

/// Largest magnitude accepted for a or b; keeps every a*nu product in 128 bits.
inline constexpr std::int64_t kMaxPairMagnitude = std::int64_t{1} << 62;

enum class Parity { Even, Odd };

/// A validated pair (a;b) with a != 0, b >= 1 and gcd(|a|, b) = 1.
class CoprimePair {
 public:
  /// Throws DomainError when the pair is not coprime or out of range.
  static CoprimePair make(std::int64_t a, std::int64_t b);
  static std::optional<CoprimePair> try_make(std::int64_t a, std::int64_t b) noexcept;

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  /// True iff a + b is odd, i.e. the pair lies in U°.
  bool in_u_odd() const { return in_u_odd_; }
  Parity a_parity() const { return (a_ & 1) ? Parity::Odd : Parity::Even; }
  Parity b_parity() const { return (b_ & 1) ? Parity::Odd : Parity::Even; }

  CoprimePair negated() const { return CoprimePair(-a_, b_); }
  /// (b;a); requires a > 0.
  CoprimePair swapped() const;

  std::string to_string() const;

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;

 private:
  CoprimePair(std::int64_t a, std::int64_t b) : a_(a), b_(b), in_u_odd_(((a ^ b) & 1) != 0) {}
  std::int64_t a_;
  std::int64_t b_;
  bool in_u_odd_;
};

std::int64_t gcd64(std::int64_t x, std::int64_t y);
/// Floor modulus: result in [0, m) for m > 0.
std::int64_t floor_mod(std::int64_t x, std::int64_t m);
std::int64_t floor_div(std::int64_t x, std::int64_t m);

}  // namespace edsum
