#include "edsum/coprime_pair.hpp"

#include <numeric>

#include "edsum/errors.hpp"

namespace edsum {

std::int64_t gcd64(std::int64_t x, std::int64_t y) { return std::gcd(x, y); }

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t x, std::int64_t m) {
  return (x - floor_mod(x, m)) / m;
}

namespace {
bool in_range(std::int64_t v) { return v > -kMaxPairMagnitude && v < kMaxPairMagnitude; }
}  // namespace

std::optional<CoprimePair> CoprimePair::try_make(std::int64_t a, std::int64_t b) noexcept {
  if (b < 1 || a == 0 || !in_range(a) || !in_range(b)) return std::nullopt;
  if (std::gcd(a, b) != 1) return std::nullopt;
  return CoprimePair(a, b);
}

CoprimePair CoprimePair::make(std::int64_t a, std::int64_t b) {
  if (b < 1) throw DomainError("CoprimePair: b must be positive, got " + std::to_string(b));
  if (a == 0) throw DomainError("CoprimePair: a must be nonzero");
  if (!in_range(a) || !in_range(b)) throw DomainError("CoprimePair: |a|, b must be below 2^62");
  if (std::gcd(a, b) != 1) {
    throw DomainError("CoprimePair: gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  }
  return CoprimePair(a, b);
}

CoprimePair CoprimePair::swapped() const {
  if (a_ < 1) throw DomainError("CoprimePair::swapped: a must be positive");
  return CoprimePair(b_, a_);
}

std::string CoprimePair::to_string() const {
  return "(" + std::to_string(a_) + ";" + std::to_string(b_) + ")";
}

}  // namespace edsum
