#pragma once

// Hand-rolled generators and small oracles shared by the unit tests.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "edsum/coprime_pair.hpp"

namespace edsum::testkit {

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(0xd5a1u + salt); }

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random (a;b) in U° with 1 <= a <= a_max, 1 <= b <= b_max.
inline CoprimePair random_u_odd(std::mt19937_64& rng, std::int64_t a_max, std::int64_t b_max) {
  for (;;) {
    const auto a = uniform(rng, 1, a_max);
    const auto b = uniform(rng, 1, b_max);
    if (((a + b) & 1) && std::gcd(a, b) == 1) return CoprimePair::make(a, b);
  }
}

/// Random coprime (a;b), a possibly negative.
inline CoprimePair random_coprime(std::mt19937_64& rng, std::int64_t a_max, std::int64_t b_max) {
  for (;;) {
    const auto a = uniform(rng, -a_max, a_max);
    const auto b = uniform(rng, 1, b_max);
    if (a != 0 && std::gcd(a, b) == 1) return CoprimePair::make(a, b);
  }
}

inline std::vector<CoprimePair> all_u_odd(std::int64_t bound) {
  std::vector<CoprimePair> out;
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t b = 1; b <= bound; ++b)
      if (((a + b) & 1) && std::gcd(a, b) == 1) out.push_back(CoprimePair::make(a, b));
  return out;
}

/// s(a;b) = (1/4b) sum_k cot(pi k/b) cot(pi k a/b), gcd(a,b) = 1.
inline long double cot_dedekind(std::int64_t a, std::int64_t b) {
  const long double pi = 3.141592653589793238462643383279502884L;
  long double acc = 0;
  for (std::int64_t k = 1; k < b; ++k) {
    const long double x = pi * static_cast<long double>(k) / static_cast<long double>(b);
    const long double y = pi * static_cast<long double>((((k * a) % b) + b) % b) / static_cast<long double>(b);
    acc += (std::cos(x) / std::sin(x)) * (std::cos(y) / std::sin(y));
  }
  return acc / (4.0L * static_cast<long double>(b));
}

}  // namespace edsum::testkit
