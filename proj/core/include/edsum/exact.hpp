#pragma once

// Exact evaluation of the classical Dedekind sum s(a;b), the Hardy-Berndt sum
// S(a;b), the rational part Q(a;b) of the elliptic classical Dedekind sum and
// its integral part M(a;b).

#include <cstdint>
#include <string>
#include <string_view>

#include "edsum/big_rational.hpp"
#include "edsum/coprime_pair.hpp"

namespace edsum {

/// Which formula produced a value.
enum class Route {
  MainResult,        ///< Q = 3(s(a;b) + S(a;b)/4)
  RaoRoute,          ///< Q = 6(s(a;2b) + s(2a;b) - 2s(a;b))
  EuclideanDescent,  ///< parity + even reduction + reciprocity, down to Q(.;1) = 0
  Definition,        ///< direct floor/sawtooth sum of the defining series
};

enum class SumKind { DedekindS, HardyBerndtS, QPart, MPart };

std::string_view to_string(Route route);
std::string_view to_string(SumKind kind);
Route parse_route(std::string_view name);

struct SumRecord {
  CoprimePair pair;
  BigRational value;
  Route route;
  SumKind kind;
};

/// s(a;b) with the sawtooth ((x)) = 0 at integers, so any integer a is accepted.
/// Throws DomainError for b <= 0.
BigRational dedekind_sum(std::int64_t a, std::int64_t b);

/// S(a;b) = sum_{mu=1}^{b-1} (-1)^{mu + 1 + floor(a mu / b)}; requires gcd(a, b) = 1.
std::int64_t hardy_berndt(std::int64_t a, std::int64_t b);

/// R(a;b) = (a^2 + b^2 + 1) / (4ab) for a, b >= 1.
BigRational reciprocity_constant(std::int64_t a, std::int64_t b);

/// Q(a;b) on U°. Throws UndefinedRationalPart when a + b is even and
/// DomainError for Route::Definition (Q has no exact defining sum).
BigRational q_value(const CoprimePair& pair, Route route = Route::MainResult);

/// M(a;b) from the floor-sum formula; bQ(a;b) = a(1 - 3b)/2 + M(a;b).
BigInt m_value(const CoprimePair& pair);

enum class DenominatorClass { Integer, HalfInteger };
std::string_view to_string(DenominatorClass c);

/// HalfInteger iff a is odd (then b is even and bQ lies in 1/2 + Z).
DenominatorClass denominator_class(const CoprimePair& pair);

struct ZeroCharacterization {
  bool predicted_zero;  ///< b | a^2 + 1
  bool actual_zero;     ///< Q(a;b) == 0
};

/// Requires a even and b odd.
ZeroCharacterization zero_characterization(const CoprimePair& pair);

struct InversionCheck {
  bool applicable = false;
  int sign = 1;
  bool holds = false;
};

/// Q(a;b) = sign * Q(a';b) for b odd, a and a' even, a a' = sign (mod b).
/// Inputs outside that hypothesis come back with applicable = false.
InversionCheck inversion_check(std::int64_t a, std::int64_t a_prime, std::int64_t b);

/// S(a;b) - 8 s(a;2b) - 8 s(2a;b) + 20 s(a;b); zero on U°.
BigRational rao_identity_defect(const CoprimePair& pair);

/// a M(a;b) + b M(b;a) - (1 - a^2 - b^2 + 6ab(a+b))/4; zero on U° with a, b >= 1.
BigRational m_reciprocity_defect(std::int64_t a, std::int64_t b);

/// One value of the requested kind; Route only matters for SumKind::QPart.
SumRecord compute_record(const CoprimePair& pair, SumKind kind, Route route = Route::MainResult);

/// {"meta": {a, b, kind, route}, "rows": [{"value": "p/q"}]}
std::string to_json(const SumRecord& record);

}  // namespace edsum
