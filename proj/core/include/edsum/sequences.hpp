#pragma once

// Generalized Fibonacci/Pell sequences P^(N): P_0 = 0, P_1 = 1,
// P_{M+2} = N P_{M+1} + P_M, and the zeros of Q they generate.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edsum/big_rational.hpp"
#include "edsum/coprime_pair.hpp"

namespace edsum {

struct SequenceSpec {
  std::int64_t multiplier;  // N >= 1
  std::int64_t length;      // number of terms P_0 .. P_{length-1}
};

/// Throws DomainError when N < 1 or M < 0.
BigInt p_term(std::int64_t n, std::int64_t m);
std::vector<BigInt> p_terms(const SequenceSpec& spec);

/// P_{M+1} P_{M-1} - P_M^2 - (-1)^M; zero for every N >= 1, M >= 1.
BigInt cassini_defect(std::int64_t n, std::int64_t m);

enum class ZeroExpectation { Zero, SignRelation };
std::string_view to_string(ZeroExpectation e);

/// One candidate zero (a;b) of Q. Terms are kept as big integers since they
/// outgrow 64 bits quickly; pair() is available while they fit.
struct ZeroPairRecord {
  BigInt a;
  BigInt b;
  ZeroExpectation expected = ZeroExpectation::Zero;

  std::optional<CoprimePair> pair() const;
};

/// Even N: (P_{2m}; P_{2m-1}) and (P_{2m}; P_{2m+1}) for m = 1..max_m.
/// Odd N:  (P_{6m}; P_{6m-1}) and (P_{6m}; P_{6m+1}) for m = 1..max_m.
/// (For odd N the index-(6m+3) neighbours satisfy b | a^2 - 1 instead and are
/// not zeros in general; Q(2;3) = 4/3 for N = 1 already.)
std::vector<ZeroPairRecord> zero_pairs(std::int64_t n, std::int64_t max_m);

/// Default size cap for verifying a zero pair through q_value.
inline constexpr std::int64_t kDirectZeroCap = 1'000'000;

enum class ZeroVerification { ExactQ, Congruence };

struct ZeroPairOutcome {
  ZeroPairRecord record;
  ZeroVerification method;
  bool in_u_odd;
  bool is_zero;
};

/// Q exactly (terms <= cap) or b | a^2 + 1 otherwise.
ZeroPairOutcome verify_zero_pair(const ZeroPairRecord& record, std::int64_t cap = kDirectZeroCap);

/// A claimed relation Q(lhs) = sign * Q(rhs) between two sequence pairs.
struct SignRelationOutcome {
  ZeroPairRecord lhs;
  ZeroPairRecord rhs;
  int sign;
  std::optional<BigRational> lhs_value;  // empty when terms exceed the cap
  std::optional<BigRational> rhs_value;
  bool evaluated() const { return lhs_value && rhs_value; }
  bool holds() const;
};

/// Even N: Q(P_{2m+-1}; P_{2m}) = Q(P_{2m-+1}; P_{2m}).
/// Odd N:  Q(P_{3m+-1}; P_{3m}) = (-1)^m Q(P_{3m-+1}; P_{3m}), all in P^(N).
std::vector<SignRelationOutcome> sign_relations(std::int64_t n, std::int64_t max_m,
                                                std::int64_t cap = kDirectZeroCap);

/// JSON array of {a, b, expected}.
std::string zero_pairs_to_json(const std::vector<ZeroPairRecord>& records);

}  // namespace edsum
