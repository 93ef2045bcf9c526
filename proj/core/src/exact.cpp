#include "edsum/exact.hpp"

#include <string>

#include "edsum/errors.hpp"

namespace edsum {

namespace {

using i128 = Int128;

// Sums 128-bit terms bounded by `term_bound` into a BigInt, flushing the
// fixed-width partial before it can overflow.
class Accumulator {
 public:
  explicit Accumulator(i128 term_bound) {
    constexpr i128 kHeadroom = static_cast<i128>(1) << 125;
    const i128 bound = term_bound < 1 ? 1 : term_bound;
    const i128 steps = kHeadroom / bound;
    budget_ = steps < 1 ? 1 : (steps > (i128{1} << 62) ? (std::int64_t{1} << 62)
                                                         : static_cast<std::int64_t>(steps));
    left_ = budget_;
  }

  void add(i128 term) {
    partial_ += term;
    if (--left_ == 0) flush();
  }

  BigInt total() {
    flush();
    return total_;
  }

 private:
  void flush() {
    add_to(total_, partial_);
    partial_ = 0;
    left_ = budget_;
  }

  BigInt total_ = 0;
  i128 partial_ = 0;
  std::int64_t budget_;
  std::int64_t left_;
};

void require_positive_modulus(std::int64_t b, const char* who) {
  if (b < 1) throw DomainError(std::string(who) + ": b must be positive, got " + std::to_string(b));
}

void require_u_odd(const CoprimePair& pair, const char* who) {
  if (!pair.in_u_odd()) {
    throw UndefinedRationalPart(std::string(who) + ": " + pair.to_string() +
                                " is outside U° (a + b even); Q is undefined there");
  }
}

BigRational q_main_result(const CoprimePair& pair) {
  return BigRational(3) * dedekind_sum(pair.a(), pair.b()) +
         BigRational(3 * hardy_berndt(pair.a(), pair.b()), 4);
}

BigRational q_rao_route(const CoprimePair& pair) {
  const std::int64_t a = pair.a();
  const std::int64_t b = pair.b();
  return BigRational(6) *
         (dedekind_sum(a, 2 * b) + dedekind_sum(2 * a, b) - BigRational(2) * dedekind_sum(a, b));
}

BigRational q_euclidean_descent(const CoprimePair& pair) {
  BigRational acc;
  int sign = 1;
  std::int64_t x = pair.a();
  std::int64_t y = pair.b();
  while (y != 1) {
    // Q(x;y) = Q(r;y) with r = x mod 2y; r in (0, 2y) \ {y} since gcd(x, y) = 1.
    std::int64_t r = floor_mod(x, 2 * y);
    if (r > y) {
      r = 2 * y - r;
      sign = -sign;
    }
    // 0 < r < y:  Q(r;y) = R(r;y) - Q(y;r)
    const BigRational term = reciprocity_constant(r, y);
    acc += sign > 0 ? term : -term;
    sign = -sign;
    x = y;
    y = r;
  }
  return acc;
}

}  // namespace

std::string_view to_string(Route route) {
  switch (route) {
    case Route::MainResult: return "main";
    case Route::RaoRoute: return "rao";
    case Route::EuclideanDescent: return "euclid";
    case Route::Definition: return "definition";
  }
  return "?";
}

std::string_view to_string(SumKind kind) {
  switch (kind) {
    case SumKind::DedekindS: return "s";
    case SumKind::HardyBerndtS: return "S";
    case SumKind::QPart: return "Q";
    case SumKind::MPart: return "M";
  }
  return "?";
}

std::string_view to_string(DenominatorClass c) {
  return c == DenominatorClass::Integer ? "integer" : "half-integer";
}

Route parse_route(std::string_view name) {
  if (name == "main") return Route::MainResult;
  if (name == "rao") return Route::RaoRoute;
  if (name == "euclid") return Route::EuclideanDescent;
  if (name == "definition") return Route::Definition;
  throw DomainError("unknown route '" + std::string(name) + "'");
}

BigRational dedekind_sum(std::int64_t a, std::int64_t b) {
  require_positive_modulus(b, "dedekind_sum");
  if (b == 1) return BigRational();
  // s = 1/(4b^2) * sum_{nu : b !| a nu} (2 r_nu - b)(2 nu - b),  r_nu = a nu mod b
  const std::int64_t step = floor_mod(a, b);
  Accumulator acc(static_cast<i128>(b) * b);
  std::int64_t r = 0;
  for (std::int64_t nu = 1; nu < b; ++nu) {
    r += step;
    if (r >= b) r -= b;
    if (r == 0) continue;
    acc.add(static_cast<i128>(2 * r - b) * (2 * nu - b));
  }
  BigInt den = to_big(b);
  den = 4 * den * den;
  return BigRational(acc.total(), den);
}

std::int64_t hardy_berndt(std::int64_t a, std::int64_t b) {
  require_positive_modulus(b, "hardy_berndt");
  if (gcd64(a, b) != 1) {
    throw DomainError("hardy_berndt: gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  }
  const std::int64_t step = floor_mod(a, b);
  const bool quotient_odd = (floor_div(a, b) & 1) != 0;
  std::int64_t total = 0;
  std::int64_t r = 0;
  bool floor_odd = false;  // parity of floor(step * mu / b)
  for (std::int64_t mu = 1; mu < b; ++mu) {
    r += step;
    if (r >= b) {
      r -= b;
      floor_odd = !floor_odd;
    }
    const bool odd = ((mu + 1) & 1) ^ floor_odd ^ (quotient_odd && (mu & 1));
    total += odd ? -1 : 1;
  }
  return total;
}

BigRational reciprocity_constant(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw DomainError("reciprocity_constant: arguments must be positive");
  const BigInt x = to_big(a);
  const BigInt y = to_big(b);
  return BigRational(BigInt(x * x + y * y + 1), BigInt(4 * x * y));
}

BigRational q_value(const CoprimePair& pair, Route route) {
  require_u_odd(pair, "q_value");
  if (pair.b() == 1) return BigRational();
  switch (route) {
    case Route::MainResult: return q_main_result(pair);
    case Route::RaoRoute: return q_rao_route(pair);
    case Route::EuclideanDescent: return q_euclidean_descent(pair);
    case Route::Definition: break;
  }
  throw DomainError("q_value: Q(a;b) has no exact definition route; use main, rao or euclid");
}

BigInt m_value(const CoprimePair& pair) {
  require_u_odd(pair, "m_value");
  if (pair.a() < 0) return -m_value(pair.negated());

  const i128 a = pair.a();
  const i128 b = pair.b();
  BigInt total = to_big(a) * to_big(b) * to_big(b);

  // floor(a nu / 2b) < a and |b - nu| < b, so each term is below a*b.
  Accumulator first(a * b);
  for (i128 nu = 1; nu < 2 * b; ++nu) {
    first.add((a * nu / (2 * b)) * (b - nu));
  }
  Accumulator second(b);
  for (i128 nu = 1; nu < b; ++nu) {
    const i128 carry = (2 * a * nu) / b - 2 * ((a * nu) / b);
    second.add(carry * (b - 2 * nu));
  }
  total += 3 * first.total() + 3 * second.total();
  return total;
}

DenominatorClass denominator_class(const CoprimePair& pair) {
  require_u_odd(pair, "denominator_class");
  return pair.a_parity() == Parity::Odd ? DenominatorClass::HalfInteger : DenominatorClass::Integer;
}

ZeroCharacterization zero_characterization(const CoprimePair& pair) {
  if (pair.a_parity() != Parity::Even || pair.b_parity() != Parity::Odd) {
    throw DomainError("zero_characterization: requires a even and b odd, got " + pair.to_string());
  }
  const i128 a = pair.a();
  const i128 b = pair.b();
  const i128 a_mod = a % b;
  const bool predicted = (a_mod * a_mod + 1) % b == 0;
  return {predicted, q_value(pair).is_zero()};
}

InversionCheck inversion_check(std::int64_t a, std::int64_t a_prime, std::int64_t b) {
  InversionCheck out;
  const auto p = CoprimePair::try_make(a, b);
  const auto p_prime = CoprimePair::try_make(a_prime, b);
  if (!p || !p_prime || !p->in_u_odd() || !p_prime->in_u_odd()) return out;
  if ((b & 1) == 0 || (a & 1) != 0 || (a_prime & 1) != 0) return out;

  const i128 prod = (static_cast<i128>(a) * a_prime) % b;
  const i128 residue = prod < 0 ? prod + b : prod;
  if (residue == 1 % b) {
    out.sign = 1;
  } else if (residue == b - 1) {
    out.sign = -1;
  } else {
    return out;
  }
  out.applicable = true;
  const BigRational lhs = q_value(*p);
  const BigRational rhs = q_value(*p_prime);
  out.holds = lhs == (out.sign > 0 ? rhs : -rhs);
  return out;
}

BigRational rao_identity_defect(const CoprimePair& pair) {
  require_u_odd(pair, "rao_identity_defect");
  const std::int64_t a = pair.a();
  const std::int64_t b = pair.b();
  return BigRational(hardy_berndt(a, b)) - BigRational(8) * dedekind_sum(a, 2 * b) -
         BigRational(8) * dedekind_sum(2 * a, b) + BigRational(20) * dedekind_sum(a, b);
}

BigRational m_reciprocity_defect(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw DomainError("m_reciprocity_defect: arguments must be positive");
  const auto pair = CoprimePair::make(a, b);
  require_u_odd(pair, "m_reciprocity_defect");
  const BigInt x = to_big(a);
  const BigInt y = to_big(b);
  const BigInt lhs = x * m_value(pair) + y * m_value(pair.swapped());
  const BigInt rhs_num = 1 - x * x - y * y + 6 * x * y * (x + y);
  return BigRational(lhs) - BigRational(rhs_num, BigInt(4));
}

SumRecord compute_record(const CoprimePair& pair, SumKind kind, Route route) {
  switch (kind) {
    case SumKind::DedekindS:
      return {pair, dedekind_sum(pair.a(), pair.b()), Route::Definition, kind};
    case SumKind::HardyBerndtS:
      return {pair, BigRational(hardy_berndt(pair.a(), pair.b())), Route::Definition, kind};
    case SumKind::QPart:
      return {pair, q_value(pair, route), route, kind};
    case SumKind::MPart:
      return {pair, BigRational(m_value(pair)), Route::Definition, kind};
  }
  throw DomainError("compute_record: unknown kind");
}

}  // namespace edsum
