#include "edsum/sequences.hpp"

#include "edsum/errors.hpp"
#include "edsum/exact.hpp"

namespace edsum {

namespace {

void require_multiplier(std::int64_t n) {
  if (n < 1) throw DomainError("P^(N) requires N >= 1, got " + std::to_string(n));
}

bool fits(const BigInt& v, std::int64_t cap) { return v > -cap && v < cap; }

std::optional<BigRational> q_if_small(const ZeroPairRecord& r, std::int64_t cap) {
  if (!fits(r.a, cap) || !fits(r.b, cap)) return std::nullopt;
  const auto pair = r.pair();
  if (!pair || !pair->in_u_odd()) return std::nullopt;
  return q_value(*pair, Route::MainResult);
}

}  // namespace

std::string_view to_string(ZeroExpectation e) {
  return e == ZeroExpectation::Zero ? "zero" : "sign-relation";
}

BigInt p_term(std::int64_t n, std::int64_t m) {
  require_multiplier(n);
  if (m < 0) throw DomainError("P^(N)_M requires M >= 0");
  BigInt prev = 0;
  BigInt cur = 1;
  if (m == 0) return prev;
  for (std::int64_t i = 1; i < m; ++i) {
    BigInt next = n * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BigInt> p_terms(const SequenceSpec& spec) {
  require_multiplier(spec.multiplier);
  if (spec.length < 0) throw DomainError("P^(N) length must be nonnegative");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(spec.length));
  for (std::int64_t i = 0; i < spec.length; ++i) {
    if (i < 2) {
      out.emplace_back(i);
    } else {
      out.push_back(spec.multiplier * out[i - 1] + out[i - 2]);
    }
  }
  return out;
}

BigInt cassini_defect(std::int64_t n, std::int64_t m) {
  require_multiplier(n);
  if (m < 1) throw DomainError("cassini_defect requires M >= 1");
  const auto t = p_terms({n, m + 2});
  const BigInt sign = (m % 2 == 0) ? 1 : -1;
  return t[m + 1] * t[m - 1] - t[m] * t[m] - sign;
}

std::optional<CoprimePair> ZeroPairRecord::pair() const {
  if (!a.fits_slong_p() || !b.fits_slong_p()) return std::nullopt;
  return CoprimePair::try_make(a.get_si(), b.get_si());
}

std::vector<ZeroPairRecord> zero_pairs(std::int64_t n, std::int64_t max_m) {
  require_multiplier(n);
  if (max_m < 1) throw DomainError("zero_pairs requires max_m >= 1");
  std::vector<ZeroPairRecord> out;
  if (n % 2 == 0) {
    const auto t = p_terms({n, 2 * max_m + 2});
    for (std::int64_t m = 1; m <= max_m; ++m) {
      out.push_back({t[2 * m], t[2 * m - 1], ZeroExpectation::Zero});
      out.push_back({t[2 * m], t[2 * m + 1], ZeroExpectation::Zero});
    }
  } else {
    // P_{3k}^2 = P_{3k-1} P_{3k+1} - (-1)^k, so b | a^2 + 1 needs k even.
    const auto t = p_terms({n, 6 * max_m + 2});
    for (std::int64_t m = 1; m <= max_m; ++m) {
      out.push_back({t[6 * m], t[6 * m - 1], ZeroExpectation::Zero});
      out.push_back({t[6 * m], t[6 * m + 1], ZeroExpectation::Zero});
    }
  }
  return out;
}

ZeroPairOutcome verify_zero_pair(const ZeroPairRecord& record, std::int64_t cap) {
  ZeroPairOutcome out{record, ZeroVerification::Congruence, false, false};
  BigInt g;
  mpz_gcd(g.get_mpz_t(), record.a.get_mpz_t(), record.b.get_mpz_t());
  const BigInt parity_sum = record.a + record.b;
  out.in_u_odd = record.a != 0 && record.b > 0 && g == 1 && mpz_odd_p(parity_sum.get_mpz_t());
  if (!out.in_u_odd) return out;
  if (const auto q = q_if_small(record, cap)) {
    out.method = ZeroVerification::ExactQ;
    out.is_zero = q->is_zero();
    return out;
  }
  // b | a^2 + 1 is equivalent to Q = 0 for a even, b odd.
  const BigInt reduced = (record.a * record.a + 1) % record.b;
  out.is_zero = mpz_even_p(record.a.get_mpz_t()) && reduced == 0;
  return out;
}

bool SignRelationOutcome::holds() const {
  if (!evaluated()) return false;
  return *lhs_value == (sign > 0 ? *rhs_value : -*rhs_value);
}

std::vector<SignRelationOutcome> sign_relations(std::int64_t n, std::int64_t max_m,
                                                std::int64_t cap) {
  require_multiplier(n);
  if (max_m < 1) throw DomainError("sign_relations requires max_m >= 1");
  std::vector<SignRelationOutcome> out;
  auto emit = [&](const BigInt& num_l, const BigInt& num_r, const BigInt& den, int sign) {
    SignRelationOutcome o;
    o.lhs = {num_l, den, ZeroExpectation::SignRelation};
    o.rhs = {num_r, den, ZeroExpectation::SignRelation};
    o.sign = sign;
    o.lhs_value = q_if_small(o.lhs, cap);
    o.rhs_value = q_if_small(o.rhs, cap);
    out.push_back(std::move(o));
  };
  if (n % 2 == 0) {
    const auto t = p_terms({n, 2 * max_m + 2});
    for (std::int64_t m = 1; m <= max_m; ++m) {
      emit(t[2 * m + 1], t[2 * m - 1], t[2 * m], 1);
    }
  } else {
    const auto t = p_terms({n, 3 * max_m + 2});
    for (std::int64_t m = 1; m <= max_m; ++m) {
      const int sign = (m % 2 == 0) ? 1 : -1;
      emit(t[3 * m + 1], t[3 * m - 1], t[3 * m], sign);
      emit(t[3 * m - 1], t[3 * m + 1], t[3 * m], sign);
    }
  }
  return out;
}

}  // namespace edsum
