#include "edsum/elliptic_sums.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "edsum/errors.hpp"
#include "edsum/exact.hpp"

namespace edsum {

namespace {

// Neumaier-compensated sum of one real component.
template <class Real>
class CompensatedSum {
 public:
  void add(const Real& x) {
    using std::abs;
    const Real t = sum_ + x;
    if (abs(sum_) >= abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  Real value() const { return sum_ + comp_; }

 private:
  Real sum_ = Real(0);
  Real comp_ = Real(0);
};

template <class Real>
ComplexOf<Real> lattice_point(std::int64_t mu, std::int64_t nu, std::int64_t b,
                              const BasicEllipticContext<Real>& ctx) {
  return (Real(mu) * ctx.tau().value() + ComplexOf<Real>(Real(nu), Real(0))) / Real(b);
}

template <class Real>
ComplexOf<Real> derivative_at(int order, const ComplexOf<Real>& z, const BasicEllipticContext<Real>& ctx) {
  return order == 0 ? cs_eval<Real>(z, ctx) : cs_derivative_eval<Real>(order, z, ctx);
}

template <class Real>
BasicLatticeSumResult<Real> lattice_sum(int order, const CoprimePair& pair,
                                        const BasicEllipticContext<Real>& ctx, LatticeEvaluation mode) {
  using Complex = ComplexOf<Real>;
  const std::int64_t b = pair.b();
  BasicLatticeSumResult<Real> result{Complex(Real(0), Real(0)), 0, pair, ctx.tau(), order};
  if (b == 1) return result;
  if (order < 0) throw DomainError("lattice sum order must be nonnegative");
  if (b > 4096) throw DomainError("lattice sums are limited to b <= 4096");

  const auto bu = static_cast<std::size_t>(b);
  // second[mu*b + nu] = cs^{(order)}((mu tau + nu)/b); first uses the order-0 table.
  std::vector<Complex> second(bu * bu);
  std::vector<Complex> base;
  if (mode == LatticeEvaluation::Tabulated) {
    base.resize(bu * bu);
  }
  for (std::int64_t mu = 0; mu < b; ++mu) {
    for (std::int64_t nu = 0; nu < b; ++nu) {
      if (mu == 0 && nu == 0) continue;
      const auto idx = static_cast<std::size_t>(mu * b + nu);
      const Complex w = lattice_point<Real>(mu, nu, b, ctx);
      if (mode == LatticeEvaluation::Tabulated) {
        base[idx] = cs_eval<Real>(w, ctx);
        second[idx] = order == 0 ? base[idx] : cs_derivative_eval<Real>(order, w, ctx);
      } else {
        second[idx] = derivative_at<Real>(order, w, ctx);
      }
    }
  }

  const std::int64_t a = pair.a();
  CompensatedSum<Real> re;
  CompensatedSum<Real> im;
  for (std::int64_t mu = 0; mu < b; ++mu) {
    const Int128 a_mu = static_cast<Int128>(a) * mu;
    // a mu = b * shift + r_mu with 0 <= r_mu < b
    Int128 r_mu = a_mu % b;
    if (r_mu < 0) r_mu += b;
    const Int128 shift = (a_mu - r_mu) / b;
    const bool flip = (shift & 1) != 0;
    for (std::int64_t nu = 0; nu < b; ++nu) {
      if (mu == 0 && nu == 0) continue;
      Complex first;
      if (mode == LatticeEvaluation::Tabulated) {
        Int128 r_nu = (static_cast<Int128>(a) * nu) % b;
        if (r_nu < 0) r_nu += b;
        first = base[static_cast<std::size_t>(r_mu * b + r_nu)];
        if (flip) first = -first;
      } else {
        first = cs_eval<Real>(Real(a) * lattice_point<Real>(mu, nu, b, ctx), ctx);
      }
      Complex term = first * second[static_cast<std::size_t>(mu * b + nu)];
      if (mu & 1) term = -term;
      re.add(term.real());
      im.add(term.imag());
    }
  }
  result.value = Complex(re.value(), im.value()) / Real(4 * b);
  result.terms = b * b - 1;
  return result;
}

double abs_c(std::complex<double> z) { return std::abs(z); }

std::complex<double> to_c(const BigRational& r) { return {r.to_double(), 0.0}; }

}  // namespace

template <class Real>
BasicLatticeSumResult<Real> elliptic_sum(const CoprimePair& pair, const BasicEllipticContext<Real>& ctx,
                                         LatticeEvaluation mode) {
  return lattice_sum<Real>(0, pair, ctx, mode);
}

template <class Real>
BasicLatticeSumResult<Real> apostol_sum(int order, const CoprimePair& pair,
                                        const BasicEllipticContext<Real>& ctx, LatticeEvaluation mode) {
  return lattice_sum<Real>(order, pair, ctx, mode);
}

template BasicLatticeSumResult<double> elliptic_sum<double>(const CoprimePair&, const EllipticContext&,
                                                            LatticeEvaluation);
template BasicLatticeSumResult<Quad> elliptic_sum<Quad>(const CoprimePair&, const ExtendedEllipticContext&,
                                                        LatticeEvaluation);
template BasicLatticeSumResult<double> apostol_sum<double>(int, const CoprimePair&, const EllipticContext&,
                                                           LatticeEvaluation);
template BasicLatticeSumResult<Quad> apostol_sum<Quad>(int, const CoprimePair&, const ExtendedEllipticContext&,
                                                       LatticeEvaluation);

std::complex<double> rational_prefactor(const EllipticContext& ctx) {
  return 1.0 / 3.0 - ctx.lambda() / 6.0;
}

RationalExtract rational_extract(const CoprimePair& pair, const EllipticContext& ctx) {
  if (!pair.in_u_odd()) {
    throw UndefinedRationalPart("rational_extract: " + pair.to_string() + " is outside U°");
  }
  const std::complex<double> factor = rational_prefactor(ctx);
  if (abs_c(factor) < 1e-8) {
    throw DivisionHazard("rational_extract: 1/3 - lambda/6 vanishes at this tau");
  }
  const auto sum = elliptic_sum(pair, ctx);
  RationalExtract out{sum.value / factor, q_value(pair), 0.0};
  out.abs_error = abs_c(out.q_estimate - to_c(out.q_exact));
  return out;
}

double CorollaryResiduals::max() const { return *std::max_element(residuals.begin(), residuals.end()); }

CorollaryResiduals modular_corollary_check(const CoprimePair& pair, const TauPoint& tau) {
  if (!pair.in_u_odd()) {
    throw UndefinedRationalPart("modular_corollary_check: " + pair.to_string() + " is outside U°");
  }
  using C = std::complex<double>;
  const C lam = build_context(tau).lambda();
  const C q = to_c(q_value(pair));
  const std::array<TauPoint, 5> images = {tau.neg_inverse(), tau.shifted(), tau.neg_inverse_shifted(),
                                          tau.one_minus_inverse(), tau.over_shifted()};
  const std::array<C, 5> factors = {
      (1.0 + lam) / 6.0,
      (lam - 2.0) / (6.0 * (lam - 1.0)),
      (1.0 - 2.0 * lam) / (6.0 * (1.0 - lam)),
      (lam + 1.0) / (6.0 * lam),
      (2.0 * lam - 1.0) / (6.0 * lam),
  };
  CorollaryResiduals out;
  C s_neg_inverse_shifted;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto ctx = build_context(images[i]);
    const C s = elliptic_sum(pair, ctx).value;
    if (i == 2) s_neg_inverse_shifted = s;
    out.residuals[i] = abs_c(s - q * factors[i]);
  }
  out.neg_inverse_shifted_flipped_sign =
      abs_c(s_neg_inverse_shifted - q * (1.0 - 2.0 * lam) / (6.0 * (lam - 1.0)));
  return out;
}

DegenerationResult degeneration_check(const CoprimePair& pair, double big_t) {
  if (!(big_t > 0.0)) throw DomainError("degeneration_check: T must be positive");
  const BigRational limit = dedekind_sum(pair.a(), pair.b()) +
                            BigRational(hardy_berndt(pair.a(), pair.b()), 4);
  if (pair.b() == 1) return {{0.0, 0.0}, limit, 0.0};
  const auto ctx = build_context({0.0, big_t});
  const auto sum = elliptic_sum(pair, ctx);
  return {sum.value, limit, abs_c(sum.value - to_c(limit))};
}

BigRational apostol_reciprocity_coefficient(int n, int l, std::int64_t a, std::int64_t b) {
  if (n < 0 || l < 0) throw DomainError("apostol_reciprocity_coefficient: n, l must be nonnegative");
  auto power = [](std::int64_t base, int e) {
    // e may be -1 when l = 0
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), to_big(base).get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? BigRational(BigInt(1), p) : BigRational(p);
  };
  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(2 * n));
  BigRational inner = power(a, 2 * l - 1) * power(b, 2 * n + 1 - 2 * l) +
                      power(a, 2 * n + 1 - 2 * l) * power(b, 2 * l - 1);
  if (l == 0) inner += BigRational(BigInt(2 * n + 1), to_big(a) * to_big(b));
  if (n == 2 * l - 1) inner -= power(a, n) * power(b, n);
  return BigRational(factorial, BigInt(4)) * inner;
}

ApostolReciprocity apostol_reciprocity_residual(int n, const CoprimePair& pair, const EllipticContext& ctx) {
  if (!pair.in_u_odd() || pair.a() < 1) {
    throw DomainError("apostol_reciprocity_residual: requires a, b > 0 with a + b odd");
  }
  if (n < 0) throw DomainError("apostol_reciprocity_residual: n must be nonnegative");
  const int order = 2 * n;
  ApostolReciprocity out;
  out.lhs = apostol_sum(order, pair, ctx).value + apostol_sum(order, pair.swapped(), ctx).value;

  // g at an odd exponent e = 2j + 1 is laurent_g(j); even exponents vanish.
  auto g_exponent = [&](int e) -> std::complex<double> {
    if (e < 1 || e % 2 == 0) return {0.0, 0.0};
    return laurent_g((e - 1) / 2, ctx);
  };
  const auto a = pair.a();
  const auto b = pair.b();
  const std::complex<double> head =
      apostol_reciprocity_coefficient(n, 0, a, b).to_double() * g_exponent(2 * n + 1);
  out.bracket_odd_index = head;
  out.bracket_as_printed = head;
  for (int l = 1; l <= (n + 1) / 2; ++l) {
    const double coeff = apostol_reciprocity_coefficient(n, l, a, b).to_double();
    const auto g_tail = g_exponent(2 * l - 1);
    out.bracket_odd_index -= coeff * g_exponent(2 * (n - l) + 1) * g_tail;
    out.bracket_as_printed -= coeff * g_exponent(2 * n + 1 - l) * g_tail;
  }
  return out;
}

}  // namespace edsum
