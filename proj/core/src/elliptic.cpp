#include "edsum/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "edsum/errors.hpp"

namespace edsum {

namespace {

constexpr int kMaxSeriesTerms = 500;

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
ComplexOf<Real> imag_unit() {
  return ComplexOf<Real>(Real(0), Real(1));
}

template <class Real>
Real magnitude(const ComplexOf<Real>& z) {
  using std::abs;
  return abs(z);
}

template <class Real>
std::int64_t floor_to_int(const Real& x) {
  using std::floor;
  return static_cast<std::int64_t>(floor(x));
}

// z = z0 + shift_tau * tau + shift_one, with z0 = x + y tau, x, y in [-1/2, 1/2).
template <class Real>
struct Reduced {
  ComplexOf<Real> z0;
  std::int64_t shift_tau;
  std::int64_t shift_one;
};

template <class Real>
Reduced<Real> reduce(const ComplexOf<Real>& z, const ComplexOf<Real>& tau) {
  const Real y = z.imag() / tau.imag();
  const std::int64_t m = floor_to_int<Real>(y + Real(0.5));
  const ComplexOf<Real> z1 = z - Real(m) * tau;
  const std::int64_t n = floor_to_int<Real>(z1.real() + Real(0.5));
  return {z1 - ComplexOf<Real>(Real(n), Real(0)), m, n};
}

// theta_j at an already reduced argument.
template <class Real>
struct Nome {
  ComplexOf<Real> half;     // e^{i pi tau}
  ComplexOf<Real> quarter;  // e^{i pi tau / 4}
};

template <class Real>
Nome<Real> nome_of(const ComplexOf<Real>& tau) {
  using std::exp;
  const ComplexOf<Real> arg = imag_unit<Real>() * pi<Real>() * tau;
  return {exp(arg), exp(arg / Real(4))};
}

template <class Real>
ComplexOf<Real> theta_series(int j, const ComplexOf<Real>& z, const Nome<Real>& nome,
                             const Real& trunc_tol) {
  using Complex = ComplexOf<Real>;
  using std::exp;
  const Complex& half_nome = nome.half;
  const Real nome_abs = magnitude<Real>(half_nome);
  if (!(nome_abs < Real(1))) throw ConvergenceError("theta series: |q| >= 1");

  const Complex i = imag_unit<Real>();
  const Complex e1 = exp(i * pi<Real>() * z);  // e^{i pi z}
  const Complex e1_inv = Real(1) / e1;
  const Complex e2 = e1 * e1;
  const Complex e2_inv = e1_inv * e1_inv;
  const Complex q2 = half_nome * half_nome;
  const Real growth = exp(pi<Real>() * (z.imag() < Real(0) ? Real(-z.imag()) : Real(z.imag())));

  Complex sum(Real(0), Real(0));
  bool converged = false;
  if (j == 1 || j == 2) {
    // 2 sum_{n>=0} (+-1)^n q^{(n+1/2)^2} {sin, cos}((2n+1) pi z)
    using std::sqrt;
    Complex weight = nome.quarter;  // q^{1/4}
    Complex ratio = q2;                      // q^{2n+2} steps (n+1/2)^2 -> (n+3/2)^2
    Complex pos = e1;
    Complex neg = e1_inv;
    Real bound_weight = sqrt(sqrt(nome_abs));
    Real bound_growth = growth;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
      Complex term = (j == 1) ? (pos - neg) / (Real(2) * i) : (pos + neg) / Real(2);
      term *= weight;
      if (j == 1 && (n & 1)) term = -term;
      sum += term;
      const Real bound = bound_weight * bound_growth;
      if (bound < trunc_tol * (Real(1) + magnitude<Real>(sum))) {
        converged = true;
        break;
      }
      weight *= ratio;
      bound_weight *= magnitude<Real>(ratio);
      bound_growth *= growth * growth;
      ratio *= q2;
      pos *= e2;
      neg *= e2_inv;
    }
    sum *= Real(2);
  } else {
    // 1 + 2 sum_{n>=1} (+-1)^n q^{n^2} cos(2 n pi z)
    Complex weight = half_nome;  // q^{n^2}
    Complex ratio = half_nome * q2;
    Complex pos = e2;
    Complex neg = e2_inv;
    Real bound_weight = nome_abs;
    Real bound_growth = growth * growth;
    Complex tail(Real(0), Real(0));
    for (int n = 1; n <= kMaxSeriesTerms; ++n) {
      Complex term = weight * (pos + neg) / Real(2);
      if (j == 4 && (n & 1)) term = -term;
      tail += term;
      const Real bound = bound_weight * bound_growth;
      if (bound < trunc_tol * (Real(1) + magnitude<Real>(tail))) {
        converged = true;
        break;
      }
      weight *= ratio;
      bound_weight *= magnitude<Real>(ratio);
      bound_growth *= growth * growth;
      ratio *= q2;
      pos *= e2;
      neg *= e2_inv;
    }
    sum = Complex(Real(1), Real(0)) + Real(2) * tail;
  }
  if (!converged) throw ConvergenceError("theta series: no convergence within 500 terms");
  return sum;
}

// theta_1 .. theta_4 at the reduced point plus the cs sign (-1)^{shift_tau}.
template <class Real>
struct ReducedThetas {
  std::array<ComplexOf<Real>, 4> theta;
  int period_sign;  // (-1)^{tau shifts}
  int one_sign;     // (-1)^{unit shifts}
};

template <class Real>
ReducedThetas<Real> reduced_thetas(const ComplexOf<Real>& z, const BasicEllipticContext<Real>& ctx,
                                   bool need_all) {
  const auto r = reduce<Real>(z, ctx.tau().value());
  ReducedThetas<Real> out{};
  out.period_sign = (r.shift_tau & 1) ? -1 : 1;
  out.one_sign = (r.shift_one & 1) ? -1 : 1;
  const Real tol = ctx.trunc_tol();
  const Nome<Real> nome{ctx.half_nome(), ctx.quarter_nome()};
  out.theta[0] = theta_series<Real>(1, r.z0, nome, tol);
  out.theta[1] = theta_series<Real>(2, r.z0, nome, tol);
  if (need_all) {
    out.theta[2] = theta_series<Real>(3, r.z0, nome, tol);
    out.theta[3] = theta_series<Real>(4, r.z0, nome, tol);
  }
  if (magnitude<Real>(out.theta[0]) < ctx.options().pole_threshold * magnitude<Real>(out.theta[1])) {
    throw PoleError("cs: argument lies on the pole lattice Z + tau Z");
  }
  return out;
}

template <class Real>
ComplexOf<Real> evaluate_poly(const std::vector<ComplexOf<Real>>& coeffs, const ComplexOf<Real>& x) {
  ComplexOf<Real> acc(Real(0), Real(0));
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class Real>
void add_at(std::vector<ComplexOf<Real>>& poly, std::size_t power, const ComplexOf<Real>& value) {
  if (poly.size() <= power) poly.resize(power + 1, ComplexOf<Real>(Real(0), Real(0)));
  poly[power] += value;
}

}  // namespace

std::string_view to_string(Precision p) {
  return p == Precision::Binary64 ? "binary64" : "extended";
}

template <class Real>
BasicTauPoint<Real> BasicTauPoint<Real>::make(const Complex& tau) {
  if (!(tau.imag() > Real(0))) {
    throw DomainError("tau must lie in the upper half plane (Im tau > 0)");
  }
  return BasicTauPoint(tau);
}

template <class Real>
bool BasicTauPoint<Real>::fundamental() const {
  using std::abs;
  const Complex half(Real(0.5), Real(0));
  return abs(tau_.real()) <= Real(1) && magnitude<Real>(tau_ + half) >= Real(0.5) &&
         magnitude<Real>(tau_ - half) >= Real(0.5);
}

template <class Real>
BasicTauPoint<Real> BasicTauPoint<Real>::neg_inverse() const {
  return make(Complex(Real(-1), Real(0)) / tau_);
}

template <class Real>
BasicTauPoint<Real> BasicTauPoint<Real>::shifted() const {
  return make(tau_ + Complex(Real(1), Real(0)));
}

template <class Real>
BasicTauPoint<Real> BasicTauPoint<Real>::neg_inverse_shifted() const {
  return make(Complex(Real(-1), Real(0)) / (tau_ + Complex(Real(1), Real(0))));
}

template <class Real>
BasicTauPoint<Real> BasicTauPoint<Real>::one_minus_inverse() const {
  return make((tau_ - Complex(Real(1), Real(0))) / tau_);
}

template <class Real>
BasicTauPoint<Real> BasicTauPoint<Real>::over_shifted() const {
  return make(tau_ / (tau_ + Complex(Real(1), Real(0))));
}

template <class Real>
const CsDerivativeForm<Real>& BasicEllipticContext<Real>::derivative_form(int order) const {
  if (order < 0 || order >= static_cast<int>(derivatives_.size())) {
    throw DomainError("cs derivative order " + std::to_string(order) + " exceeds the configured maximum " +
                      std::to_string(static_cast<int>(derivatives_.size()) - 1));
  }
  return derivatives_[static_cast<std::size_t>(order)];
}

template <class Real>
ComplexOf<Real> theta_eval(int j, const ComplexOf<Real>& z, const BasicTauPoint<Real>& tau,
                           const Real& trunc_tol) {
  using Complex = ComplexOf<Real>;
  using std::exp;
  if (j < 1 || j > 4) throw DomainError("theta index must be 1..4");
  const Complex t = tau.value();
  const Complex i = imag_unit<Real>();
  const auto r = reduce<Real>(z, t);
  Complex value = theta_series<Real>(j, r.z0, nome_of<Real>(t), trunc_tol);

  // theta_j(z0 + m tau + n) = eps^m delta^n e^{-i pi m^2 tau - 2 pi i m z0} theta_j(z0)
  const Real m(r.shift_tau);
  if (r.shift_tau != 0) {
    value *= exp(-i * pi<Real>() * (m * m * t + Real(2) * m * r.z0));
  }
  const bool flip_tau = (j == 1 || j == 4) && (r.shift_tau & 1);
  const bool flip_one = (j == 1 || j == 2) && (r.shift_one & 1);
  if (flip_tau != flip_one) value = -value;
  return value;
}

template <class Real>
std::vector<CsDerivativeForm<Real>> derivative_forms(int max_order, const ComplexOf<Real>& lambda) {
  using Complex = ComplexOf<Real>;
  if (max_order < 0) throw DomainError("derivative order must be nonnegative");
  const Complex one(Real(1), Real(0));
  const Complex two(Real(2), Real(0));
  const Complex c_lin = two - lambda;   // 2 - lambda
  const Complex c_const = one - lambda; // 1 - lambda

  std::vector<CsDerivativeForm<Real>> forms(static_cast<std::size_t>(max_order) + 1);
  forms[0].even = {Complex(Real(0), Real(0)), one};
  for (int order = 1; order <= max_order; ++order) {
    const auto& prev = forms[static_cast<std::size_t>(order) - 1];
    CsDerivativeForm<Real> next;
    // d/du C^i = -i C^{i-1} ND
    for (std::size_t i = 1; i < prev.even.size(); ++i) {
      add_at<Real>(next.odd, i - 1, -Real(static_cast<double>(i)) * prev.even[i]);
    }
    // d/du ND C^i = -C^{i+1}(2 - lambda + 2C^2) - i C^{i-1}(1 - lambda + (2 - lambda)C^2 + C^4)
    for (std::size_t i = 0; i < prev.odd.size(); ++i) {
      const Complex c = prev.odd[i];
      add_at<Real>(next.even, i + 1, -c * c_lin);
      add_at<Real>(next.even, i + 3, -Real(2) * c);
      if (i > 0) {
        const Complex ci = Real(static_cast<double>(i)) * c;
        add_at<Real>(next.even, i - 1, -ci * c_const);
        add_at<Real>(next.even, i + 1, -ci * c_lin);
        add_at<Real>(next.even, i + 3, -ci);
      }
    }
    forms[static_cast<std::size_t>(order)] = std::move(next);
  }
  return forms;
}

template <class Real>
std::vector<ComplexOf<Real>> laurent_coefficients(int max_n, const ComplexOf<Real>& lambda) {
  using Complex = ComplexOf<Real>;
  if (max_n < 0) throw DomainError("Laurent index must be nonnegative");
  const Complex zero(Real(0), Real(0));
  const Complex one(Real(1), Real(0));
  // c[k] is the coefficient of u^{2k-1}: c[0] = 1, c[k] = g_{2k-1}.
  std::vector<Complex> c(static_cast<std::size_t>(max_n) + 2, zero);
  c[0] = one;
  auto deriv = [&](std::size_t k) { return Real(2 * static_cast<double>(k) - 1) * c[k]; };
  auto square_coeff = [&](std::size_t p) {  // [u^{2p-2}] cs^2
    Complex acc = zero;
    for (std::size_t k = 0; k <= p; ++k) acc += c[k] * c[p - k];
    return acc;
  };
  for (int n = 0; n <= max_n; ++n) {
    const auto s = static_cast<std::size_t>(n) + 1;  // match [u^{2s-4}]
    Complex lhs = zero;                               // (cs')^2
    for (std::size_t i = 0; i <= s; ++i) lhs += deriv(i) * deriv(s - i);
    Complex quartic = zero;                           // cs^4
    for (std::size_t p = 0; p <= s; ++p) quartic += square_coeff(p) * square_coeff(s - p);
    Complex rhs = (Complex(Real(2), Real(0)) - lambda) * square_coeff(s - 1) + quartic;
    if (s == 2) rhs += one - lambda;
    // c[s] enters as -2(2n+1) c[s] on the left and +4 c[s] on the right.
    c[s] = (lhs - rhs) / Real(4 * n + 6);
  }
  return std::vector<Complex>(c.begin() + 1, c.end());
}

template <class Real>
BasicEllipticContext<Real> build_context(const BasicTauPoint<Real>& tau,
                                         const ContextOptions<Real>& options) {
  using Complex = ComplexOf<Real>;
  using std::exp;
  if (!(options.trunc_tol > Real(0))) throw DomainError("trunc_tol must be positive");
  if (options.max_derivative_order < 0 || options.max_laurent_index < 0) {
    throw DomainError("derivative/Laurent limits must be nonnegative");
  }
  BasicEllipticContext<Real> ctx(tau, options);
  const Complex i = imag_unit<Real>();
  const Nome<Real> nome = nome_of<Real>(tau.value());
  ctx.half_nome_ = nome.half;
  ctx.quarter_nome_ = nome.quarter;
  ctx.q_ = exp(Real(2) * i * pi<Real>() * tau.value());
  const Complex zero(Real(0), Real(0));
  for (int j = 2; j <= 4; ++j) {
    ctx.theta0_[static_cast<std::size_t>(j - 2)] = theta_series<Real>(j, zero, nome, options.trunc_tol);
  }
  const Complex t2 = ctx.theta0_[0];
  const Complex t3 = ctx.theta0_[1];
  ctx.k_ = (t2 * t2) / (t3 * t3);
  ctx.lambda_ = ctx.k_ * ctx.k_;
  ctx.big_k_ = pi<Real>() / Real(2) * t3 * t3;
  ctx.derivatives_ = derivative_forms<Real>(options.max_derivative_order, ctx.lambda_);
  ctx.laurent_ = laurent_coefficients<Real>(options.max_laurent_index, ctx.lambda_);
  return ctx;
}

template <class Real>
ComplexOf<Real> cs_eval(const ComplexOf<Real>& z, const BasicEllipticContext<Real>& ctx) {
  const auto r = reduced_thetas<Real>(z, ctx, false);
  const auto& t0 = ctx.theta0();
  ComplexOf<Real> value = (t0[2] / t0[1]) * (r.theta[1] / r.theta[0]);
  return r.period_sign < 0 ? ComplexOf<Real>(-value) : value;
}

template <class Real>
JacobiValues<Real> jacobi_eval(const ComplexOf<Real>& z, const BasicEllipticContext<Real>& ctx) {
  const auto r = reduced_thetas<Real>(z, ctx, true);
  const auto& t0 = ctx.theta0();
  JacobiValues<Real> v{(t0[1] / t0[0]) * (r.theta[0] / r.theta[3]),
                       (t0[2] / t0[0]) * (r.theta[1] / r.theta[3]),
                       (t0[2] / t0[1]) * (r.theta[2] / r.theta[3])};
  // z -> z + tau flips cn, dn; z -> z + 1 flips sn, cn.
  if (r.period_sign < 0) {
    v.cn = -v.cn;
    v.dn = -v.dn;
  }
  if (r.one_sign < 0) {
    v.sn = -v.sn;
    v.cn = -v.cn;
  }
  return v;
}

template <class Real>
ComplexOf<Real> cs_derivative_eval(int order, const ComplexOf<Real>& z,
                                   const BasicEllipticContext<Real>& ctx) {
  using Complex = ComplexOf<Real>;
  const auto& form = ctx.derivative_form(order);
  const auto r = reduced_thetas<Real>(z, ctx, !form.odd.empty());
  const auto& t0 = ctx.theta0();
  const Complex cs = (t0[2] / t0[1]) * (r.theta[1] / r.theta[0]);
  Complex value = evaluate_poly<Real>(form.even, cs);
  if (!form.odd.empty()) {
    // ns ds = dn / sn^2, written without theta_4(z) in a denominator
    const Complex ns_ds = (t0[2] * t0[0] * t0[0] / (t0[1] * t0[1] * t0[1])) *
                          (r.theta[2] * r.theta[3] / (r.theta[0] * r.theta[0]));
    value += ns_ds * evaluate_poly<Real>(form.odd, cs);
  }
  return r.period_sign < 0 ? Complex(-value) : value;
}

template <class Real>
ComplexOf<Real> laurent_g(int n, const BasicEllipticContext<Real>& ctx) {
  if (n < 0) throw DomainError("Laurent index must be nonnegative");
  const auto& g = ctx.laurent();
  if (static_cast<std::size_t>(n) >= g.size()) {
    throw DomainError("Laurent index " + std::to_string(n) + " exceeds the configured maximum");
  }
  return g[static_cast<std::size_t>(n)];
}

template <class Real>
Real LambdaTransformResiduals<Real>::max() const {
  using std::max;
  return max(max(max(neg_inverse, shift), max(neg_inverse_shifted, one_minus_inverse)), over_shifted);
}

template <class Real>
LambdaTransformResiduals<Real> lambda_transform_check(const BasicTauPoint<Real>& tau,
                                                      const Real& ctx_tol) {
  using Complex = ComplexOf<Real>;
  ContextOptions<Real> options;
  options.trunc_tol = ctx_tol;
  options.max_derivative_order = 0;
  options.max_laurent_index = 0;
  auto lambda_at = [&](const BasicTauPoint<Real>& t) { return build_context<Real>(t, options).lambda(); };
  const Complex one(Real(1), Real(0));
  const Complex lam = lambda_at(tau);
  LambdaTransformResiduals<Real> out;
  out.neg_inverse = magnitude<Real>(lambda_at(tau.neg_inverse()) - (one - lam));
  out.shift = magnitude<Real>(lambda_at(tau.shifted()) - lam / (lam - one));
  out.neg_inverse_shifted = magnitude<Real>(lambda_at(tau.neg_inverse_shifted()) - one / (one - lam));
  out.one_minus_inverse = magnitude<Real>(lambda_at(tau.one_minus_inverse()) - (lam - one) / lam);
  out.over_shifted = magnitude<Real>(lambda_at(tau.over_shifted()) - one / lam);
  return out;
}

#define EDSUM_INSTANTIATE_ELLIPTIC(Real)                                                           \
  template class BasicTauPoint<Real>;                                                              \
  template class BasicEllipticContext<Real>;                                                       \
  template struct LambdaTransformResiduals<Real>;                                                  \
  template ComplexOf<Real> theta_eval<Real>(int, const ComplexOf<Real>&, const BasicTauPoint<Real>&, \
                                            const Real&);                                          \
  template BasicEllipticContext<Real> build_context<Real>(const BasicTauPoint<Real>&,              \
                                                          const ContextOptions<Real>&);            \
  template ComplexOf<Real> cs_eval<Real>(const ComplexOf<Real>&, const BasicEllipticContext<Real>&); \
  template ComplexOf<Real> cs_derivative_eval<Real>(int, const ComplexOf<Real>&,                   \
                                                    const BasicEllipticContext<Real>&);            \
  template JacobiValues<Real> jacobi_eval<Real>(const ComplexOf<Real>&,                            \
                                                const BasicEllipticContext<Real>&);                \
  template std::vector<ComplexOf<Real>> laurent_coefficients<Real>(int, const ComplexOf<Real>&);   \
  template ComplexOf<Real> laurent_g<Real>(int, const BasicEllipticContext<Real>&);                \
  template std::vector<CsDerivativeForm<Real>> derivative_forms<Real>(int, const ComplexOf<Real>&); \
  template LambdaTransformResiduals<Real> lambda_transform_check<Real>(const BasicTauPoint<Real>&,  \
                                                                       const Real&);

EDSUM_INSTANTIATE_ELLIPTIC(double)
EDSUM_INSTANTIATE_ELLIPTIC(Quad)

#undef EDSUM_INSTANTIATE_ELLIPTIC

}  // namespace edsum
