#pragma once

// Jacobi theta functions, the modular quantities k, lambda, K and the Jacobi
// function cs(2Kz, k) with its u-derivatives and Laurent coefficients, all in
// the period-normalized variable z (cs has periods 1 and 2 tau in z).
//
// Everything is templated on the real type: double for production sums and
// Quad (~34 significant digits) for oracles.

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace edsum {

using Quad = boost::multiprecision::cpp_bin_float_quad;

enum class Precision { Binary64, Extended };
std::string_view to_string(Precision p);

template <class Real>
struct Numeric;

template <>
struct Numeric<double> {
  using Complex = std::complex<double>;
  static constexpr Precision precision = Precision::Binary64;
  static double default_trunc_tol() { return 1e-18; }
};

template <>
struct Numeric<Quad> {
  using Complex = boost::multiprecision::cpp_complex_quad;
  static constexpr Precision precision = Precision::Extended;
  static Quad default_trunc_tol() { return Quad("1e-36"); }
};

template <class Real>
using ComplexOf = typename Numeric<Real>::Complex;

/// A point of the upper half plane.
template <class Real>
class BasicTauPoint {
 public:
  using Complex = ComplexOf<Real>;

  /// Throws DomainError unless Im(tau) > 0.
  static BasicTauPoint make(const Complex& tau);
  static BasicTauPoint make(const Real& re, const Real& im) { return make(Complex(re, im)); }

  const Complex& value() const { return tau_; }
  Real re() const { return tau_.real(); }
  Real im() const { return tau_.imag(); }

  /// |Re tau| <= 1 and |tau +- 1/2| >= 1/2 (fundamental domain of Gamma(2)).
  bool fundamental() const;

  BasicTauPoint neg_inverse() const;            // -1/tau
  BasicTauPoint shifted() const;                // tau + 1
  BasicTauPoint neg_inverse_shifted() const;    // -1/(tau + 1)
  BasicTauPoint one_minus_inverse() const;      // (tau - 1)/tau
  BasicTauPoint over_shifted() const;           // tau/(tau + 1)

 private:
  explicit BasicTauPoint(const Complex& tau) : tau_(tau) {}
  Complex tau_;
};

template <class Real>
struct ContextOptions {
  Real trunc_tol = Numeric<Real>::default_trunc_tol();
  /// |theta_1(z)| below this times |theta_2(z)| is treated as a pole.
  Real pole_threshold = Real(1e-12);
  int max_derivative_order = 8;
  int max_laurent_index = 16;
};

template <class Real>
class BasicEllipticContext;

template <class Real>
BasicEllipticContext<Real> build_context(const BasicTauPoint<Real>& tau,
                                         const ContextOptions<Real>& options = {});

/// d^N cs/du^N = even(C) + ns*ds * odd(C), polynomials in C = cs(u, k).
template <class Real>
struct CsDerivativeForm {
  std::vector<ComplexOf<Real>> even;
  std::vector<ComplexOf<Real>> odd;
};

/// Immutable evaluation context for one tau.
template <class Real>
class BasicEllipticContext {
 public:
  using Complex = ComplexOf<Real>;

  const BasicTauPoint<Real>& tau() const { return tau_; }
  /// q = e^{2 pi i tau}.
  const Complex& q() const { return q_; }
  /// e^{i pi tau}; the theta series run in powers of this.
  const Complex& half_nome() const { return half_nome_; }
  const Complex& quarter_nome() const { return quarter_nome_; }
  /// theta_2(0), theta_3(0), theta_4(0).
  const std::array<Complex, 3>& theta0() const { return theta0_; }
  const Complex& k() const { return k_; }
  const Complex& lambda() const { return lambda_; }
  const Complex& big_k() const { return big_k_; }
  const Real& trunc_tol() const { return options_.trunc_tol; }
  const ContextOptions<Real>& options() const { return options_; }
  static constexpr Precision precision() { return Numeric<Real>::precision; }

  const CsDerivativeForm<Real>& derivative_form(int order) const;
  /// g_1, g_3, g_5, ... : cs(u) = 1/u + sum_n g_{2n+1} u^{2n+1}.
  const std::vector<Complex>& laurent() const { return laurent_; }

  friend BasicEllipticContext build_context<Real>(const BasicTauPoint<Real>&,
                                                 const ContextOptions<Real>&);

 private:
  BasicEllipticContext(const BasicTauPoint<Real>& tau, const ContextOptions<Real>& options)
      : tau_(tau), options_(options) {}

  BasicTauPoint<Real> tau_;
  ContextOptions<Real> options_;
  Complex q_;
  Complex half_nome_;
  Complex quarter_nome_;
  std::array<Complex, 3> theta0_;
  Complex k_;
  Complex lambda_;
  Complex big_k_;
  std::vector<CsDerivativeForm<Real>> derivatives_;
  std::vector<Complex> laurent_;
};

using TauPoint = BasicTauPoint<double>;
using EllipticContext = BasicEllipticContext<double>;
using ExtendedTauPoint = BasicTauPoint<Quad>;
using ExtendedEllipticContext = BasicEllipticContext<Quad>;

/// theta_j(z, tau), j in 1..4, nome e^{i pi tau}; z is reduced into the
/// fundamental parallelogram first and the quasi-periodic factor reapplied.
template <class Real>
ComplexOf<Real> theta_eval(int j, const ComplexOf<Real>& z, const BasicTauPoint<Real>& tau,
                           const Real& trunc_tol = Numeric<Real>::default_trunc_tol());

inline EllipticContext build_context(std::complex<double> tau, double trunc_tol = 1e-18) {
  ContextOptions<double> options;
  options.trunc_tol = trunc_tol;
  return build_context(TauPoint::make(tau), options);
}

/// cs(2Kz, k) = (theta_4(0)/theta_3(0)) * theta_2(z)/theta_1(z). Throws PoleError near Z + tau Z.
template <class Real>
ComplexOf<Real> cs_eval(const ComplexOf<Real>& z, const BasicEllipticContext<Real>& ctx);

/// d^order/du^order cs(u, k) at u = 2Kz.
template <class Real>
ComplexOf<Real> cs_derivative_eval(int order, const ComplexOf<Real>& z,
                                   const BasicEllipticContext<Real>& ctx);

template <class Real>
struct JacobiValues {
  ComplexOf<Real> sn;
  ComplexOf<Real> cn;
  ComplexOf<Real> dn;
};

/// sn, cn, dn at u = 2Kz from theta quotients.
template <class Real>
JacobiValues<Real> jacobi_eval(const ComplexOf<Real>& z, const BasicEllipticContext<Real>& ctx);

/// Laurent coefficients g_1, g_3, ..., g_{2 max_n + 1} for parameter lambda = k^2,
/// from (cs')^2 = (1 + cs^2)(1 - lambda + cs^2).
template <class Real>
std::vector<ComplexOf<Real>> laurent_coefficients(int max_n, const ComplexOf<Real>& lambda);

/// g_{2n+1}(k) of the context.
template <class Real>
ComplexOf<Real> laurent_g(int n, const BasicEllipticContext<Real>& ctx);

/// Symbolic form of the order-th derivative for parameter lambda.
template <class Real>
std::vector<CsDerivativeForm<Real>> derivative_forms(int max_order, const ComplexOf<Real>& lambda);

template <class Real>
struct LambdaTransformResiduals {
  Real neg_inverse;          // |lambda(-1/tau) - (1 - lambda)|
  Real shift;                // |lambda(tau+1) - lambda/(lambda-1)|
  Real neg_inverse_shifted;  // |lambda(-1/(tau+1)) - 1/(1-lambda)|
  Real one_minus_inverse;    // |lambda((tau-1)/tau) - (lambda-1)/lambda|
  Real over_shifted;         // |lambda(tau/(tau+1)) - 1/lambda|
  Real max() const;
};

template <class Real>
LambdaTransformResiduals<Real> lambda_transform_check(
    const BasicTauPoint<Real>& tau, const Real& ctx_tol = Numeric<Real>::default_trunc_tol());

}  // namespace edsum
