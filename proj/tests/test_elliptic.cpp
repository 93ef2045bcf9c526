#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "edsum/elliptic.hpp"
#include "edsum/errors.hpp"
#include "support.hpp"

using namespace edsum;
using C = std::complex<double>;
using QC = ComplexOf<Quad>;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Jacobi triple products in the half nome q = e^{i pi tau}.
C theta_product(int j, C z, C tau) {
  const C q = std::exp(C(0, kPi) * tau);
  const C quarter = std::exp(C(0, kPi / 4) * tau);
  const C c2 = std::cos(2.0 * kPi * z);
  C prod = (j == 1)   ? 2.0 * quarter * std::sin(kPi * z)
           : (j == 2) ? 2.0 * quarter * std::cos(kPi * z)
                      : C(1);
  C q2n = 1;  // q^{2n}
  for (int n = 1; n < 400; ++n) {
    const C q2n_1 = q2n * q;  // q^{2n-1}
    q2n *= q * q;
    C f;
    switch (j) {
      case 1: f = (1.0 - q2n) * (1.0 - 2.0 * c2 * q2n + q2n * q2n); break;
      case 2: f = (1.0 - q2n) * (1.0 + 2.0 * c2 * q2n + q2n * q2n); break;
      case 3: f = (1.0 - q2n) * (1.0 + 2.0 * c2 * q2n_1 + q2n_1 * q2n_1); break;
      default: f = (1.0 - q2n) * (1.0 - 2.0 * c2 * q2n_1 + q2n_1 * q2n_1); break;
    }
    prod *= f;
    if (std::abs(q2n) < 1e-30) break;
  }
  return prod;
}

double to_d(const Quad& x) { return x.convert_to<double>(); }
C to_c(const QC& x) { return {to_d(x.real()), to_d(x.imag())}; }

ExtendedEllipticContext extended(double re, double im) {
  return build_context(ExtendedTauPoint::make(QC(Quad(re), Quad(im))));
}

// tau = iT with lambda(iT) = target, by bisection (lambda falls as T grows).
double tau_for_lambda(double target) {
  double lo = 0.2, hi = 10;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (build_context(C(0, mid)).lambda().real() > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST(TauPoint, Validation) {
  EXPECT_THROW(TauPoint::make(C(0, 0)), DomainError);
  EXPECT_THROW(TauPoint::make(C(0.3, -1)), DomainError);
  EXPECT_TRUE(TauPoint::make(C(0, 1)).fundamental());
  EXPECT_TRUE(TauPoint::make(C(0.9, 0.6)).fundamental());
  EXPECT_FALSE(TauPoint::make(C(0.5, 0.2)).fundamental());
  EXPECT_FALSE(TauPoint::make(C(1.5, 2)).fundamental());
  const auto t = TauPoint::make(C(0.3, 1.5));
  EXPECT_NEAR(std::abs(t.neg_inverse().value() - (-1.0 / C(0.3, 1.5))), 0, 1e-15);
  EXPECT_NEAR(std::abs(t.over_shifted().value() - C(0.3, 1.5) / C(1.3, 1.5)), 0, 1e-15);
}

TEST(Theta, ThetaOneVanishesAtZero) {
  for (C tau : {C(0, 1), C(0.3, 1.5), C(-0.7, 0.8)}) {
    EXPECT_EQ(theta_eval<double>(1, C(0, 0), TauPoint::make(tau)), C(0, 0));
  }
}

TEST(Theta, MatchesTripleProduct) {
  auto rng = testkit::make_rng(20);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (C tau : {C(0, 1), C(0.3, 1.5), C(-0.45, 0.7), C(0.9, 0.6)}) {
    const auto t = TauPoint::make(tau);
    for (int i = 0; i < 20; ++i) {
      const C z = C(u(rng), 0) + u(rng) * tau;
      for (int j = 1; j <= 4; ++j) {
        const C expect = theta_product(j, z, tau);
        const C got = theta_eval<double>(j, z, t);
        EXPECT_LT(std::abs(got - expect), 1e-11 * (1 + std::abs(expect))) << "j=" << j << " z=" << z;
      }
    }
  }
}

TEST(Theta, TighterTruncationAgrees) {
  const Quad tight("1e-30");
  const auto qt = ExtendedTauPoint::make(QC(Quad(0), Quad(1)));
  const QC t3 = theta_eval<Quad>(3, QC(Quad(0), Quad(0)), qt, tight);
  const C loose = theta_eval<double>(3, C(0, 0), TauPoint::make(C(0, 1)), 1e-12);
  EXPECT_NEAR(std::abs(to_c(t3) - loose), 0, 1e-12);
  // theta_3(0, i) = pi^{1/4} / Gamma(3/4)
  EXPECT_NEAR(to_d(t3.real()), std::pow(kPi, 0.25) / std::tgamma(0.75), 1e-15);
}

TEST(Context, SpecialValues) {
  const auto ctx = build_context(C(0, 1));
  EXPECT_NEAR(std::abs(ctx.lambda() - 0.5), 0, 1e-12);
  EXPECT_NEAR(std::abs(1.0 / 3.0 - ctx.lambda() / 6.0 - 0.25), 0, 1e-12);
  const auto th = ctx.theta0();
  EXPECT_NEAR(std::abs(std::pow(th[0], 4) / std::pow(th[1], 4) - 0.5), 0, 1e-12);
  EXPECT_NEAR(std::abs(ctx.k() * ctx.k() - ctx.lambda()), 0, 1e-15);
  EXPECT_NEAR(std::abs(ctx.big_k() - kPi / 2 * th[1] * th[1]), 0, 1e-15);
  EXPECT_LT(std::abs(ctx.q()), 1.0);

  const auto far = build_context(C(0, 30));
  EXPECT_NEAR(std::abs(far.big_k() - kPi / 2), 0, 1e-6);
  EXPECT_LT(std::abs(far.lambda()), 1e-30);
}

TEST(Context, ExtendedAgreesWithBinary64) {
  for (auto [re, im] : {std::pair{0.0, 1.0}, {0.3, 1.5}, {-0.2, 0.8}}) {
    const auto d = build_context(C(re, im));
    const auto x = extended(re, im);
    EXPECT_NEAR(std::abs(to_c(x.lambda()) - d.lambda()), 0, 1e-14);
    EXPECT_NEAR(std::abs(to_c(x.big_k()) - d.big_k()), 0, 1e-14);
    EXPECT_EQ(x.precision(), Precision::Extended);
  }
  // about 34 digits: lambda(i) = 1/2
  const auto x = extended(0, 1);
  EXPECT_LT(to_d(abs(x.lambda() - QC(Quad(0.5), Quad(0)))), 1e-31);
}

TEST(LambdaTransforms, Examples) {
  EXPECT_LT(lambda_transform_check(TauPoint::make(C(0, 1))).max(), 1e-10);
  EXPECT_LT(lambda_transform_check(TauPoint::make(C(0.3, 1.5))).max(), 1e-10);
  EXPECT_LT(lambda_transform_check(TauPoint::make(C(0, 1))).neg_inverse, 1e-12);
}

TEST(LambdaTransforms, FundamentalDomainGrid) {
  for (double x : {-0.9, -0.5, -0.2, 0.0, 0.35, 0.5, 0.9})
    for (double y : {0.6, 1.0, 1.5, 3.0}) {
      const auto t = TauPoint::make(C(x, y));
      ASSERT_TRUE(t.fundamental());
      EXPECT_LT(lambda_transform_check(t).max(), 1e-10) << t.value();
    }
}

TEST(Cs, Examples) {
  const auto far = build_context(C(0, 30));
  EXPECT_NEAR(std::abs(cs_eval(C(0.25, 0), far) - 1.0), 0, 1e-6);
  const auto ctx = build_context(C(0, 1));
  const C z(0.13, 0.07);
  EXPECT_LT(std::abs(cs_eval(-z, ctx) + cs_eval(z, ctx)), 1e-10);
  EXPECT_LT(std::abs(cs_eval(C(0.3, 0) + C(0, 1), ctx) + cs_eval(C(0.3, 0), ctx)), 1e-10);
}

TEST(Cs, PolesAreSignalled) {
  const auto ctx = build_context(C(0.3, 1.5));
  EXPECT_THROW(cs_eval(C(0, 0), ctx), PoleError);
  EXPECT_THROW(cs_eval(C(1, 0), ctx), PoleError);
  EXPECT_THROW(cs_eval(C(0.3, 1.5), ctx), PoleError);
  EXPECT_THROW(cs_eval(C(-2.6, -3.0), ctx), PoleError);
  EXPECT_THROW(cs_derivative_eval(2, C(0, 0), ctx), PoleError);
  EXPECT_NO_THROW(cs_eval(C(0.5, 0), ctx));
}

TEST(Cs, ParityAndPeriodicityRandom) {
  auto rng = testkit::make_rng(21);
  std::uniform_real_distribution<double> u(-0.49, 0.49);
  for (C tau : {C(0, 1), C(0.3, 1.5), C(0.5, 0.9)}) {
    const auto ctx = build_context(tau);
    for (int i = 0; i < 100; ++i) {
      const C z = C(u(rng), 0) + u(rng) * tau;
      if (std::abs(z) < 1e-3) continue;
      const C v = cs_eval(z, ctx);
      EXPECT_LT(std::abs(cs_eval(-z, ctx) + v), 1e-10 * (1 + std::abs(v)));
      for (int mu = -2; mu <= 2; ++mu)
        for (int nu = -2; nu <= 2; ++nu) {
          const C w = cs_eval(z + double(mu) * tau + double(nu), ctx);
          EXPECT_LT(std::abs(w - ((mu % 2) ? -v : v)), 1e-9 * (1 + std::abs(v)));
        }
    }
  }
}

TEST(Cs, TrigonometricDegeneration) {
  const double T = 25;
  const auto ctx = build_context(C(0, T));
  for (double x = 0.05; x < 1; x += 0.1)
    EXPECT_LT(std::abs(cs_eval(C(x, 0), ctx) - 1.0 / std::tan(kPi * x)), 1e-12);
  // inside the strip the limit is -(-1)^floor(w) i
  for (double w : {0.3, 0.5, 0.7})
    EXPECT_LT(std::abs(cs_eval(C(0.2, 0) + w * C(0, T), ctx) - C(0, -1)), 1e-6) << w;
  for (double w : {1.3, 1.6})
    EXPECT_LT(std::abs(cs_eval(C(0.2, 0) + w * C(0, T), ctx) - C(0, 1)), 1e-6) << w;
}

TEST(Jacobi, FundamentalIdentities) {
  auto rng = testkit::make_rng(22);
  std::uniform_real_distribution<double> u(-0.45, 0.45);
  for (C tau : {C(0, 1), C(0.3, 1.5)}) {
    const auto ctx = build_context(tau);
    for (int i = 0; i < 50; ++i) {
      const C z = C(u(rng), 0) + u(rng) * tau;
      const auto v = jacobi_eval(z, ctx);
      EXPECT_LT(std::abs(v.sn * v.sn + v.cn * v.cn - 1.0), 1e-11);
      EXPECT_LT(std::abs(ctx.lambda() * v.sn * v.sn + v.dn * v.dn - 1.0), 1e-11);
      EXPECT_LT(std::abs(v.cn / v.sn - cs_eval(z, ctx)), 1e-10 * (1 + std::abs(v.cn / v.sn)));
      // shifts by tau flip cn and dn; shifts by 1 flip sn and cn
      const auto t = jacobi_eval(z + tau, ctx);
      EXPECT_LT(std::abs(t.sn - v.sn) + std::abs(t.cn + v.cn) + std::abs(t.dn + v.dn), 1e-9);
      const auto o = jacobi_eval(z + 1.0, ctx);
      EXPECT_LT(std::abs(o.sn + v.sn) + std::abs(o.cn + v.cn) + std::abs(o.dn - v.dn), 1e-9);
    }
  }
}

TEST(Derivatives, Examples) {
  const auto ctx = build_context(C(0, 1));
  const C z(0.2, 0);
  const double h = 1e-4;
  const C two_k = 2.0 * ctx.big_k();
  const C fd1 = (cs_eval(z + h, ctx) - cs_eval(z - h, ctx)) / (2 * h) / two_k;
  const C d1 = cs_derivative_eval(1, z, ctx);
  EXPECT_LT(std::abs(fd1 - d1) / std::abs(d1), 1e-6);
  const C fd2 = (cs_derivative_eval(1, z + h, ctx) - cs_derivative_eval(1, z - h, ctx)) / (2 * h) / two_k;
  const C d2 = cs_derivative_eval(2, z, ctx);
  EXPECT_LT(std::abs(fd2 - d2) / std::abs(d2), 1e-6);
  EXPECT_EQ(cs_derivative_eval(0, z, ctx), cs_eval(z, ctx));

  const auto far = build_context(C(0, 30));
  EXPECT_NEAR(std::abs(cs_derivative_eval(1, C(0.25, 0), far) + 2.0), 0, 1e-6);
  EXPECT_THROW(cs_derivative_eval(9, z, ctx), DomainError);
}

TEST(Derivatives, MatchExtendedFiniteDifferencesOfCs) {
  // n-th central difference of cs_eval itself, in extended precision
  auto rng = testkit::make_rng(23);
  std::uniform_real_distribution<double> u(0.05, 0.45);
  for (auto [re, im] : {std::pair{0.0, 1.0}, {0.3, 1.5}}) {
    const auto x = extended(re, im);
    const auto d = build_context(C(re, im));
    const Quad h("1e-7");
    const QC two_k = Quad(2) * x.big_k();
    for (int i = 0; i < 20; ++i) {
      const double a = u(rng), b = u(rng);
      const QC z = QC(Quad(a), Quad(0)) + Quad(b) * x.tau().value();
      for (int n = 1; n <= 4; ++n) {
        QC acc(Quad(0), Quad(0));
        Quad binom = 1;
        for (int k = 0; k <= n; ++k) {
          const Quad offset = (Quad(n) / 2 - k) * h;
          const QC term = binom * cs_eval(z + QC(offset, Quad(0)), x);
          acc += (k % 2 ? QC(-term) : term);
          binom = binom * (n - k) / (k + 1);
        }
        Quad scale = 1;
        for (int k = 0; k < n; ++k) scale *= h;
        QC tk = 1;
        for (int k = 0; k < n; ++k) tk *= two_k;
        const C fd = to_c(acc / scale / tk);
        const C exact = cs_derivative_eval(n, to_c(z), d);
        EXPECT_LT(std::abs(fd - exact) / std::max(1.0, std::abs(exact)), 1e-5) << "n=" << n;
      }
    }
  }
}

TEST(Laurent, ClosedForms) {
  for (double lam : {0.0, 0.1, 0.25, 0.5, 0.7, 0.95}) {
    const auto g = laurent_coefficients<double>(4, C(lam, 0));
    EXPECT_NEAR(std::abs(g[0] + (1.0 / 3 - lam / 6)), 0, 1e-12);
    EXPECT_NEAR(std::abs(g[1] + (1.0 / 45 - lam / 45 - 7 * lam * lam / 360)), 0, 1e-12);
  }
  const auto g0 = laurent_coefficients<double>(2, C(0, 0));
  EXPECT_NEAR(g0[1].real(), -1.0 / 45, 1e-15);
  // lambda = 0: cot(u) = 1/u - u/3 - u^3/45 - 2u^5/945 + ...
  EXPECT_NEAR(g0[2].real(), -2.0 / 945, 1e-15);
  const auto ctx = build_context(C(0, 1));
  EXPECT_NEAR(std::abs(laurent_g(0, ctx) + 0.25), 0, 1e-12);
  EXPECT_THROW(laurent_g(17, ctx), DomainError);
}

TEST(Laurent, FifthCoefficientMatchesSeriesFit) {
  const double T = tau_for_lambda(0.3);
  const auto x = extended(0, T);
  ASSERT_LT(to_d(abs(x.lambda() - QC(Quad(0.3), Quad(0)))), 1e-9);
  // r(u)/u^5 = g5 + g7 u^2 + ..., eliminated between u = 1e-1 and 1e-2
  auto ratio = [&](const Quad& u) {
    const QC cs = cs_eval(QC(u, Quad(0)) / (Quad(2) * x.big_k()), x);
    const QC r = cs - QC(Quad(1) / u, Quad(0)) - laurent_g(0, x) * u - laurent_g(1, x) * u * u * u;
    return r / (u * u * u * u * u);
  };
  const Quad u1("0.1"), u2("0.01");
  const QC fit = (ratio(u2) * u1 * u1 - ratio(u1) * u2 * u2) / (u1 * u1 - u2 * u2);
  EXPECT_LT(to_d(abs(fit - laurent_g(2, x))), 1e-8 * to_d(abs(laurent_g(2, x))) + 1e-12);
}

TEST(Laurent, RemainderScalesLikeUToTheEleventh) {
  const auto x = extended(0.3, 1.5);
  auto remainder = [&](const Quad& u) {
    QC series(Quad(1) / u, Quad(0));
    Quad power = u;
    for (int n = 0; n <= 4; ++n, power *= u * u) series += laurent_g(n, x) * power;
    return to_d(abs(cs_eval(QC(u, Quad(0)) / (Quad(2) * x.big_k()), x) - series));
  };
  const double r1 = remainder(Quad("0.2")), r2 = remainder(Quad("0.1")), r3 = remainder(Quad("0.05"));
  const double slope1 = std::log2(r1 / r2), slope2 = std::log2(r2 / r3);
  EXPECT_NEAR(slope1, 11.0, 0.3);
  EXPECT_NEAR(slope2, 11.0, 0.1);
}

TEST(DerivativeForms, FirstOrderIsMinusNsDs) {
  const auto forms = derivative_forms<double>(3, C(0.4, 0));
  ASSERT_EQ(forms.size(), 4u);
  // d cs/du = -ns ds: no even part, odd part -1
  EXPECT_TRUE(forms[1].even.empty() || std::abs(forms[1].even[0]) == 0);
  ASSERT_FALSE(forms[1].odd.empty());
  EXPECT_EQ(forms[1].odd[0], C(-1, 0));
}
