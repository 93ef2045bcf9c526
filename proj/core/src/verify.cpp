#include "edsum/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "edsum/elliptic_sums.hpp"
#include "edsum/errors.hpp"
#include "edsum/exact.hpp"
#include "edsum/sequences.hpp"
#include "json.hpp"

namespace edsum {

std::string_view to_string(VerifyScope scope) {
  return scope == VerifyScope::ExactOnly ? "exact" : "full";
}

VerifyScope parse_scope(std::string_view name) {
  if (name == "exact") return VerifyScope::ExactOnly;
  if (name == "full") return VerifyScope::Full;
  throw DomainError("unknown scope '" + std::string(name) + "' (expected exact or full)");
}

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (c.asserted && !c.passed) return false;
  return true;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS" : (c.asserted ? "FAIL" : "NOTE")) << "  " << c.label
        << "  cases=" << c.cases << " failures=" << c.failures << " worst=" << c.worst_residual;
    if (!c.asserted) out << " (reported only)";
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
  out << (all_passed() ? "all checks passed" : "verification FAILED") << '\n';
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  auto taus = nlohmann::ordered_json::array();
  for (const auto& t : options.taus) taus.push_back({t.re(), t.im()});
  doc["meta"] = {{"scope", std::string(to_string(options.scope))},
                 {"bound", options.bound},
                 {"taus", taus},
                 {"tol", options.tol},
                 {"passed", all_passed()},
                 {"elapsed_ms", elapsed_ms}};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    rows.push_back({{"label", c.label},
                    {"asserted", c.asserted},
                    {"passed", c.passed},
                    {"cases", c.cases},
                    {"failures", c.failures},
                    {"worst_residual", c.worst_residual},
                    {"detail", c.detail}});
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

namespace {

constexpr double kDefinitionalTol = 1e-8;

class Tally {
 public:
  explicit Tally(std::string label, bool asserted = true) {
    result_.label = std::move(label);
    result_.asserted = asserted;
  }

  void exact(bool ok, const std::function<std::string()>& what) {
    ++result_.cases;
    if (!ok) fail(what);
  }

  void numeric(double residual, double tol, const std::function<std::string()>& what) {
    ++result_.cases;
    if (!(residual <= result_.worst_residual)) result_.worst_residual = residual;
    if (!(residual < tol)) fail(what);
  }

  CheckResult done() && {
    result_.passed = result_.failures == 0;
    return std::move(result_);
  }

 private:
  void fail(const std::function<std::string()>& what) {
    if (result_.failures++ == 0) result_.detail = what();
  }
  CheckResult result_;
};

std::string pair_text(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + ";" + std::to_string(b) + ")";
}

template <class Fn>
void for_u_odd(std::int64_t bound, Fn&& fn) {
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t b = 1; b <= bound; ++b)
      if (((a + b) & 1) && gcd64(a, b) == 1) fn(CoprimePair::make(a, b));
}

template <class Fn>
void for_coprime(std::int64_t bound, Fn&& fn) {
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t b = 1; b <= bound; ++b)
      if (gcd64(a, b) == 1) fn(CoprimePair::make(a, b));
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = floor_mod(a, m), r1 = m, x0 = 1, x1 = 0;
  while (r1 != 0) {
    const auto q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  return floor_mod(x0, m);
}

void exact_checks(std::int64_t bound, std::vector<CheckResult>& out) {
  Tally routes("Q routes agree (main, rao, euclid)");
  Tally reciprocity("Q reciprocity Q(a;b) + Q(b;a) = R(a;b)");
  Tally parity("Q parity Q(-a;b) = -Q(a;b)");
  Tally reduction("Q even reduction Q(a+2b;b) = Q(a;b)");
  Tally denominators("denominator classes of bQ");
  Tally m_link("bQ = a(1-3b)/2 + M(a;b)");
  Tally m_shift("M(a+2b;b) = M(a;b) - b(1-3b), M(-a;b) = -M(a;b)");
  Tally m_recip("M reciprocity");
  Tally rao("Hardy-Berndt / Dedekind linear relation");
  for_u_odd(bound, [&](const CoprimePair& p) {
    const auto a = p.a(), b = p.b();
    const auto what = [&] { return pair_text(a, b); };
    const auto q = q_value(p, Route::MainResult);
    routes.exact(q == q_value(p, Route::RaoRoute) && q == q_value(p, Route::EuclideanDescent), what);
    reciprocity.exact(q + q_value(p.swapped()) == reciprocity_constant(a, b), what);
    parity.exact(q_value(p.negated()) == -q, what);
    reduction.exact(q_value(CoprimePair::make(a + 2 * b, b)) == q, what);

    const auto bq = BigRational(b) * q;
    const bool int_ok = (a % 2 == 0) == bq.is_integer();
    const bool half_ok = (a % 2 == 0) || (bq - BigRational(1, 2)).is_integer();
    const auto cls = denominator_class(p);
    denominators.exact(int_ok && half_ok &&
                           (cls == DenominatorClass::Integer) == (a % 2 == 0),
                       what);

    const BigInt m = m_value(p);
    m_link.exact(bq == BigRational(BigInt(a) * (1 - 3 * b), BigInt(2)) + BigRational(m), what);
    const BigInt shifted = m_value(CoprimePair::make(a + 2 * b, b));
    m_shift.exact(shifted == m - BigInt(b) * (1 - 3 * b) && m_value(p.negated()) == -m, what);
    m_recip.exact(m_reciprocity_defect(a, b).is_zero(), what);
    rao.exact(rao_identity_defect(p).is_zero(), what);
  });
  for (auto* t : {&routes, &reciprocity, &parity, &reduction, &denominators, &m_link, &m_shift,
                  &m_recip, &rao})
    out.push_back(std::move(*t).done());

  Tally zero_law("zero law: Q = 0 iff b | a^2 + 1 (a even, b odd)");
  Tally integral("Q integral implies b | a^2 + 1 (a even, b odd)");
  Tally inversion("inversion Q(a;b) = +-Q(a';b), a a' = +-1 mod b");
  for (std::int64_t b = 1; b <= bound; b += 2) {
    for (std::int64_t a = 2; a <= bound; a += 2) {
      if (gcd64(a, b) != 1) continue;
      const auto p = CoprimePair::make(a, b);
      const auto what = [&] { return pair_text(a, b); };
      const auto z = zero_characterization(p);
      zero_law.exact(z.predicted_zero == z.actual_zero, what);
      const bool divides = ((a * a + 1) % b) == 0;
      integral.exact(!q_value(p).is_integer() || divides, what);
      if (b == 1) continue;
      // even representatives of +-a^{-1} mod b
      const auto inv = inverse_mod(a, b);
      const auto plus = inv % 2 == 0 ? inv : inv + b;
      const auto minus = (b - inv) % 2 == 0 ? b - inv : 2 * b - inv;
      const auto c1 = inversion_check(a, plus, b);
      const auto c2 = inversion_check(a, minus, b);
      inversion.exact(c1.applicable && c1.sign == 1 && c1.holds && c2.applicable && c2.sign == -1 &&
                          c2.holds,
                      what);
    }
  }
  out.push_back(std::move(zero_law).done());
  out.push_back(std::move(integral).done());
  out.push_back(std::move(inversion).done());

  Tally s_recip("s(a;b) + s(b;a) = -1/4 + (a^2+b^2+1)/(12ab)");
  Tally s_den("2b gcd(3,b) s(a;b) is an integer");
  Tally s_zero("s(a;b) = 0 iff b | a^2 + 1");
  for_coprime(bound, [&](const CoprimePair& p) {
    const auto a = p.a(), b = p.b();
    const auto what = [&] { return pair_text(a, b); };
    const auto s = dedekind_sum(a, b);
    s_recip.exact(s + dedekind_sum(b, a) ==
                      BigRational(-1, 4) + BigRational(a * a + b * b + 1, 12 * a * b),
                  what);
    s_den.exact((BigRational(2 * b * gcd64(3, b)) * s).is_integer(), what);
    s_zero.exact(s.is_zero() == ((a * a + 1) % b == 0), what);
  });
  out.push_back(std::move(s_recip).done());
  out.push_back(std::move(s_den).done());
  out.push_back(std::move(s_zero).done());

  Tally closed("s(1;b) and s(2;b) closed forms");
  for (std::int64_t b = 1; b <= bound; ++b) {
    const auto what = [&] { return "b=" + std::to_string(b); };
    closed.exact(dedekind_sum(1, b) == BigRational((b - 1) * (b - 2), 12 * b), what);
    if (b % 2 == 1)
      closed.exact(dedekind_sum(2, b) == BigRational((b - 1) * (b - 5), 24 * b), what);
  }
  out.push_back(std::move(closed).done());

  Tally cassini("Cassini identity for P^(N)");
  Tally seq_coprime("consecutive P^(N) terms coprime");
  Tally zeros("Q vanishes on sequence pairs");
  Tally even_sign("Q(P_{2m+1};P_{2m}) = Q(P_{2m-1};P_{2m}), N even");
  Tally odd_sign("Q(P_{3m+-1};P_{3m}) = (-1)^m Q(P_{3m-+1};P_{3m}), N odd", false);
  for (std::int64_t n = 1; n <= 6; ++n) {
    const auto terms = p_terms({n, 40});
    for (std::int64_t m = 1; m + 1 < 40; ++m) {
      const auto what = [&] { return "N=" + std::to_string(n) + " M=" + std::to_string(m); };
      cassini.exact(cassini_defect(n, m) == 0, what);
      const auto& x = terms[static_cast<std::size_t>(m)];
      const auto& y = terms[static_cast<std::size_t>(m + 1)];
      seq_coprime.exact(gcd(x, y) == 1, what);
    }
    for (const auto& rec : zero_pairs(n, 6)) {
      const auto outcome = verify_zero_pair(rec);
      zeros.exact(outcome.in_u_odd && outcome.is_zero, [&] {
        return "N=" + std::to_string(n) + " (" + rec.a.get_str() + ";" + rec.b.get_str() + ")";
      });
    }
    for (const auto& rel : sign_relations(n, 6)) {
      if (!rel.evaluated()) continue;
      auto& tally = n % 2 == 0 ? even_sign : odd_sign;
      tally.exact(rel.holds(), [&] {
        return "N=" + std::to_string(n) + " (" + rel.lhs.a.get_str() + ";" + rel.lhs.b.get_str() + ")";
      });
    }
  }
  for (auto* t : {&cassini, &seq_coprime, &zeros, &even_sign, &odd_sign})
    out.push_back(std::move(*t).done());
}

std::string tau_text(const TauPoint& t) {
  std::ostringstream s;
  s << t.re() << (t.im() < 0 ? "" : "+") << t.im() << "i";
  return s.str();
}

void special_checks(const TauPoint& tau, const EllipticContext& ctx, std::vector<CheckResult>& out) {
  using C = std::complex<double>;
  const auto at = " @ tau=" + tau_text(tau);
  const auto nowhere = [] { return std::string(); };

  if (std::fabs(tau.re()) < 1e-15 && std::fabs(tau.im() - 1.0) < 1e-15) {
    Tally t("lambda(i) = 1/2");
    t.numeric(std::abs(ctx.lambda() - 0.5), 1e-12, nowhere);
    out.push_back(std::move(t).done());
  }
  {
    Tally t("lambda modular transforms" + at);
    t.numeric(lambda_transform_check(tau).max(), 1e-10, nowhere);
    out.push_back(std::move(t).done());
  }

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unit(0.05, 0.45);
  std::uniform_int_distribution<int> sign(0, 1);
  const auto sample = [&] {
    const double x = unit(rng) * (sign(rng) ? 1 : -1);
    const double y = unit(rng) * (sign(rng) ? 1 : -1);
    return C(x, 0.0) + y * tau.value();
  };

  {
    Tally t("cs parity" + at);
    for (int i = 0; i < 100; ++i) {
      const C z = sample();
      const C v = cs_eval(z, ctx);
      t.numeric(std::abs(cs_eval(-z, ctx) + v) / (1.0 + std::abs(v)), 1e-10,
                [&] { return "z=" + std::to_string(z.real()) + "," + std::to_string(z.imag()); });
    }
    out.push_back(std::move(t).done());
  }
  {
    Tally t("cs periodicity" + at);
    for (int i = 0; i < 5; ++i) {
      const C z = sample();
      const C v = cs_eval(z, ctx);
      for (int mu = -2; mu <= 2; ++mu)
        for (int nu = -2; nu <= 2; ++nu) {
          const C shifted = cs_eval(z + double(mu) * tau.value() + double(nu), ctx);
          const C expect = (mu % 2 == 0) ? v : -v;
          t.numeric(std::abs(shifted - expect) / (1.0 + std::abs(v)), 1e-9,
                    [&] { return "mu=" + std::to_string(mu) + " nu=" + std::to_string(nu); });
        }
    }
    out.push_back(std::move(t).done());
  }
  {
    Tally t("cs derivatives vs finite differences" + at);
    const double h = 1e-3;
    const auto two_k = 2.0 * ctx.big_k();
    for (int i = 0; i < 20; ++i) {
      const C z = sample();
      for (int order = 1; order <= 4; ++order) {
        const auto f = [&](const C& w) {
          return order == 1 ? cs_eval(w, ctx) : cs_derivative_eval(order - 1, w, ctx);
        };
        const C fd = (-f(z + 2 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2 * h)) / (12 * h) / two_k;
        const C exact = cs_derivative_eval(order, z, ctx);
        t.numeric(std::abs(fd - exact) / std::max(1.0, std::abs(exact)), 1e-5,
                  [&] { return "order " + std::to_string(order); });
      }
    }
    out.push_back(std::move(t).done());
  }
  {
    Tally t("Laurent g1, g3 closed forms" + at);
    const C lam = ctx.lambda();
    t.numeric(std::abs(laurent_g(0, ctx) + (1.0 / 3.0 - lam / 6.0)), 1e-12, nowhere);
    t.numeric(std::abs(laurent_g(1, ctx) + (1.0 / 45.0 - lam / 45.0 - 7.0 * lam * lam / 360.0)), 1e-12,
              nowhere);
    out.push_back(std::move(t).done());
  }
  {
    Tally t("Laurent series reproduces cs near 0" + at);
    for (int i = 0; i < 8; ++i) {
      const C u = std::polar(0.05, 0.3 + i * 0.7);
      C series = 1.0 / u;
      const C u2 = u * u;
      C power = u;
      for (int n = 0; n < 7; ++n, power *= u2) series += laurent_g(n, ctx) * power;
      const C cs = cs_eval(u / (2.0 * ctx.big_k()), ctx);
      t.numeric(std::abs(cs - series) / std::abs(cs), 1e-10, nowhere);
    }
    out.push_back(std::move(t).done());
  }
}

void lattice_checks(const TauPoint& tau, const EllipticContext& ctx, std::int64_t bound, double tol,
                    std::vector<CheckResult>& out) {
  const auto at = " @ tau=" + tau_text(tau);
  const auto small = std::min<std::int64_t>(bound, 9);

  {
    Tally t("rationality s_tau/(1/3 - lambda/6) = Q" + at);
    const auto factor = rational_prefactor(ctx);
    if (std::abs(factor) >= 1e-8) {
      for_u_odd(bound, [&](const CoprimePair& p) {
        t.numeric(rational_extract(p, ctx).abs_error, tol, [&] { return p.to_string(); });
      });
    }
    out.push_back(std::move(t).done());
  }
  {
    Tally par("s_tau parity" + at);
    Tally red("s_tau even reduction" + at);
    Tally inv("s_tau inversion" + at);
    Tally imag("Im s_tau = 0 on the imaginary axis" + at);
    const bool imaginary_axis = std::fabs(tau.re()) < 1e-15;
    // Off U° the sum over 0 <= mu, nu < b depends on the residue
    // representatives, so every lattice identity is taken on U°.
    for_u_odd(bound, [&](const CoprimePair& p) {
      const auto a = p.a(), b = p.b();
      const auto what = [&] { return p.to_string(); };
      const auto s = elliptic_sum(p, ctx).value;
      const auto scale = 1.0 + std::abs(s);
      par.numeric(std::abs(elliptic_sum(p.negated(), ctx, LatticeEvaluation::Direct).value + s) / scale,
                  kDefinitionalTol, what);
      red.numeric(std::abs(elliptic_sum(CoprimePair::make(a + 2 * b, b), ctx, LatticeEvaluation::Direct)
                               .value -
                           s) /
                      scale,
                  kDefinitionalTol, what);
      if (b > 1) {
        // a a' = +-1 mod b (b odd, a' even) or mod 2b (b even, a' odd)
        const auto m = b % 2 == 1 ? b : 2 * b;
        const auto ia = inverse_mod(a, m);
        const auto plus = (ia + b) % 2 == 1 ? ia : ia + b;
        const auto minus = (m - ia + b) % 2 == 1 ? m - ia : m - ia + b;
        const auto sp = elliptic_sum(CoprimePair::make(plus, b), ctx).value;
        const auto sm = elliptic_sum(CoprimePair::make(minus, b), ctx).value;
        inv.numeric(std::max(std::abs(sp - s), std::abs(sm + s)) / scale, kDefinitionalTol, what);
      }
      if (imaginary_axis) imag.numeric(std::fabs(s.imag()), kDefinitionalTol, what);
    });
    out.push_back(std::move(par).done());
    out.push_back(std::move(red).done());
    out.push_back(std::move(inv).done());
    if (imaginary_axis) out.push_back(std::move(imag).done());
  }
  {
    Tally t("s_tau reciprocity = R(a;b)(1/3 - lambda/6)" + at);
    const auto factor = rational_prefactor(ctx);
    for_u_odd(bound, [&](const CoprimePair& p) {
      const auto lhs = elliptic_sum(p, ctx).value + elliptic_sum(p.swapped(), ctx).value;
      t.numeric(std::abs(lhs - reciprocity_constant(p.a(), p.b()).to_double() * factor), tol,
                [&] { return p.to_string(); });
    });
    out.push_back(std::move(t).done());
  }
  {
    Tally t("s_{2n,tau} vanishes, 2n in {2,4,6}" + at);
    for (int order : {1, 3, 5})
      for_u_odd(small, [&](const CoprimePair& p) {
        t.numeric(std::abs(apostol_sum(order, p, ctx).value), tol,
                  [&] { return "N=" + std::to_string(order) + " " + p.to_string(); });
      });
    out.push_back(std::move(t).done());
  }
  {
    Tally t("Apostol reciprocity, n = 0" + at);
    for_u_odd(small, [&](const CoprimePair& p) {
      t.numeric(std::abs(apostol_reciprocity_residual(0, p, ctx).residual()), tol,
                [&] { return p.to_string(); });
    });
    out.push_back(std::move(t).done());
  }
  {
    Tally t("modular images of s_tau" + at);
    for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {1, 2}}) {
      if (a > bound || b > bound) continue;
      const auto p = CoprimePair::make(a, b);
      t.numeric(modular_corollary_check(p, tau).max(), 1e-5, [&] { return p.to_string(); });
    }
    out.push_back(std::move(t).done());
  }
}

void global_elliptic_checks(std::int64_t bound, double tol, std::vector<CheckResult>& out) {
  const auto small = std::min<std::int64_t>(bound, 9);
  {
    Tally t("trigonometric degeneration at tau = 30i");
    for_u_odd(small, [&](const CoprimePair& p) {
      t.numeric(degeneration_check(p, 30.0).abs_error, tol, [&] { return p.to_string(); });
    });
    out.push_back(std::move(t).done());
  }
  {
    Tally t("s_tau vanishes at tau = (+-1 + i)/2");
    for (double re : {-0.5, 0.5}) {
      const auto ctx = build_context({re, 0.5});
      for_u_odd(small, [&](const CoprimePair& p) {
        t.numeric(std::abs(elliptic_sum(p, ctx).value), tol, [&] { return p.to_string(); });
      });
    }
    out.push_back(std::move(t).done());
  }
}

}  // namespace

VerifyReport verify_suite(const VerifyOptions& options) {
  if (options.bound < 1) throw DomainError("verify bound must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.options = options;
  if (options.scope == VerifyScope::Full && report.options.taus.empty()) {
    report.options.taus = {TauPoint::make(0.0, 1.0), TauPoint::make(0.0, 2.0),
                           TauPoint::make(0.3, 1.5)};
  }

  exact_checks(options.bound, report.checks);
  if (options.scope == VerifyScope::Full) {
    for (const auto& tau : report.options.taus) {
      const auto ctx = build_context(tau);
      special_checks(tau, ctx, report.checks);
      lattice_checks(tau, ctx, options.bound, options.tol, report.checks);
    }
    global_elliptic_checks(options.bound, options.tol, report.checks);
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace edsum
