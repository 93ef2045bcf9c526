// Acceptance suite: one PASS / FAIL / SKIP line per criterion.
//
// usage: edsum_acceptance [id ...]   ids are 1..11 and 7b; no ids runs all.
// A single skipped criterion exits with kSkipCode so ctest can mark it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "edsum/elliptic.hpp"
#include "edsum/elliptic_sums.hpp"
#include "edsum/exact.hpp"
#include "edsum/scan.hpp"
#include "edsum/sequences.hpp"
#include "edsum/tables.hpp"
#include "reference_tables.hpp"

namespace {

using namespace edsum;
using C = std::complex<double>;

constexpr int kSkipCode = 77;
constexpr std::size_t kMaxDetails = 25;

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status = Status::Pass;
  std::string summary;
  std::vector<std::string> details;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

std::string secs(double s) { return fmt(s) + " s"; }

// Collects failures, keeps the worst residual and the first few messages.
class Ledger {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (details_.size() < kMaxDetails) details_.push_back(what());
  }
  void residual(double r, double tol, const std::function<std::string()>& what) {
    worst_ = std::max(worst_, std::isnan(r) ? INFINITY : r);
    check(r < tol, [&] { return what() + ": residual " + fmt(r); });
  }
  void note(std::string line) { details_.push_back(std::move(line)); }

  bool ok() const { return failures_ == 0; }
  std::int64_t cases() const { return cases_; }
  std::int64_t failures() const { return failures_; }
  double worst() const { return worst_; }

  Outcome finish(std::string summary) && {
    Outcome out;
    out.status = ok() ? Status::Pass : Status::Fail;
    out.summary = std::move(summary) + " [" + std::to_string(cases_ - failures_) + "/" +
                  std::to_string(cases_) + " ok]";
    if (failures_ > static_cast<std::int64_t>(kMaxDetails))
      details_.push_back("... " + std::to_string(failures_ - static_cast<std::int64_t>(kMaxDetails)) +
                         " more failures");
    out.details = std::move(details_);
    return out;
  }

 private:
  std::int64_t cases_ = 0;
  std::int64_t failures_ = 0;
  double worst_ = 0;
  std::vector<std::string> details_;
};

template <class Fn>
void for_u_odd(std::int64_t max_a, std::int64_t max_b, Fn&& fn) {
  for (std::int64_t b = 1; b <= max_b; ++b)
    for (std::int64_t a = 1; a <= max_a; ++a)
      if (((a + b) & 1) && gcd64(a, b) == 1) fn(CoprimePair::make(a, b));
}

const std::vector<C>& standard_taus() {
  static const std::vector<C> taus = {C(0, 1), C(0, 2), C(0.3, 1.5)};
  return taus;
}

std::string tau_text(const C& tau) { return "tau=" + fmt(tau.real()) + "+" + fmt(tau.imag()) + "i"; }

// ---------------------------------------------------------------------------

template <std::size_t Cols, std::size_t Rows>
void compare_table(TableKind kind, const std::array<std::array<std::string_view, Cols>, Rows>& printed,
                   Ledger& ledger) {
  const auto spec = TableSpec::standard(kind);
  const auto rendered = render_table(spec);
  const auto name = std::string(to_string(kind));
  ledger.check(spec.rows.size() == Rows && spec.cols.size() + 1 == Cols,
               [&] { return name + ": shape differs from the reference grid"; });
  if (spec.rows.size() != Rows || spec.cols.size() + 1 != Cols) return;

  for (std::size_t r = 0; r < Rows; ++r) {
    ledger.check(printed[r][0] == std::to_string(spec.rows[r]),
                 [&] { return name + ": row label mismatch at row " + std::to_string(r); });
    for (std::size_t c = 0; c < spec.cols.size(); ++c) {
      const std::string expected(printed[r][c + 1]);
      const std::string got = rendered.cell_text(r, c, true);
      ledger.check(got == expected, [&] {
        return name + " cell (a=" + std::to_string(spec.cols[c]) + ", b=" + std::to_string(spec.rows[r]) +
               "): reference \"" + expected + "\", computed \"" + got + "\"";
      });
    }
  }
}

Outcome criterion_tables() {
  Stopwatch clock;
  Ledger ledger;
  compare_table(TableKind::T1BqEvenA, edsum::acceptance::kPrintedT1, ledger);
  compare_table(TableKind::T2BqOddA, edsum::acceptance::kPrintedT2, ledger);
  compare_table(TableKind::T3Quarter, edsum::acceptance::kPrintedT3, ledger);
  const double t = clock.seconds();
  ledger.check(t < 5.0, [&] { return "runtime " + secs(t) + " exceeds 5 s"; });
  return std::move(ledger).finish("table reproduction, three tables cell by cell, " + secs(t));
}

Outcome criterion_routes() {
  Stopwatch clock;
  Ledger ledger;
  for_u_odd(300, 300, [&](const CoprimePair& p) {
    const auto main = q_value(p, Route::MainResult);
    const bool ok = main == q_value(p, Route::RaoRoute) && main == q_value(p, Route::EuclideanDescent);
    ledger.check(ok, [&] { return "routes disagree at " + p.to_string(); });
  });
  const double t = clock.seconds();
  ledger.check(t < 60.0, [&] { return "runtime " + secs(t) + " exceeds 60 s"; });
  return std::move(ledger).finish("three Q routes agree on U-odd, a,b <= 300, " + secs(t));
}

Outcome criterion_reciprocity() {
  Ledger ledger;
  for_u_odd(300, 300, [&](const CoprimePair& p) {
    const std::int64_t a = p.a(), b = p.b();
    const BigRational rhs(BigInt(a) * a + BigInt(b) * b + 1, BigInt(4) * a * b);
    ledger.check(q_value(p) + q_value(p.swapped()) == rhs, [&] { return "fails at " + p.to_string(); });
  });
  return std::move(ledger).finish("Q reciprocity exact on U-odd, a,b <= 300");
}

Outcome criterion_denominators() {
  Ledger ledger;
  for_u_odd(500, 500, [&](const CoprimePair& p) {
    const BigRational bq = BigRational(BigInt(p.b())) * q_value(p);
    const bool integral = bq.denominator() == 1;
    const bool half = bq.denominator() == 2;
    const bool a_even = p.a_parity() == Parity::Even;
    ledger.check(a_even ? integral : half, [&] { return "bQ = " + bq.to_string() + " at " + p.to_string(); });
    const std::int64_t a = p.a(), b = p.b();
    const BigRational linked = BigRational(BigInt(a) * (1 - 3 * b), BigInt(2)) + BigRational(m_value(p));
    ledger.check(linked == bq, [&] { return "bQ != a(1-3b)/2 + M at " + p.to_string(); });
  });
  return std::move(ledger).finish("bQ denominator classes and M linkage on U-odd, a,b <= 500");
}

Outcome criterion_zero_law() {
  Ledger ledger;
  for (std::int64_t b = 1; b <= 500; b += 2)
    for (std::int64_t a = 2; a <= 500; a += 2) {
      if (gcd64(a, b) != 1) continue;
      const auto q = q_value(CoprimePair::make(a, b));
      const bool divides = (a * a + 1) % b == 0;
      const auto where = [&] { return "(" + std::to_string(a) + ";" + std::to_string(b) + ")"; };
      ledger.check(q.is_zero() == divides, [&] { return "zero law fails at " + where(); });
      if (q.denominator() == 1)
        ledger.check(divides, [&] { return "Q integral without b | a^2+1 at " + where(); });
    }
  return std::move(ledger).finish("zero law Q = 0 <=> b | a^2+1 and integrality, a,b <= 500");
}

// Pairs as stated: even N gives (P_{2m}; P_{2m+-1}) for m >= 1, odd N gives
// (P_{6m+3}; P_{6m+3+-1}) for m >= 0.  Only the listed index pattern is
// generated here, independently of zero_pairs.
struct IndexedPair {
  std::int64_t n;
  std::int64_t m;
  std::int64_t ia;
  std::int64_t ib;
};

void check_pair(const IndexedPair& ip, Ledger& ledger, std::int64_t& skipped) {
  const BigInt a = p_term(ip.n, ip.ia);
  const BigInt b = p_term(ip.n, ip.ib);
  if (a > 1'000'000 || b > 1'000'000) {
    ++skipped;
    return;
  }
  const auto label = [&] {
    return "N=" + std::to_string(ip.n) + " m=" + std::to_string(ip.m) + " (P_" + std::to_string(ip.ia) +
           "; P_" + std::to_string(ip.ib) + ") = (" + a.get_str() + ";" + b.get_str() + ")";
  };
  const auto pair = CoprimePair::try_make(a.get_si(), b.get_si());
  if (!pair || !pair->in_u_odd()) {
    ledger.check(false, [&] { return label() + " is not in U-odd"; });
    return;
  }
  const auto q = q_value(*pair);
  ledger.check(q.is_zero(), [&] { return label() + ": Q = " + q.to_string(); });
}

Outcome criterion_sequence_zeros() {
  Ledger ledger;
  std::int64_t skipped = 0;
  for (std::int64_t n = 1; n <= 5; ++n)
    for (std::int64_t m = 1; m <= 40; ++m)
      ledger.check(cassini_defect(n, m) == 0, [&] {
        return "Cassini defect nonzero at N=" + std::to_string(n) + " M=" + std::to_string(m);
      });

  for (std::int64_t n : {2, 4})
    for (std::int64_t m = 1; m <= 6; ++m)
      for (std::int64_t d : {-1, 1}) check_pair({n, m, 2 * m, 2 * m + d}, ledger, skipped);
  for (std::int64_t n : {3, 5})
    for (std::int64_t m = 0; m <= 3; ++m)
      for (std::int64_t d : {-1, 1}) check_pair({n, m, 6 * m + 3, 6 * m + 3 + d}, ledger, skipped);

  // Informational: the index pattern 6m for odd N, which Cassini does support.
  std::int64_t corrected = 0, corrected_zero = 0;
  for (std::int64_t n : {1, 3, 5})
    for (const auto& rec : zero_pairs(n, 3)) {
      const auto outcome = verify_zero_pair(rec);
      ++corrected;
      corrected_zero += outcome.is_zero ? 1 : 0;
    }
  ledger.note("pairs skipped for terms above 1e6: " + std::to_string(skipped));
  ledger.note("odd N, index 6m instead of 6m+3: " + std::to_string(corrected_zero) + "/" +
              std::to_string(corrected) + " pairs vanish");
  return std::move(ledger).finish("Cassini defect and Q on the stated sequence pairs");
}

constexpr IntRange kScanA{1, 2000};
constexpr IntRange kScanB{1, 999};

Outcome criterion_scan() {
  ScanOptions options;
  options.workers = 1;
  Stopwatch clock;
  const auto report = conjecture_scan(kScanA, kScanB, ConjectureLaw::Mod4, options);
  const double t = clock.seconds();
  Ledger ledger;
  ledger.check(report.checked > 0, [] { return "no pairs qualified"; });
  for (const auto& v : report.violations)
    ledger.check(false, [&] {
      return "violation at (" + std::to_string(v.a) + ";" + std::to_string(v.b) + "): bQ = " + v.observed;
    });
  ledger.check(t < 600.0, [&] { return "runtime " + secs(t) + " exceeds 10 min"; });
  return std::move(ledger).finish("mod 4 scan a <= 2000, b <= 999, " + std::to_string(report.checked) +
                                  " pairs, " + std::to_string(report.violations.size()) +
                                  " violations, single worker " + secs(t));
}

Outcome criterion_scan_speedup() {
  const unsigned cores = std::thread::hardware_concurrency();
  if (cores < 8) {
    Outcome out;
    out.status = Status::Skip;
    out.summary = "speedup to 8 workers needs 8 hardware threads, found " + std::to_string(cores);
    return out;
  }
  const auto timed = [](int workers) {
    ScanOptions options;
    options.workers = workers;
    Stopwatch clock;
    conjecture_scan(kScanA, kScanB, ConjectureLaw::Mod4, options);
    return clock.seconds();
  };
  const double t1 = timed(1);
  const double t8 = timed(8);
  const double speedup = t1 / t8;
  Ledger ledger;
  ledger.check(speedup >= 0.8 * 8, [&] { return "speedup " + fmt(speedup) + " below 6.4"; });
  return std::move(ledger).finish("scan speedup 1 -> 8 workers: " + secs(t1) + " / " + secs(t8) + " = " +
                                  fmt(speedup));
}

Outcome criterion_rationality() {
  Stopwatch clock;
  Ledger ledger;
  ledger.residual(std::abs(build_context(C(0, 1)).lambda() - 0.5), 1e-12, [] { return "lambda(i)"; });
  for (const C& tau : standard_taus()) {
    const auto ctx = build_context(tau);
    for_u_odd(20, 20, [&](const CoprimePair& p) {
      const auto r = rational_extract(p, ctx);
      ledger.residual(r.abs_error, 1e-6, [&] { return p.to_string() + " " + tau_text(tau); });
    });
  }
  const double t = clock.seconds();
  ledger.check(t < 120.0, [&] { return "runtime " + secs(t) + " exceeds 2 min"; });
  return std::move(ledger).finish("s_tau/(1/3 - lambda/6) = Q at three tau, a,b <= 20, worst " +
                                  fmt(ledger.worst()) + ", " + secs(t));
}

Outcome criterion_degeneration() {
  Ledger ledger;
  for_u_odd(9, 9, [&](const CoprimePair& p) {
    ledger.residual(degeneration_check(p, 30.0).abs_error, 1e-6, [&] { return p.to_string(); });
  });
  return std::move(ledger).finish("s_tau -> s + S/4 at tau = 30i, a,b <= 9, worst " + fmt(ledger.worst()));
}

Outcome criterion_modular_images() {
  Ledger ledger;
  const auto tau = TauPoint::make(C(0, 1));
  for (const auto& p : {CoprimePair::make(2, 3), CoprimePair::make(1, 2)}) {
    const auto res = modular_corollary_check(p, tau);
    for (std::size_t i = 0; i < res.residuals.size(); ++i)
      ledger.residual(res.residuals[i], 1e-5,
                      [&] { return p.to_string() + " image " + std::string(CorollaryResiduals::kLabels[i]); });
  }
  for (const C& tau0 : {C(1, 1) / 2.0, C(-1, 1) / 2.0}) {
    const auto ctx = build_context(tau0);
    for (const auto& p : {CoprimePair::make(2, 3), CoprimePair::make(1, 2)})
      ledger.residual(std::abs(elliptic_sum(p, ctx).value), 1e-6,
                      [&] { return "|s| at " + tau_text(tau0) + " for " + p.to_string(); });
  }
  return std::move(ledger).finish("modular images at tau = i and zeros at (+-1+i)/2, worst " +
                                  fmt(ledger.worst()));
}

C closed_g1(const C& lam) { return -(1.0 / 3.0 - lam / 6.0); }
C closed_g3(const C& lam) { return -(1.0 / 45.0 - lam / 45.0 - 7.0 * lam * lam / 360.0); }

Outcome criterion_apostol() {
  Ledger ledger;
  for (const C& tau : standard_taus()) {
    const auto ctx = build_context(tau);
    for_u_odd(9, 9, [&](const CoprimePair& p) {
      for (int order : {1, 3})
        ledger.residual(std::abs(apostol_sum(order, p, ctx).value), 1e-6, [&] {
          return "|s_" + std::to_string(order + 1) + "| at " + p.to_string() + " " + tau_text(tau);
        });
      ledger.residual(std::abs(apostol_reciprocity_residual(0, p, ctx).residual()), 1e-6,
                      [&] { return "n=0 reciprocity at " + p.to_string() + " " + tau_text(tau); });
    });
  }

  const std::vector<C> lambdas = {C(0, 0),    C(0.1, 0),  C(0.25, 0), C(0.5, 0),   C(0.75, 0),
                                  C(0.95, 0), C(2, 0),    C(-1, 0),   C(0.3, 0.4), C(-0.5, 1.2)};
  for (const C& lam : lambdas) {
    const auto g = laurent_coefficients<double>(1, lam);
    const auto at = [&] { return "lambda=" + fmt(lam.real()) + "+" + fmt(lam.imag()) + "i"; };
    ledger.residual(std::abs(g[0] - closed_g1(lam)), 1e-12, [&] { return "g1 " + at(); });
    ledger.residual(std::abs(g[1] - closed_g3(lam)), 1e-12, [&] { return "g3 " + at(); });
  }

  // Fourth-order central differences of the next lower order, in z with u = 2Kz.
  std::mt19937_64 rng(0xacce55);
  std::uniform_real_distribution<double> unit(0.05, 0.45);
  const double h = 1e-3;
  for (const C& tau : standard_taus()) {
    const auto ctx = build_context(tau);
    const C two_k = 2.0 * ctx.big_k();
    for (int i = 0; i < 20; ++i) {
      const C z = C(unit(rng), 0) + unit(rng) * tau;
      for (int order = 1; order <= 4; ++order) {
        const auto f = [&](const C& w) {
          return order == 1 ? cs_eval(w, ctx) : cs_derivative_eval(order - 1, w, ctx);
        };
        const C fd = (-f(z + 2 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2 * h)) / (12 * h) / two_k;
        const C exact = cs_derivative_eval(order, z, ctx);
        ledger.residual(std::abs(fd - exact) / std::max(1.0, std::abs(exact)), 1e-5,
                        [&] { return "derivative order " + std::to_string(order) + " " + tau_text(tau); });
      }
    }
  }
  return std::move(ledger).finish("s_2, s_4 vanish, n=0 reciprocity, g1/g3 closed forms, cs derivatives");
}

using Criterion = Outcome (*)();
const std::vector<std::pair<std::string, Criterion>>& criteria() {
  static const std::vector<std::pair<std::string, Criterion>> list = {
      {"1", criterion_tables},          {"2", criterion_routes},       {"3", criterion_reciprocity},
      {"4", criterion_denominators},    {"5", criterion_zero_law},     {"6", criterion_sequence_zeros},
      {"7", criterion_scan},            {"7b", criterion_scan_speedup}, {"8", criterion_rationality},
      {"9", criterion_degeneration},    {"10", criterion_modular_images},   {"11", criterion_apostol},
  };
  return list;
}

const char* label(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all"))
    for (const auto& [id, fn] : criteria()) wanted.push_back(id);
  wanted.erase(std::remove(wanted.begin(), wanted.end(), "all"), wanted.end());

  std::map<Status, int> counts;
  for (const auto& id : wanted) {
    const auto it = std::find_if(criteria().begin(), criteria().end(),
                                 [&](const auto& entry) { return entry.first == id; });
    if (it == criteria().end()) {
      std::cerr << "unknown criterion '" << id << "'\n";
      return 2;
    }
    Outcome out;
    try {
      out = it->second();
    } catch (const std::exception& e) {
      out.status = Status::Fail;
      out.summary = std::string("threw: ") + e.what();
    }
    ++counts[out.status];
    std::cout << label(out.status) << " criterion " << id << ": " << out.summary << '\n';
    for (const auto& line : out.details) std::cout << "    " << line << '\n';
    std::cout.flush();
  }
  if (counts[Status::Fail] > 0) return 1;
  if (counts[Status::Skip] > 0 && counts[Status::Pass] == 0) return kSkipCode;
  return 0;
}
