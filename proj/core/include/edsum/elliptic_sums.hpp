#pragma once

// Lattice sums of cs-products over (mu tau + nu)/b: the elliptic classical
// Dedekind sum s_tau(a;b) and its Apostol-type generalization s_{N+1,tau}(a;b).

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "edsum/big_rational.hpp"
#include "edsum/coprime_pair.hpp"
#include "edsum/elliptic.hpp"

namespace edsum {

/// Tabulated reuses cs((mu tau + nu)/b) for the a-multiples through exact
/// lattice reduction; Direct evaluates every cs(a(mu tau + nu)/b) from scratch.
enum class LatticeEvaluation { Tabulated, Direct };

template <class Real>
struct BasicLatticeSumResult {
  ComplexOf<Real> value;
  std::int64_t terms = 0;
  CoprimePair pair;
  BasicTauPoint<Real> tau;
  int order = 0;  // N of s_{N+1,tau}; 0 for s_tau
};

using LatticeSumResult = BasicLatticeSumResult<double>;

/// s_tau(a;b) = (1/4b) sum_{(mu,nu) != (0,0)} (-1)^mu cs(2Ka w) cs(2K w), w = (mu tau + nu)/b.
template <class Real>
BasicLatticeSumResult<Real> elliptic_sum(const CoprimePair& pair, const BasicEllipticContext<Real>& ctx,
                                         LatticeEvaluation mode = LatticeEvaluation::Tabulated);

/// Same sum with the second factor replaced by the order-th u-derivative of cs.
template <class Real>
BasicLatticeSumResult<Real> apostol_sum(int order, const CoprimePair& pair,
                                        const BasicEllipticContext<Real>& ctx,
                                        LatticeEvaluation mode = LatticeEvaluation::Tabulated);

/// 1/3 - lambda/6, the factor linking s_tau to Q.
std::complex<double> rational_prefactor(const EllipticContext& ctx);

struct RationalExtract {
  std::complex<double> q_estimate;
  BigRational q_exact;
  double abs_error;
};

/// Q estimated as s_tau / (1/3 - lambda/6) against the exact value.
/// Throws DivisionHazard when |1/3 - lambda/6| < 1e-8.
RationalExtract rational_extract(const CoprimePair& pair, const EllipticContext& ctx);

/// Residuals of the five modular images of s_tau against Q times the
/// corresponding lambda(tau) expression.
struct CorollaryResiduals {
  static constexpr std::array<std::string_view, 5> kLabels = {
      "-1/tau", "tau+1", "-1/(tau+1)", "(tau-1)/tau", "tau/(tau+1)"};
  std::array<double, 5> residuals{};
  /// -1/(tau+1) compared against Q (1 - 2 lambda)/(6 (lambda - 1)) instead of
  /// the (1 - lambda) denominator implied by lambda(-1/(tau+1)) = 1/(1 - lambda).
  double neg_inverse_shifted_flipped_sign = 0.0;
  double max() const;
  bool passed(double tol) const { return max() < tol; }
};

CorollaryResiduals modular_corollary_check(const CoprimePair& pair, const TauPoint& tau);

struct DegenerationResult {
  std::complex<double> numeric;
  BigRational limit;  // s(a;b) + S(a;b)/4
  double abs_error;
};

/// s_tau at tau = iT against its trigonometric limit.
DegenerationResult degeneration_check(const CoprimePair& pair, double big_t);

/// R_{2n+1,l}(a,b) = ((2n)!/4)(a^{2l-1} b^{2n+1-2l} + a^{2n+1-2l} b^{2l-1}
///                    + (2n+1)/(ab) [l=0] - a^n b^n [n = 2l-1]).
BigRational apostol_reciprocity_coefficient(int n, int l, std::int64_t a, std::int64_t b);

struct ApostolReciprocity {
  std::complex<double> lhs;                // s_{2n+1}(a;b) + s_{2n+1}(b;a)
  std::complex<double> bracket_odd_index;  // R_0 g_{2n+1} - sum_l R_l g_{2(n-l)+1} g_{2l-1}
  std::complex<double> bracket_as_printed; // same with g_{2n+1-l} (zero for even index)
  /// lhs + bracket: the sign under which n = 0 reduces to
  /// s_tau(a;b) + s_tau(b;a) = R(a;b)(1/3 - lambda/6), since g_1 = -(1/3 - lambda/6).
  std::complex<double> residual() const { return lhs + bracket_odd_index; }
  std::complex<double> residual_printed_index() const { return lhs + bracket_as_printed; }
  /// lhs - bracket, the sign as displayed.
  std::complex<double> residual_displayed_sign() const { return lhs - bracket_odd_index; }
};

ApostolReciprocity apostol_reciprocity_residual(int n, const CoprimePair& pair,
                                                const EllipticContext& ctx);

std::string to_json(const LatticeSumResult& result);

}  // namespace edsum
