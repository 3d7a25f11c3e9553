#pragma once

#include <optional>

#include "li/numeric/big.hpp"
#include "li/numeric/precision.hpp"

namespace li {

/// Euler-Maclaurin cutoffs: `terms` direct summands and `corrections`
/// Bernoulli correction terms. Unset fields are chosen from the error bound.
struct ZetaOptions {
  std::optional<long> terms;
  std::optional<long> corrections;
};

struct EulerMaclaurinPlan {
  long terms = 0;
  long corrections = 0;
  double log10_bound = 0.0;  // log10 of the remainder bound
};

/// Chooses (N, M) so that the remainder bound
///   |R_M| <= |s+2M+1| / (Re s+2M+1) * |B_{2M+2}/(2M+2)! (s)_{2M+1} N^{-s-2M-1}|
/// is below 10^-target_digits. Throws precision error when an override (or the
/// search cap) cannot meet the target.
EulerMaclaurinPlan plan_euler_maclaurin(double sigma, double t, int target_digits, const ZetaOptions& options = {});

/// Riemann zeta by Euler-Maclaurin summation, absolute error below
/// 10^-working_digits. Throws pole error within 10^-digits of s = 1.
BigComplex zeta(const BigComplex& s, const PrecisionContext& ctx, const ZetaOptions& options = {});

/// zeta(j) for integer j >= 2: Bernoulli closed form for even j, real
/// Euler-Maclaurin for odd j. Memoized per (j, precision).
BigReal zeta_int(long j, const PrecisionContext& ctx);

/// B_{2j} / (2j)! at `bits`, memoized per precision.
const BigReal& bernoulli_over_factorial(unsigned j, mpfr_prec_t bits);

/// log Gamma(s), continuous on C minus (-inf, 0] and real on the positive real
/// axis (the usual "loggamma" branch). Throws pole error at s = 0, -1, -2, ...
BigComplex log_gamma(const BigComplex& s, const PrecisionContext& ctx);

/// xi(s) = 2 (s-1) pi^(-s/2) Gamma(1+s/2) zeta(s), normalized so xi(1) = 1.
BigComplex xi(const BigComplex& s, const PrecisionContext& ctx);

/// Pieces of log xi(s): log 2 + log((s-1) zeta(s)) + log Gamma(1+s/2) - (s/2) log pi.
/// The middle term uses the principal branch; callers sampling along a curve
/// must unwrap the imaginary part themselves.
struct LogXiParts {
  BigComplex residual;  // log((s-1) zeta(s)), principal branch
  BigComplex gamma_pi;  // log Gamma(1+s/2) - (s/2) log pi
  BigComplex total(const BigReal& log_two) const;
};
LogXiParts log_xi_parts(const BigComplex& s, const PrecisionContext& ctx);

}  // namespace li
