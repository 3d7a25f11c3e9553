#pragma once

#include <span>

#include "li/numeric/big.hpp"
#include "li/numeric/precision.hpp"

namespace li::core {

/// c = (gamma - 1 - log 2 pi) / 2
BigReal trend_linear_constant(const PrecisionContext& ctx);

/// 1/2 (1 + n log n) + c n
BigReal trend_leading(int n, const PrecisionContext& ctx);

/// Number of correction terms up to and including the smallest one in
/// magnitude; adding more makes the formally divergent series worse.
int trend_term_cutoff(int n);

struct AsymptoticTrend {
  BigReal value;
  BigReal residual;       // value - trend_leading(n)
  bool divergent = false;  // terms > trend_term_cutoff(n)
};

/// Leading part plus the first `terms` corrections of
///   -sum_k B_k / (2k n^(k-1)) = 1/4 - 1/(24n) + 1/(240n^3) - 1/(504n^5) + ...
/// counting only nonzero corrections, so terms = 4 stops at 1/(504n^5).
AsymptoticTrend trend_asymptotic(int n, int terms, const PrecisionContext& ctx);

struct TrendFit {
  BigReal a;  // coefficient of 1 + n log n
  BigReal c;  // coefficient of n
  BigReal max_abs_residual;
};

/// Least-squares fit of trend values (index first_n, first_n+1, ...) against
/// the basis {1 + n log n, n, 1, 1/n, 1/n^3}.
TrendFit fit_trend_model(std::span<const BigReal> trend, int first_n, const PrecisionContext& ctx);

}  // namespace li::core
