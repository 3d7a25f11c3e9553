#include "li/core/asymptotic.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "li/error.hpp"
#include "li/numeric/exact.hpp"

namespace li::core {

namespace {

// log10 of the j-th nonzero correction (j >= 2 uses B_{2j-2}).
double log10_correction(int n, int j) {
  const double k = 2.0 * (j - 1);
  const double log_bernoulli = std::log(2.0) + std::lgamma(k + 1.0) - k * std::log(2.0 * std::numbers::pi);
  return (log_bernoulli - std::log(2.0 * k) - (k - 1.0) * std::log(static_cast<double>(n))) / std::log(10.0);
}

}  // namespace

BigReal trend_linear_constant(const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  BigReal c = const_euler(bits) - BigReal(1, bits) - log(const_pi(bits) * 2L);
  c /= 2L;
  return c;
}

BigReal trend_leading(int n, const PrecisionContext& ctx) {
  if (n < 1) fail(ErrorKind::validation, "li-core", "asymptotic trend needs n >= 1");
  const mpfr_prec_t bits = ctx.bits();
  BigReal value = log(BigReal(n, bits)) * static_cast<long>(n) + BigReal(1, bits);
  value /= 2L;
  value += trend_linear_constant(ctx) * static_cast<long>(n);
  return value;
}

int trend_term_cutoff(int n) {
  if (n < 1) fail(ErrorKind::validation, "li-core", "asymptotic trend needs n >= 1");
  int best = 1;
  double best_log = std::log10(0.25);
  for (int j = 2; j < 100000; ++j) {
    const double current = log10_correction(n, j);
    if (current > best_log) break;
    best_log = current;
    best = j;
  }
  return best;
}

AsymptoticTrend trend_asymptotic(int n, int terms, const PrecisionContext& ctx) {
  if (terms < 0) fail(ErrorKind::validation, "li-core", "term count must be >= 0");
  const mpfr_prec_t bits = ctx.bits();
  AsymptoticTrend out{trend_leading(n, ctx), BigReal(bits), false};
  for (int j = 1; j <= terms; ++j) {
    const unsigned k = j == 1 ? 1u : static_cast<unsigned>(2 * (j - 1));
    // -B_k / (2k n^(k-1))
    BigReal term(mpq_class(-bernoulli(k) / (2 * k)), bits);
    term /= pow(BigReal(n, bits), static_cast<long>(k) - 1);
    out.residual += term;
  }
  out.value += out.residual;
  out.divergent = terms > trend_term_cutoff(n);
  return out;
}

TrendFit fit_trend_model(std::span<const BigReal> trend, int first_n, const PrecisionContext& ctx) {
  constexpr int kBasis = 5;
  if (first_n < 1) fail(ErrorKind::validation, "li-core", "fit needs n >= 1");
  if (trend.size() < kBasis) fail(ErrorKind::validation, "li-core", "fit needs at least 5 trend values");
  const mpfr_prec_t bits = ctx.bits() + 32;

  std::vector<std::vector<BigReal>> rows;
  for (std::size_t i = 0; i < trend.size(); ++i) {
    const BigReal n(first_n + static_cast<long>(i), bits);
    const BigReal inv = BigReal(1, bits) / n;
    rows.push_back({n * log(n) + BigReal(1, bits), n, BigReal(1, bits), inv, inv * inv * inv});
  }
  // Normal equations, solved by Gaussian elimination with partial pivoting.
  std::vector<std::vector<BigReal>> m(kBasis, std::vector<BigReal>(kBasis + 1, BigReal(bits)));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BigReal y = trend[i].with_precision(bits);
    for (int r = 0; r < kBasis; ++r) {
      for (int c = 0; c < kBasis; ++c) m[r][c] += rows[i][r] * rows[i][c];
      m[r][kBasis] += rows[i][r] * y;
    }
  }
  for (int col = 0; col < kBasis; ++col) {
    int pivot = col;
    for (int r = col + 1; r < kBasis; ++r) {
      if (abs(m[r][col]) > abs(m[pivot][col])) pivot = r;
    }
    std::swap(m[col], m[pivot]);
    if (m[col][col].is_zero()) fail(ErrorKind::domain, "li-core", "singular trend fit");
    for (int r = col + 1; r < kBasis; ++r) {
      const BigReal factor = m[r][col] / m[col][col];
      for (int c = col; c <= kBasis; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::vector<BigReal> coef(kBasis, BigReal(bits));
  for (int r = kBasis - 1; r >= 0; --r) {
    BigReal acc = m[r][kBasis];
    for (int c = r + 1; c < kBasis; ++c) acc -= m[r][c] * coef[c];
    coef[r] = acc / m[r][r];
  }

  BigReal worst(bits);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BigReal fitted(bits);
    for (int c = 0; c < kBasis; ++c) fitted += coef[c] * rows[i][c];
    const BigReal err = abs(fitted - trend[i].with_precision(bits));
    if (err > worst) worst = err;
  }
  return TrendFit{coef[0].with_precision(ctx.bits()), coef[1].with_precision(ctx.bits()), worst.with_precision(ctx.bits())};
}

}  // namespace li::core
