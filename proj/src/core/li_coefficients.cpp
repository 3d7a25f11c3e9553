#include "li/core/li_coefficients.hpp"

#include <cmath>
#include <string>

#include "li/error.hpp"
#include "li/numeric/exact.hpp"
#include "li/numeric/parallel.hpp"
#include "li/numeric/special.hpp"

namespace li::core {

using stieltjes::Convention;
using stieltjes::GammaTable;

CTriangle::CTriangle(int bound, std::vector<std::vector<BigReal>> columns)
    : bound_(bound), columns_(std::move(columns)) {}

const BigReal& CTriangle::at(int m, int k) const {
  if (!covers(m, k)) {
    fail(ErrorKind::coverage, "li-core",
         "c_" + std::to_string(m) + "^(" + std::to_string(k) + ") outside triangle bound " + std::to_string(bound_));
  }
  return columns_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m)];
}

CTriangle build_c_triangle(const GammaTable& gamma, int bound) {
  if (gamma.convention != Convention::bombieri_lagarias) {
    fail(ErrorKind::convention, "li-core", "c-triangle needs the Bombieri-Lagarias convention");
  }
  if (bound < 0) fail(ErrorKind::validation, "li-core", "triangle bound must be >= 0");
  if (gamma.n_max() < bound) {
    fail(ErrorKind::coverage, "li-core",
         "gamma table has n_max " + std::to_string(gamma.n_max()) + " < bound " + std::to_string(bound));
  }
  const auto& g = gamma.values;
  if (g[0].is_zero()) fail(ErrorKind::domain, "li-core", "gamma_0 must be nonzero");
  const mpfr_prec_t bits = g[0].precision();

  std::vector<std::vector<BigReal>> columns(static_cast<std::size_t>(bound + 1));
  parallel_for(columns.size(), [&](std::size_t column) {
    const long k = static_cast<long>(column) + 1;
    const int rows = bound + 2 - static_cast<int>(k);  // m = 0..bound+1-k
    std::vector<BigReal> c;
    c.reserve(static_cast<std::size_t>(rows));
    c.push_back(pow(g[0], k));
    BigReal sum(bits);
    BigReal term(bits);
    for (int m = 1; m < rows; ++m) {
      mpfr_set_zero(sum.raw(), 1);
      for (int i = 0; i < m; ++i) {
        mpfr_mul(term.raw(), g[static_cast<std::size_t>(m - i)].raw(), c[static_cast<std::size_t>(i)].raw(), MPFR_RNDN);
        mpfr_mul_si(term.raw(), term.raw(), k * m - (k + 1) * i, MPFR_RNDN);
        mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
      }
      mpfr_div(sum.raw(), sum.raw(), g[0].raw(), MPFR_RNDN);
      mpfr_div_si(sum.raw(), sum.raw(), m, MPFR_RNDN);
      c.push_back(sum);
    }
    columns[column] = std::move(c);
  });
  return CTriangle(bound, std::move(columns));
}

EtaTable eta_from_c(const CTriangle& c, int n_max) {
  if (n_max < 0) fail(ErrorKind::validation, "li-core", "n_max must be >= 0");
  if (!c.covers(0, n_max + 1)) {
    fail(ErrorKind::coverage, "li-core",
         "c-triangle bound " + std::to_string(c.bound()) + " too small for eta_" + std::to_string(n_max));
  }
  const mpfr_prec_t bits = c.at(0, 1).precision();
  const int digits = static_cast<int>(std::floor(static_cast<double>(bits - 8) * 0.30102999566398120));
  EtaTable eta;
  BigReal term(bits);
  for (int n = 0; n <= n_max; ++n) {
    BigReal sum(bits);
    for (int k = 0; k <= n; ++k) {
      mpfr_div_ui(term.raw(), c.at(n - k, k + 1).raw(), static_cast<unsigned long>(k + 1), MPFR_RNDN);
      if (k % 2 == 0) {
        mpfr_sub(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
      } else {
        mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
      }
    }
    sum *= static_cast<long>(n + 1);
    eta.values.push_back(std::move(sum));
    eta.digits.push_back(digits);
  }
  return eta;
}

std::vector<BigReal> lambda_osc(const EtaTable& eta, int n_max) {
  if (n_max < 0) fail(ErrorKind::validation, "li-core", "n_max must be >= 0");
  if (eta.n_max() < n_max - 1) {
    fail(ErrorKind::coverage, "li-core",
         "eta table covers 0.." + std::to_string(eta.n_max()) + ", need 0.." + std::to_string(n_max - 1));
  }
  std::vector<BigReal> osc;
  if (n_max == 0) return osc;
  const mpfr_prec_t bits = eta.values[0].precision();
  BigReal term(bits);
  for (int n = 1; n <= n_max; ++n) {
    BigReal sum(bits);
    for (int j = 1; j <= n; ++j) {
      const mpz_class c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j));
      mpfr_mul_z(term.raw(), eta.values[static_cast<std::size_t>(j - 1)].raw(), c.get_mpz_t(), MPFR_RNDN);
      mpfr_sub(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
    }
    osc.push_back(std::move(sum));
  }
  return osc;
}

double trend_cancellation_digits(int n) {
  if (n < 2) return 0.0;
  const double half = std::floor(n / 2.0);
  return (std::lgamma(n + 1.0) - std::lgamma(half + 1.0) - std::lgamma(n - half + 1.0)) / std::log(10.0);
}

std::vector<BigReal> lambda_trend(int n_max, const PrecisionContext& ctx) {
  if (n_max < 0) fail(ErrorKind::validation, "li-core", "n_max must be >= 0");
  const double loss = trend_cancellation_digits(n_max);
  if (loss > ctx.guard()) {
    fail(ErrorKind::precision, "li-core",
         "trend at n=" + std::to_string(n_max) + " cancels ~" + std::to_string(static_cast<int>(std::ceil(loss))) +
             " digits but guard is " + std::to_string(ctx.guard()));
  }
  const mpfr_prec_t bits = ctx.bits();

  // (1 - 2^-j) zeta(j) for j = 2..n_max
  std::vector<BigReal> weights(static_cast<std::size_t>(std::max(n_max + 1, 2)), BigReal(bits));
  parallel_for(static_cast<std::size_t>(std::max(n_max - 1, 0)), [&](std::size_t idx) {
    const long j = static_cast<long>(idx) + 2;
    BigReal factor(1, bits);
    BigReal half_power(bits);
    mpfr_set_ui_2exp(half_power.raw(), 1, -j, MPFR_RNDN);
    factor -= half_power;
    weights[static_cast<std::size_t>(j)] = factor * zeta_int(j, ctx);
  });

  BigReal slope = log(const_pi(bits) * 4L) + const_euler(bits);
  slope /= 2L;

  std::vector<BigReal> trend;
  BigReal term(bits);
  for (int n = 1; n <= n_max; ++n) {
    BigReal sum(1, bits);
    sum -= slope * static_cast<long>(n);
    for (int j = 2; j <= n; ++j) {
      const mpz_class c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j));
      mpfr_mul_z(term.raw(), weights[static_cast<std::size_t>(j)].raw(), c.get_mpz_t(), MPFR_RNDN);
      if (j % 2 == 0) {
        mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
      } else {
        mpfr_sub(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
      }
    }
    trend.push_back(std::move(sum));
  }
  // The trend dips until n = 3 and grows strictly from there.
  for (int n = 4; n <= n_max; ++n) {
    if (!(trend[static_cast<std::size_t>(n - 2)] < trend[static_cast<std::size_t>(n - 1)])) {
      fail(ErrorKind::precision, "li-core",
           "trend not increasing at n=" + std::to_string(n) + "; working precision is insufficient");
    }
  }
  return trend;
}

std::vector<LiRow> assemble(std::span<const BigReal> trend, std::span<const BigReal> osc) {
  if (trend.size() != osc.size()) {
    fail(ErrorKind::validation, "li-core",
         "trend has " + std::to_string(trend.size()) + " entries, oscillation " + std::to_string(osc.size()));
  }
  std::vector<LiRow> rows;
  rows.reserve(trend.size());
  for (std::size_t i = 0; i < trend.size(); ++i) {
    BigReal total = trend[i] + osc[i];
    const int digits = static_cast<int>(std::floor(static_cast<double>(total.precision() - 8) * 0.30102999566398120));
    rows.push_back(LiRow{static_cast<int>(i) + 1, trend[i], osc[i], std::move(total), digits});
  }
  return rows;
}

}  // namespace li::core
