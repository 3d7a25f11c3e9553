#pragma once

#include <span>
#include <vector>

#include "li/numeric/big.hpp"
#include "li/numeric/precision.hpp"
#include "li/stieltjes/gamma_table.hpp"

namespace li::core {

/// c_m^(k): coefficients of (sum_n gamma_n s^n)^k, stored for the
/// anti-diagonal band m + k <= bound + 1 (k >= 1), which is all eta_from_c reads.
class CTriangle {
 public:
  CTriangle(int bound, std::vector<std::vector<BigReal>> columns);

  int bound() const noexcept { return bound_; }
  bool covers(int m, int k) const noexcept { return k >= 1 && m >= 0 && m + k <= bound_ + 1; }
  /// Throws coverage error outside the band.
  const BigReal& at(int m, int k) const;

 private:
  int bound_;
  std::vector<std::vector<BigReal>> columns_;  // columns_[k-1][m]
};

/// Power-series exponentiation recurrence
///   c_0^(k) = gamma_0^k,
///   c_m^(k) = 1/(m gamma_0) sum_{i<m} [k m - (k+1) i] gamma_{m-i} c_i^(k).
/// Columns are independent and built concurrently. Requires a BL table with
/// n_max >= bound.
CTriangle build_c_triangle(const stieltjes::GammaTable& gamma, int bound);

struct EtaTable {
  std::vector<BigReal> values;  // eta_0..eta_{n_max}
  std::vector<int> digits;      // declared accuracy; working digits until probed

  int n_max() const { return static_cast<int>(values.size()) - 1; }
};

/// eta_n = (n+1) sum_{k=0}^{n} (-1)^{k+1}/(k+1) c_{n-k}^{(k+1)}
EtaTable eta_from_c(const CTriangle& c, int n_max);

/// Oscillatory part: osc_n = -sum_{j=1}^{n} C(n,j) eta_{j-1}, n = 1..n_max.
std::vector<BigReal> lambda_osc(const EtaTable& eta, int n_max);

/// Decimal digits lost to cancellation in the trend's binomial sum at index n.
double trend_cancellation_digits(int n);

/// Trend part, n = 1..n_max:
///   1 - (log 4 pi + gamma) n/2 + sum_{j=2}^{n} (-1)^j C(n,j) (1 - 2^-j) zeta(j).
/// Fails fast with a precision error when cancellation exceeds the guard
/// digits, and checks the result is strictly increasing from n = 3 on.
std::vector<BigReal> lambda_trend(int n_max, const PrecisionContext& ctx);

struct LiRow {
  int n = 0;
  BigReal trend;
  BigReal osc;
  BigReal total;  // trend + osc
  int est_digits = 0;
};

/// Rows n = 1..size with total = trend + osc. est_digits starts at the
/// operands' decimal precision.
std::vector<LiRow> assemble(std::span<const BigReal> trend, std::span<const BigReal> osc);

}  // namespace li::core
