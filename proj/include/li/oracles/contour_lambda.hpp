#pragma once

#include <cstddef>
#include <vector>

#include "li/numeric/big.hpp"
#include "li/numeric/precision.hpp"

namespace li::oracles {

/// Which part of log xi(s) is expanded about s = 1.
enum class LogXiPart {
  full,         // log xi(s), giving lambda_n
  trend,        // log 2 + log Gamma(1 + s/2) - (s/2) log pi, giving the trend part
  oscillation,  // log((s-1) zeta(s)), giving the oscillatory part
};

struct CauchyOptions {
  double radius = 1.0;
  std::size_t nodes = 0;  // power of two > 2 n_max; 0 chooses from precision
  double scale = 1.0;     // xi replaced by scale * xi
  LogXiPart part = LogXiPart::full;
};

/// Node count for which (radius/3)^M stays below 10^-working_digits.
std::size_t cauchy_node_count(int n_max, int working_digits, double radius);

/// Taylor coefficients l_0..l_{n_max} of the chosen part of log xi(1 + w),
/// sampled on |w| = radius with the argument followed continuously around
/// the circle. Throws domain error when adjacent samples jump by pi/2 or more
/// in argument, or the argument does not close up.
std::vector<BigReal> log_xi_coefficients(int n_max, const PrecisionContext& ctx, const CauchyOptions& options = {});

/// lambda_n = n sum_{j=0}^{n-1} C(n-1, j) l_{n-j}, n = 1..n_max, from one
/// contour pass.
std::vector<BigReal> lambda_cauchy_all(int n_max, const PrecisionContext& ctx, const CauchyOptions& options = {});

BigReal lambda_cauchy(int n, const PrecisionContext& ctx, const CauchyOptions& options = {});

/// Decimal digits the r^-n extraction factor leaves for index n.
int cauchy_extraction_digits(int n, const PrecisionContext& ctx, double radius);

}  // namespace li::oracles
