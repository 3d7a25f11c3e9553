#pragma once

#include <cstdint>
#include <vector>

#include "li/numeric/big.hpp"

namespace li::oracles {

/// Lambda(k) for k = 0..limit (Lambda(0) = Lambda(1) = 0).
std::vector<double> von_mangoldt_table(std::uint32_t limit);

/// BL-convention gamma_n from the partial sum
///   (-1)^n/n! [sum_{k<=N} (log k)^n / k - (log N)^(n+1)/(n+1) - (log N)^n/(2N)].
/// n <= 5, N >= 10^4.
BigReal gamma_limit_estimate(int n, std::uint64_t big_n);

/// eta_n from (-1)^n/n! [sum_{k<=N} Lambda(k) (log k)^n / k - (log N)^(n+1)/(n+1)].
/// n <= 2, N <= 10^7.
BigReal eta_limit_estimate(int n, std::uint32_t big_n);

}  // namespace li::oracles
