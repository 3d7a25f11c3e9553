#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include "li/numeric/big.hpp"
#include "li/numeric/precision.hpp"

namespace li::oracles {

/// Ordinates t_k of zeros 1/2 + i t_k, strictly ascending.
struct ZeroTable {
  std::vector<BigReal> ordinates;
  int source_digits = 0;  // most fractional digits seen on any line

  std::size_t size() const { return ordinates.size(); }
};

/// One decimal ordinate per line; '#' starts a comment. Rejects unparsable
/// lines (with line number), non-ascending input, empty tables, and tables
/// whose first entry is not within 1e-3 of 14.134725.
ZeroTable parse_zero_table(std::istream& in);
ZeroTable load_zero_table(const std::filesystem::path& path);

/// First `count` entries.
ZeroTable truncate(const ZeroTable& zeros, std::size_t count);

struct ZeroSum {
  BigReal value;
  BigReal tail_bound;
};

/// sum over the tabulated conjugate pairs of 2 Re(1 - (1 - 1/rho)^n)
/// = 4 sin^2(n atan(1/(2t))), plus a rigorous bound on the omitted pairs.
ZeroSum lambda_from_zeros(int n, const ZeroTable& zeros, const PrecisionContext& ctx);

/// Bound on sum_{t > T} n^2 / t^2 when the first `count` ordinates end at T.
double zero_tail_bound(int n, double last_ordinate, std::size_t count);

}  // namespace li::oracles
