#pragma once

#include <ostream>

#include "li/cli/config.hpp"
#include "li/stieltjes/gamma_table.hpp"

namespace li::cli {

/// True when `cached` covers 0..n_max and every entry's absolute accuracy
/// (|value| 10^-digits) is at least what a fresh contour run at ctx gives.
bool cache_satisfies(const stieltjes::GammaTable& cached, int n_max, const PrecisionContext& ctx);

struct GammaSource {
  stieltjes::GammaTable table;  // BL convention, exactly n_max + 1 entries
  bool from_cache = false;
};

/// Loads the cache when usable, otherwise computes and (unless disabled)
/// rewrites it. A damaged cache is reported on `err` and recomputed.
GammaSource obtain_gamma(const RunConfig& config, const PrecisionContext& ctx, std::ostream& err);

int cmd_gamma(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_lambda(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_plot(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace li::cli
