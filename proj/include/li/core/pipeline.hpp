#pragma once

#include <optional>
#include <vector>

#include "li/core/li_coefficients.hpp"
#include "li/numeric/precision.hpp"
#include "li/stieltjes/gamma_table.hpp"

namespace li::core {

struct PipelineResult {
  PrecisionContext ctx;
  stieltjes::GammaTable gamma;  // BL convention
  EtaTable eta;
  std::vector<LiRow> rows;
};

/// gamma -> c-triangle -> eta -> oscillation; trend; assembly. A supplied
/// gamma table (any convention, n_max large enough) replaces the contour step.
PipelineResult run_pipeline(int n_max, const PrecisionContext& ctx,
                            const std::optional<stieltjes::GammaTable>& gamma = std::nullopt);

/// Leading decimal digits on which a and b agree relative to the larger
/// magnitude, clamped to [0, cap]; equal values give cap.
int digits_agree(const BigReal& a, const BigReal& b, int cap);

/// Runs the pipeline at ctx and at ctx_plus and replaces the declared digits
/// of eta and rows with the measured agreement. Values are those of the ctx
/// run. ctx_plus must equal ctx or carry at least 30 more digits.
PipelineResult accuracy_probe(int n_max, const PrecisionContext& ctx, const PrecisionContext& ctx_plus,
                              const std::optional<stieltjes::GammaTable>& gamma = std::nullopt);

/// ctx with 30 extra digits and a guard sized for n_max.
PrecisionContext probe_context(const PrecisionContext& ctx, int n_max);

}  // namespace li::core
