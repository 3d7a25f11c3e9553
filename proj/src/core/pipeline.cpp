#include "li/core/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "li/error.hpp"

namespace li::core {

using stieltjes::Convention;
using stieltjes::GammaTable;

PipelineResult run_pipeline(int n_max, const PrecisionContext& ctx, const std::optional<GammaTable>& gamma) {
  if (n_max < 1) fail(ErrorKind::validation, "li-core", "n_max must be >= 1");
  GammaTable table;
  if (gamma) {
    if (gamma->n_max() < n_max) {
      fail(ErrorKind::coverage, "li-core",
           "supplied gamma table stops at n=" + std::to_string(gamma->n_max()) + ", need " + std::to_string(n_max));
    }
    table = stieltjes::convert_convention(*gamma, Convention::bombieri_lagarias);
    table.values.resize(static_cast<std::size_t>(n_max) + 1, BigReal(2));
    table.digits.resize(static_cast<std::size_t>(n_max) + 1);
    for (auto& v : table.values) v = v.with_precision(ctx.bits());
  } else {
    table = stieltjes::gamma_bl(n_max, ctx);
  }
  const CTriangle c = build_c_triangle(table, n_max);
  EtaTable eta = eta_from_c(c, n_max);
  const auto osc = lambda_osc(eta, n_max);
  const auto trend = lambda_trend(n_max, ctx);
  auto rows = assemble(trend, osc);
  return PipelineResult{ctx, std::move(table), std::move(eta), std::move(rows)};
}

int digits_agree(const BigReal& a, const BigReal& b, int cap) {
  if (a == b) return cap;
  const BigReal diff = abs(a - b);
  const BigReal scale = std::max(abs(a), abs(b));
  const double rel = diff.log10_abs() - scale.log10_abs();
  return static_cast<int>(std::clamp(std::floor(-rel), 0.0, static_cast<double>(cap)));
}

PrecisionContext probe_context(const PrecisionContext& ctx, int n_max) {
  return PrecisionContext(ctx.digits() + 30, std::max(ctx.guard(), PrecisionContext::default_guard(n_max)));
}

PipelineResult accuracy_probe(int n_max, const PrecisionContext& ctx, const PrecisionContext& ctx_plus,
                              const std::optional<GammaTable>& gamma) {
  const bool degenerate = ctx_plus == ctx;
  if (!degenerate && ctx_plus.digits() < ctx.digits() + 30) {
    fail(ErrorKind::validation, "li-core", "probe context needs at least 30 more digits than the base context");
  }
  PipelineResult base = run_pipeline(n_max, ctx, gamma);
  const int cap = ctx.working_digits();
  if (degenerate) {
    std::fill(base.eta.digits.begin(), base.eta.digits.end(), cap);
    for (auto& row : base.rows) row.est_digits = cap;
    return base;
  }
  // A supplied table only carries its own precision; the reference run always
  // recomputes gamma so the probe sees the full chain.
  const PipelineResult plus = run_pipeline(n_max, ctx_plus);
  for (std::size_t n = 0; n < base.eta.values.size(); ++n) {
    base.eta.digits[n] = digits_agree(base.eta.values[n], plus.eta.values[n], cap);
  }
  for (std::size_t i = 0; i < base.rows.size(); ++i) {
    base.rows[i].est_digits = digits_agree(base.rows[i].total, plus.rows[i].total, cap);
  }
  return base;
}

}  // namespace li::core
