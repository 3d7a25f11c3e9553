#include "li/cli/commands.hpp"

#include <algorithm>
#include <cmath>

#include "li/cli/output.hpp"
#include "li/cli/plot.hpp"
#include "li/core/pipeline.hpp"
#include "li/error.hpp"

namespace li::cli {

using stieltjes::Convention;
using stieltjes::GammaTable;

namespace {

// Values pass through the same decimal strings the cache stores, so cached and
// fresh runs feed identical numbers to the pipeline.
GammaTable through_decimal(const GammaTable& table, int n_max, const PrecisionContext& ctx) {
  GammaTable out;
  out.convention = table.convention;
  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    BigReal value(ctx.bits());
    BigReal::parse(table.values[i].to_scientific(std::max(table.digits[i], 1)), ctx.bits(), value);
    out.values.push_back(std::move(value));
    out.digits.push_back(table.digits[i]);
  }
  return stieltjes::convert_convention(out, Convention::bombieri_lagarias);
}

}  // namespace

bool cache_satisfies(const GammaTable& cached, int n_max, const PrecisionContext& ctx) {
  if (cached.n_max() < n_max) return false;
  // A fresh run is accurate to about 10^-(W-4) absolutely at radius 1.
  const double needed = -static_cast<double>(ctx.working_digits() - 4);
  for (int n = 0; n <= n_max; ++n) {
    const BigReal& v = cached.values[static_cast<std::size_t>(n)];
    if (v.is_zero()) return false;
    double magnitude = v.log10_abs();
    if (cached.convention == Convention::classical) {
      magnitude -= std::lgamma(n + 1.0) / std::log(10.0);  // BL magnitude
    }
    if (magnitude - cached.digits[static_cast<std::size_t>(n)] > needed) return false;
  }
  return true;
}

GammaSource obtain_gamma(const RunConfig& config, const PrecisionContext& ctx, std::ostream& err) {
  if (config.use_cache && std::filesystem::exists(config.cache_path)) {
    try {
      GammaTable cached = stieltjes::load_cache(config.cache_path);
      if (cache_satisfies(cached, config.n_max, ctx)) {
        return GammaSource{through_decimal(cached, config.n_max, ctx), true};
      }
    } catch (const Error& e) {
      err << "li-warning: ignoring cache: " << diagnostic(e) << '\n';
    }
  }
  const GammaTable fresh = stieltjes::gamma_bl(config.n_max, ctx);
  if (config.use_cache) stieltjes::save_cache(fresh, config.cache_path);
  return GammaSource{through_decimal(fresh, config.n_max, ctx), false};
}

int cmd_gamma(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PrecisionContext ctx = context_for(config);
  const auto source = obtain_gamma(config, ctx, err);
  const GammaTable shown = stieltjes::convert_convention(source.table, config.convention);
  if (config.format == OutputFormat::json) {
    write_gamma_json(out, shown);
  } else {
    write_gamma_csv(out, shown);
  }
  return 0;
}

int cmd_lambda(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PrecisionContext ctx = context_for(config);
  auto source = obtain_gamma(config, ctx, err);
  const auto result = core::accuracy_probe(config.n_max, ctx, core::probe_context(ctx, config.n_max), source.table);
  if (config.format == OutputFormat::json) {
    write_rows_json(out, result.rows);
  } else {
    write_rows_csv(out, result.rows);
  }
  return 0;
}

int cmd_plot(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.plot_from > config.n_max) {
    err << "li-warning: plot range " << config.plot_from << ".." << config.n_max << " is empty; no files written\n";
    return 0;
  }
  const PrecisionContext ctx = context_for(config);
  auto source = obtain_gamma(config, ctx, err);
  const auto result = core::run_pipeline(config.n_max, ctx, source.table);
  const auto written = write_plot_files(result.rows, config.plot_from, config.out_dir, config.svg);
  for (const auto& path : written) out << path.string() << '\n';
  return 0;
}

}  // namespace li::cli
