#include "li/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "li/cli/commands.hpp"
#include "li/cli/output.hpp"
#include "li/cli/reference.hpp"
#include "li/core/asymptotic.hpp"
#include "li/core/pipeline.hpp"
#include "li/core/positivity.hpp"
#include "li/error.hpp"
#include "li/numeric/exact.hpp"
#include "li/numeric/special.hpp"
#include "li/oracles/contour_lambda.hpp"
#include "li/oracles/symbolic.hpp"
#include "li/oracles/zeros.hpp"

namespace li::cli {

namespace {

using stieltjes::Convention;

std::string fmt(double value, const char* pattern = "%.3g") {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, pattern, value);
  return buffer;
}

CheckResult skipped(std::string name, std::string why) {
  return CheckResult{std::move(name), CheckStatus::skip, "-", "-", std::move(why)};
}

CheckResult verdict(std::string name, bool ok, std::string measured, std::string tolerance, std::string detail = {}) {
  return CheckResult{std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(measured),
                     std::move(tolerance), std::move(detail)};
}

// Largest |ulp| deviation from the printed table over the given rows.
CheckResult table_check(const std::string& name, const core::PipelineResult& run, int first, int last) {
  const auto classical = stieltjes::convert_convention(run.gamma, Convention::classical);
  double worst = 0.0;
  std::string where = "none";
  const auto track = [&](const BigReal& value, std::string_view printed, const std::string& label) {
    if (printed.empty()) return;
    const double ulps = std::abs(printed_ulps(value, printed));
    if (ulps > worst || where == "none") {
      worst = std::max(worst, ulps);
      where = label;
    }
  };
  for (const auto& ref : reference_rows()) {
    if (ref.n < first || ref.n > last) continue;
    const auto n = static_cast<std::size_t>(ref.n);
    track(classical.values[n], ref.gamma_classical, "gamma_" + std::to_string(ref.n));
    track(run.eta.values[n], ref.eta, "eta_" + std::to_string(ref.n));
    if (ref.n >= 1) {
      track(run.rows[n - 1].osc, ref.osc, "osc_" + std::to_string(ref.n));
      track(run.rows[n - 1].total, ref.lambda, "lambda_" + std::to_string(ref.n));
    }
  }
  return verdict(name, worst <= 0.5, fmt(worst) + " ulp", "0.5 ulp of 12 printed digits", "worst at " + where);
}

CheckResult asymptotic_check() {
  const auto ctx = PrecisionContext::for_index(60, 200);
  const auto trend = core::lambda_trend(200, ctx);
  const double residual_100 = (trend[99] - core::trend_leading(100, ctx)).to_double();
  double worst_series = 0.0;
  for (int n : {50, 100, 200}) {
    const auto model = core::trend_asymptotic(n, 4, ctx);
    worst_series = std::max(worst_series, std::abs((model.value - trend[static_cast<std::size_t>(n - 1)]).to_double()));
  }
  const auto fit = core::fit_trend_model(std::span(trend).subspan(49), 50, ctx);
  const double a_error = std::abs(fit.a.to_double() - 0.5);
  const bool ok = std::abs(residual_100 - 0.2495837) <= 1e-5 && worst_series <= 1e-5 && a_error <= 8e-9;
  return verdict("asymptotic-trend", ok,
                 "residual_100=" + fmt(residual_100, "%.9f") + " series_err=" + fmt(worst_series) + " |a-1/2|=" + fmt(a_error),
                 "1e-5, 1e-5, 8e-9");
}

CheckResult contour_check(const core::PipelineResult& run, const PrecisionContext& ctx) {
  const int m = std::min(10, static_cast<int>(run.rows.size()));
  const auto lambda = oracles::lambda_cauchy_all(m, ctx);
  oracles::CauchyOptions scaled;
  scaled.scale = 2.0;
  const auto lambda_scaled = oracles::lambda_cauchy_all(m, ctx, scaled);
  int agree = ctx.working_digits();
  int invariant = ctx.working_digits();
  for (int n = 1; n <= m; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    agree = std::min(agree, core::digits_agree(lambda[i], run.rows[i].total, ctx.working_digits()));
    invariant = std::min(invariant, core::digits_agree(lambda[i], lambda_scaled[i], ctx.working_digits()));
  }
  const int needed_invariant = ctx.digits() - 10;
  return verdict("contour-lambda", agree >= 20 && invariant >= needed_invariant,
                 "agree=" + std::to_string(agree) + " scale_invariant=" + std::to_string(invariant),
                 ">= 20 and >= " + std::to_string(needed_invariant) + " digits", "n <= " + std::to_string(m));
}

CheckResult symbolic_check(const core::PipelineResult& run, const PrecisionContext& ctx) {
  struct Count {
    int n;
    std::size_t eta;
    std::size_t osc;
  };
  constexpr Count kCounts[] = {{1, 2, 1},   {2, 3, 3},    {3, 5, 6},      {4, 7, 11},
                               {5, 11, 18}, {10, 56, 138}, {20, 792, 2713}, {30, 6842, 28628}};
  bool counts_ok = true;
  for (const auto& c : kCounts) {
    const auto eta_terms = oracles::term_count(oracles::expand_eta_symbolic(c.n));
    const auto osc_terms = oracles::term_count(oracles::expand_lambda_osc_symbolic(c.n));
    const bool partitions_ok = oracles::partition_count(c.n + 1) == static_cast<unsigned long>(eta_terms);
    counts_ok = counts_ok && eta_terms == c.eta && osc_terms == c.osc && partitions_ok;
  }
  const int m = std::min(20, static_cast<int>(run.rows.size()));
  int margin = 1 << 20;
  for (int n = 1; n <= m; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const BigReal eta = oracles::eval_symbolic(oracles::expand_eta_symbolic(n), run.gamma, ctx);
    const BigReal osc = oracles::eval_symbolic(oracles::expand_lambda_osc_symbolic(n), run.gamma, ctx);
    const int cap = ctx.working_digits();
    margin = std::min(margin, core::digits_agree(eta, run.eta.values[i], cap) - std::min(run.eta.digits[i], cap - 2));
    margin = std::min(margin, core::digits_agree(osc, run.rows[i - 1].osc, cap) - std::min(run.rows[i - 1].est_digits, cap - 2));
  }
  return verdict("symbolic", counts_ok && margin >= -2,
                 std::string("term_counts=") + (counts_ok ? "exact" : "MISMATCH") + " eval_margin=" + std::to_string(margin),
                 "exact; eval within est_digits - 2", "n <= " + std::to_string(m));
}

CheckResult kernel_check(const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  const double zeta_tol = -static_cast<double>(ctx.digits() - 5);
  double zeta_worst = -1e9;
  for (long k = 1; k <= 50; ++k) {
    const BigComplex s(BigReal(2 * k, bits));
    const BigReal em = zeta(s, ctx).re();
    zeta_worst = std::max(zeta_worst, (em - zeta_int(2 * k, ctx)).log10_abs());
  }
  double xi_worst = -1e9;
  for (int j = 0; j < 20; ++j) {
    const BigComplex s(BigReal::from_double(-1.25 + 0.2 * j, bits), BigReal::from_double(-9.5 + 1.7 * j, bits));
    BigComplex reflected = -s;
    reflected.re() += BigReal(1, bits);
    const BigComplex a = xi(s, ctx);
    const BigComplex b = xi(reflected, ctx);
    xi_worst = std::max(xi_worst, abs(a - b).log10_abs() - abs(a).log10_abs());
  }
  bool exact_ok = true;
  for (unsigned k = 1; k <= 60; ++k) {
    mpq_class sum = 0;
    for (unsigned i = 0; i <= k; ++i) sum += mpq_class(binomial(k + 1, i)) * bernoulli(i);
    exact_ok = exact_ok && sum == 0;
  }
  for (unsigned long n = 1; n <= 80; ++n) {
    for (unsigned long k = 1; k < n; ++k) exact_ok = exact_ok && binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k);
  }
  return verdict("kernel", zeta_worst < zeta_tol && xi_worst < zeta_tol && exact_ok,
                 "zeta(2k)=1e" + fmt(zeta_worst, "%.0f") + " xi_sym=1e" + fmt(xi_worst, "%.0f") +
                     (exact_ok ? " exact=ok" : " exact=MISMATCH"),
                 "1e" + fmt(zeta_tol, "%.0f"));
}

CheckResult zeros_check(const std::optional<oracles::ZeroTable>& table, const core::PipelineResult& run,
                        const PrecisionContext& ctx) {
  if (!table) return skipped("zero-sum", "no --zeros table given");
  const auto& zeros = *table;
  const auto half = oracles::truncate(zeros, zeros.size() / 2);
  const int m = std::min(8, static_cast<int>(run.rows.size()));
  bool ok = !half.ordinates.empty();
  double worst_ratio = 0.0;
  for (int n = 1; n <= m; ++n) {
    const auto full = oracles::lambda_from_zeros(n, zeros, ctx);
    const auto partial = oracles::lambda_from_zeros(n, half, ctx);
    const double diff = std::abs((run.rows[static_cast<std::size_t>(n - 1)].total - full.value).to_double());
    const double bound = full.tail_bound.to_double();
    const double doubling = std::abs((full.value - partial.value).to_double());
    ok = ok && diff < bound && bound <= 0.02 * n && doubling < partial.tail_bound.to_double();
    worst_ratio = std::max(worst_ratio, diff / bound);
  }
  return verdict("zero-sum", ok, "max diff/tail_bound=" + fmt(worst_ratio, "%.4f"), "< 1, tail_bound <= 0.02 n",
                 std::to_string(zeros.size()) + " zeros, n <= " + std::to_string(m));
}

CheckResult positivity_check(const core::PipelineResult& run) {
  const auto report = core::positivity_report(run.rows);
  std::string measured = "violations=" + std::to_string(report.negative_total.size() + report.osc_exceeds_trend.size());
  if (report.min_margin) measured += " min_lambda=" + report.min_margin->to_scientific(12) + " at n=" + std::to_string(report.min_margin_n);
  return verdict("positivity", report.clean(), measured, "0 violations", "n <= " + std::to_string(report.rows_checked));
}

CheckResult decay_check(const core::PipelineResult& run) {
  constexpr int kWindow = 10;
  const int last = std::min(100, static_cast<int>(run.rows.size()));
  if (last < 2 * kWindow) return skipped("accuracy-decay", "needs n_max >= 20");
  std::vector<double> averages;
  for (int start = 1; start + kWindow - 1 <= last; start += kWindow) {
    double sum = 0;
    for (int n = start; n < start + kWindow; ++n) sum += run.rows[static_cast<std::size_t>(n - 1)].est_digits;
    averages.push_back(sum / kWindow);
  }
  bool ok = averages.back() < averages.front();
  for (std::size_t i = 1; i < averages.size(); ++i) ok = ok && averages[i] <= averages[i - 1];
  // least-squares slope of est_digits against n
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int n = 1; n <= last; ++n) {
    const double y = run.rows[static_cast<std::size_t>(n - 1)].est_digits;
    sx += n;
    sy += y;
    sxx += static_cast<double>(n) * n;
    sxy += n * y;
  }
  const double slope = (last * sxy - sx * sy) / (last * sxx - sx * sx);
  return verdict("accuracy-decay", ok, "slope=" + fmt(slope, "%.3f") + " digits/n", "window-10 averages non-increasing",
                 "n <= " + std::to_string(last));
}

template <typename F>
CheckResult guarded(const std::string& name, F&& check) {
  try {
    return check();
  } catch (const Error& e) {
    return CheckResult{name, CheckStatus::fail, "-", "-", diagnostic(e)};
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const RunConfig& config, std::ostream& err) {
  std::vector<CheckResult> checks;
  RunConfig effective = config;
  // input files are validated before any work, so a bad table is exit 1
  std::optional<oracles::ZeroTable> zeros;
  if (config.zeros_path) zeros = oracles::load_zero_table(*config.zeros_path);
  if (config.use_cache && std::filesystem::exists(config.cache_path)) {
    checks.push_back(guarded("cache", [&] {
      const auto table = stieltjes::load_cache(config.cache_path);
      return verdict("cache", true, std::to_string(table.values.size()) + " entries", "well-formed",
                     std::string("convention=") + std::string(stieltjes::to_string(table.convention)));
    }));
    if (checks.back().status == CheckStatus::fail) effective.use_cache = false;  // leave the damaged file in place
  } else {
    checks.push_back(skipped("cache", config.use_cache ? "no cache file yet" : "--no-cache"));
  }

  const PrecisionContext ctx = context_for(effective);
  auto source = obtain_gamma(effective, ctx, err);
  const auto run = core::accuracy_probe(effective.n_max, ctx, core::probe_context(ctx, effective.n_max), source.table);

  const int n_max = effective.n_max;
  checks.push_back(n_max >= 15 ? guarded("table-0-15", [&] { return table_check("table-0-15", run, 0, 15); })
                               : skipped("table-0-15", "needs n_max >= 15"));
  checks.push_back(n_max >= 100 ? guarded("table-100", [&] { return table_check("table-100", run, 100, 100); })
                                : skipped("table-100", "needs n_max >= 100"));
  checks.push_back(guarded("asymptotic-trend", [&] { return asymptotic_check(); }));
  checks.push_back(guarded("contour-lambda", [&] { return contour_check(run, ctx); }));
  checks.push_back(guarded("symbolic", [&] { return symbolic_check(run, ctx); }));
  checks.push_back(guarded("kernel", [&] { return kernel_check(ctx); }));
  checks.push_back(guarded("zero-sum", [&] { return zeros_check(zeros, run, ctx); }));
  checks.push_back(guarded("positivity", [&] { return positivity_check(run); }));
  checks.push_back(guarded("accuracy-decay", [&] { return decay_check(run); }));
  return checks;
}

std::string format_check(const CheckResult& check) {
  const char* status = check.status == CheckStatus::pass ? "PASS" : check.status == CheckStatus::fail ? "FAIL" : "SKIP";
  std::string line = std::string(status) + "  " + check.name + "  measured=" + check.measured + "  tolerance=" + check.tolerance;
  if (!check.detail.empty()) line += "  " + check.detail;
  return line;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto checks = run_verification(config, err);
  int passed = 0, failed = 0, skipped_count = 0;
  for (const auto& check : checks) {
    out << format_check(check) << '\n';
    if (check.status == CheckStatus::pass) ++passed;
    if (check.status == CheckStatus::fail) ++failed;
    if (check.status == CheckStatus::skip) ++skipped_count;
  }
  out << core::positivity_caveat() << '\n';
  out << "verify: " << passed << " passed, " << failed << " failed, " << skipped_count << " skipped\n";
  return failed == 0 ? 0 : 3;
}

}  // namespace li::cli
