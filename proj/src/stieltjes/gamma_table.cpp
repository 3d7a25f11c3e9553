#include "li/stieltjes/gamma_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "li/error.hpp"
#include "li/numeric/contour.hpp"
#include "li/numeric/exact.hpp"
#include "li/numeric/special.hpp"

namespace li::stieltjes {

std::string_view to_string(Convention convention) {
  return convention == Convention::classical ? "classical" : "bl";
}

std::optional<Convention> parse_convention(std::string_view text) {
  if (text == "classical") return Convention::classical;
  if (text == "bl" || text == "bombieri_lagarias") return Convention::bombieri_lagarias;
  return std::nullopt;
}

double gamma_radius(int n_max) {
  if (n_max < 3) return 1.0;
  const double scale = n_max / (std::exp(1.0) * std::log(static_cast<double>(n_max)));
  double radius = 1.0;
  while (2.0 * radius <= scale) radius *= 2.0;
  return radius;
}

std::size_t gamma_node_count(int n_max, int working_digits, double radius) {
  const double target = -static_cast<double>(working_digits) - 2.0;
  std::size_t needed = 0;
  for (long m = 10; m < 1'000'000; ++m) {
    const double md = static_cast<double>(m);
    const double log10_bound =
        -4.0 + md * std::log(std::log(md)) / std::log(10.0) - std::lgamma(md + 1.0) / std::log(10.0) +
        md * std::log10(radius);
    if (log10_bound < target) {
      needed = static_cast<std::size_t>(m);
      break;
    }
  }
  std::size_t count = std::max<std::size_t>({8, 4 * static_cast<std::size_t>(n_max + 1), needed});
  std::size_t power = 8;
  while (power < count) power *= 2;
  return power;
}

GammaTable gamma_bl(int n_max, const PrecisionContext& ctx, const GammaOptions& options) {
  if (n_max < 0) fail(ErrorKind::validation, "stieltjes", "n_max must be >= 0");
  if (!(options.radius >= 0.0)) fail(ErrorKind::validation, "stieltjes", "contour radius must be positive, or 0 for automatic");
  const double r = options.radius == 0.0 ? gamma_radius(n_max) : options.radius;
  const mpfr_prec_t bits = ctx.bits();
  const std::size_t nodes =
      options.node_count != 0 ? options.node_count : gamma_node_count(n_max, ctx.working_digits(), r);
  if (nodes < 4 * static_cast<std::size_t>(n_max + 1)) {
    fail(ErrorKind::validation, "stieltjes", "node count must be >= 4 (n_max + 1)");
  }

  const BigReal radius = BigReal::from_double(r, bits);
  const BigReal radius_sq = radius * radius;
  const ComplexFunction regular_part = [&](const BigComplex& w) {
    BigComplex s = w;
    s.re() += BigReal(1, bits);
    // 1/w = conj(w) / r^2 on the circle
    return zeta(s, ctx) - conj(w) / radius_sq;
  };
  const auto samples = sample_circle(regular_part, BigComplex(bits), radius, nodes);
  const auto extracted = contour_coeffs(samples, static_cast<std::size_t>(n_max));
  if (extracted.aliasing_warning) {
    fail(ErrorKind::precision, "stieltjes",
         "trailing contour coefficients did not decay; increase the node count (" + std::to_string(nodes) + ")");
  }

  const int working = ctx.working_digits();
  const double reality_limit = -static_cast<double>(ctx.digits()) / 2.0;
  // Absolute error of every a_n r^n is about max|f| 10^-(working-2).
  const double log10_abs_error = extracted.max_sample.log10_abs() - static_cast<double>(working - 2);

  GammaTable table;
  table.convention = Convention::bombieri_lagarias;
  for (int n = 0; n <= n_max; ++n) {
    const BigComplex& a = extracted.coeffs[static_cast<std::size_t>(n)];
    if (!(a.im().log10_abs() < reality_limit)) {
      fail(ErrorKind::precision, "stieltjes",
           "imaginary residue of gamma_" + std::to_string(n) + " exceeds 10^" + std::to_string(reality_limit) +
               "; check node count and radius");
    }
    const double err_n = log10_abs_error - n * std::log10(r);
    const double sig = std::floor(a.re().log10_abs() - err_n);
    table.digits.push_back(static_cast<int>(std::clamp(sig, 0.0, static_cast<double>(working))));
    table.values.push_back(a.re());
  }
  return table;
}

GammaTable convert_convention(const GammaTable& table, Convention target) {
  if (table.convention == target) return table;
  GammaTable out;
  out.convention = target;
  out.digits = table.digits;
  out.values.reserve(table.values.size());
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    const BigReal& v = table.values[n];
    const BigReal fact(factorial(n), v.precision());
    BigReal converted = target == Convention::classical ? v * fact : v / fact;
    if (n % 2 == 1) converted = -converted;
    out.values.push_back(std::move(converted));
  }
  return out;
}

}  // namespace li::stieltjes
