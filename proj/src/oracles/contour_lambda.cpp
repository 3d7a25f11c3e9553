#include "li/oracles/contour_lambda.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "li/error.hpp"
#include "li/numeric/contour.hpp"
#include "li/numeric/exact.hpp"
#include "li/numeric/special.hpp"

namespace li::oracles {

namespace {

// Nearest singularity of log xi(1 + w): the trivial zero at s = -2.
constexpr double kAnalyticRadius = 3.0;

}  // namespace

std::size_t cauchy_node_count(int n_max, int working_digits, double radius) {
  const double per_node = std::log10(kAnalyticRadius / radius);
  const double needed = (static_cast<double>(working_digits) + 5.0) / per_node;
  std::size_t count = 8;
  while (count <= 2 * static_cast<std::size_t>(n_max) || static_cast<double>(count) < needed) count *= 2;
  return count;
}

int cauchy_extraction_digits(int n, const PrecisionContext& ctx, double radius) {
  return ctx.working_digits() - 2 + static_cast<int>(std::floor(n * std::log10(radius)));
}

std::vector<BigReal> log_xi_coefficients(int n_max, const PrecisionContext& ctx, const CauchyOptions& options) {
  if (n_max < 0) fail(ErrorKind::validation, "oracles", "n_max must be >= 0");
  if (!(options.radius > 0.0) || !(options.radius < kAnalyticRadius)) {
    fail(ErrorKind::validation, "oracles", "contour radius must lie in (0, 3)");
  }
  if (!(options.scale > 0.0)) fail(ErrorKind::validation, "oracles", "xi scale factor must be positive");
  const std::size_t nodes =
      options.nodes != 0 ? options.nodes : cauchy_node_count(n_max, ctx.working_digits(), options.radius);
  if (nodes <= 2 * static_cast<std::size_t>(n_max)) {
    fail(ErrorKind::validation, "oracles", "node count must exceed 2 n_max");
  }

  const mpfr_prec_t bits = ctx.bits();
  const BigReal radius = BigReal::from_double(options.radius, bits);
  const BigComplex center(BigReal(1, bits));
  const bool want_residual = options.part != LogXiPart::trend;
  const bool want_gamma = options.part != LogXiPart::oscillation;

  std::optional<ContourSamples> samples;
  if (want_residual) {
    samples = sample_circle(
        [&](const BigComplex& s) {
          BigComplex s_minus_one = s;
          s_minus_one.re() -= BigReal(1, bits);
          return log(s_minus_one * zeta(s, ctx));
        },
        center, radius, nodes);
    // Follow the argument continuously from node 0.
    const BigReal two_pi = const_pi(bits) * 2L;
    const double step_limit = std::numbers::pi / 2.0;
    double shift = 0.0;
    double previous = samples->values[0].im().to_double();
    for (std::size_t m = 1; m <= nodes; ++m) {
      const double raw = samples->values[m % nodes].im().to_double();
      double jump = raw + shift - previous;
      if (jump > std::numbers::pi) shift -= 2.0 * std::numbers::pi;
      if (jump < -std::numbers::pi) shift += 2.0 * std::numbers::pi;
      jump = raw + shift - previous;
      if (std::abs(jump) >= step_limit) {
        fail(ErrorKind::domain, "oracles",
             "argument of (s-1) zeta(s) jumps by " + std::to_string(jump) + " between nodes " + std::to_string(m - 1) +
                 " and " + std::to_string(m) + "; increase the node count");
      }
      if (m == nodes) {
        if (std::abs(shift) > 1.0) {
          fail(ErrorKind::domain, "oracles", "argument of (s-1) zeta(s) winds around the contour; shrink the radius");
        }
        break;
      }
      if (shift != 0.0) {
        const long turns = std::lround(shift / (2.0 * std::numbers::pi));
        samples->values[m].im() += two_pi * turns;
      }
      previous = raw + shift;
    }
  }
  if (want_gamma) {
    const BigReal log_pi = log(const_pi(bits));
    auto gamma_samples = sample_circle(
        [&](const BigComplex& s) {
          const BigComplex half_s = s / BigReal(2, bits);
          BigComplex one_plus_half = half_s;
          one_plus_half.re() += BigReal(1, bits);
          return log_gamma(one_plus_half, ctx) - half_s * log_pi;
        },
        center, radius, nodes);
    if (want_residual) {
      for (std::size_t m = 0; m < nodes; ++m) samples->values[m] += gamma_samples.values[m];
    } else {
      samples = std::move(gamma_samples);
    }
  }

  auto extracted = contour_coeffs(*samples, static_cast<std::size_t>(n_max));
  if (extracted.aliasing_warning) {
    fail(ErrorKind::precision, "oracles",
         "log xi contour coefficients did not decay; increase the node count (" + std::to_string(nodes) + ")");
  }
  std::vector<BigReal> coeffs;
  coeffs.reserve(extracted.coeffs.size());
  for (auto& c : extracted.coeffs) coeffs.push_back(c.re());
  // Constant term: log 2 (trend part) and log(scale) only shift l_0.
  if (want_gamma) coeffs[0] += log(BigReal(2, bits));
  coeffs[0] += log(BigReal::from_double(options.scale, bits));
  return coeffs;
}

std::vector<BigReal> lambda_cauchy_all(int n_max, const PrecisionContext& ctx, const CauchyOptions& options) {
  if (n_max < 1) fail(ErrorKind::validation, "oracles", "n must be >= 1");
  const auto l = log_xi_coefficients(n_max, ctx, options);
  std::vector<BigReal> lambda;
  const mpfr_prec_t bits = ctx.bits();
  BigReal term(bits);
  for (int n = 1; n <= n_max; ++n) {
    BigReal sum(bits);
    for (int j = 0; j <= n - 1; ++j) {
      const mpz_class c = binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(j));
      mpfr_mul_z(term.raw(), l[static_cast<std::size_t>(n - j)].raw(), c.get_mpz_t(), MPFR_RNDN);
      sum += term;
    }
    sum *= static_cast<long>(n);
    lambda.push_back(std::move(sum));
  }
  return lambda;
}

BigReal lambda_cauchy(int n, const PrecisionContext& ctx, const CauchyOptions& options) {
  auto all = lambda_cauchy_all(n, ctx, options);
  return std::move(all.back());
}

}  // namespace li::oracles
