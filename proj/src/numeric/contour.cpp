#include "li/numeric/contour.hpp"

#include <algorithm>
#include <string>

#include "li/error.hpp"
#include "li/numeric/parallel.hpp"

namespace li {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_node_count(std::size_t node_count) {
  if (node_count < 8 || !is_power_of_two(node_count)) {
    fail(ErrorKind::validation, "numeric",
         "contour node count must be a power of two >= 8, got " + std::to_string(node_count));
  }
}

// e^{-2 pi i m / M} for m = 0..M-1
std::vector<BigComplex> inverse_roots(std::size_t node_count, mpfr_prec_t bits) {
  std::vector<BigComplex> roots;
  roots.reserve(node_count);
  const BigReal two_pi = const_pi(bits) * 2L;
  for (std::size_t m = 0; m < node_count; ++m) {
    BigComplex root(bits);
    BigReal angle = two_pi * static_cast<long>(m) / static_cast<long>(node_count);
    mpfr_sin_cos(root.im().raw(), root.re().raw(), angle.raw(), MPFR_RNDN);
    mpfr_neg(root.im().raw(), root.im().raw(), MPFR_RNDN);
    roots.push_back(std::move(root));
  }
  return roots;
}

}  // namespace

BigComplex circle_node(const BigComplex& center, const BigReal& radius, std::size_t node_count, std::size_t m) {
  const mpfr_prec_t bits = std::max(center.precision(), radius.precision());
  BigReal angle = const_pi(bits) * 2L * static_cast<long>(m) / static_cast<long>(node_count);
  return center + BigComplex::from_polar(radius, angle);
}

ContourSamples sample_circle(const ComplexFunction& f, const BigComplex& center, const BigReal& radius,
                             std::size_t node_count) {
  check_node_count(node_count);
  if (radius.sign() <= 0) fail(ErrorKind::validation, "numeric", "contour radius must be positive");
  std::vector<BigComplex> values(node_count, BigComplex(center.precision()));
  parallel_for(node_count, [&](std::size_t m) { values[m] = f(circle_node(center, radius, node_count, m)); });
  return ContourSamples{center, radius, node_count, std::move(values)};
}

ContourCoefficients contour_coeffs(const ContourSamples& samples, std::size_t n_max) {
  const std::size_t count = samples.node_count;
  check_node_count(count);
  if (samples.values.size() != count) {
    fail(ErrorKind::validation, "numeric", "contour sample count does not match node count");
  }
  if (n_max >= count / 2) {
    fail(ErrorKind::validation, "numeric",
         "n_max " + std::to_string(n_max) + " must be below node_count/2 = " + std::to_string(count / 2));
  }
  mpfr_prec_t bits = samples.radius.precision();
  for (const auto& v : samples.values) bits = std::max(bits, v.precision());
  const auto roots = inverse_roots(count, bits);

  ContourCoefficients out{{}, false, BigReal(bits)};
  for (const auto& v : samples.values) out.max_sample = std::max(out.max_sample, abs(v));

  // The last index is the aliasing probe.
  const std::size_t probe = count / 2 - 1;
  std::vector<std::size_t> indices;
  for (std::size_t n = 0; n <= n_max; ++n) indices.push_back(n);
  if (probe > n_max) indices.push_back(probe);

  const BigReal inv_radius = BigReal(1, bits) / samples.radius;
  BigReal scratch(bits);
  BigComplex term(bits);
  for (std::size_t n : indices) {
    BigComplex acc(bits);
    for (std::size_t m = 0; m < count; ++m) {
      term.assign_product(samples.values[m], roots[(n * m) % count], scratch);
      acc += term;
    }
    acc /= BigReal(static_cast<long>(count), bits);
    if (n == probe && probe > n_max) {
      // |a_probe| r^probe relative to max |f|
      const double rel = abs(acc).log10_abs() - out.max_sample.log10_abs();
      const double digits = static_cast<double>(bits) * 0.30102999566398120;
      out.aliasing_warning = !out.max_sample.is_zero() && !(rel < -digits / 2.0);
      break;
    }
    acc *= pow(inv_radius, static_cast<long>(n));
    out.coeffs.push_back(std::move(acc));
  }
  return out;
}

}  // namespace li
