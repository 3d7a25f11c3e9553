#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "li/numeric/big.hpp"
#include "li/numeric/precision.hpp"

namespace li {

/// f sampled at center + radius * exp(2 pi i m / node_count), m = 0..node_count-1.
struct ContourSamples {
  BigComplex center;
  BigReal radius;
  std::size_t node_count = 0;
  std::vector<BigComplex> values;
};

using ComplexFunction = std::function<BigComplex(const BigComplex&)>;

/// Node m of the circle: center + radius * e^{2 pi i m / node_count}.
BigComplex circle_node(const BigComplex& center, const BigReal& radius, std::size_t node_count, std::size_t m);

/// Samples `f` on the circle. Nodes are evaluated in parallel; the result is
/// independent of scheduling. node_count must be a power of two >= 8.
ContourSamples sample_circle(const ComplexFunction& f, const BigComplex& center, const BigReal& radius,
                             std::size_t node_count);

struct ContourCoefficients {
  std::vector<BigComplex> coeffs;  // a_0..a_{n_max}
  /// Set when the highest resolvable coefficient |a_{M/2-1}| r^{M/2-1} is not
  /// below 10^{-digits/2} relative to max |f|, i.e. aliasing from a_{n+M} may
  /// exceed 10^{-digits}.
  bool aliasing_warning = false;
  BigReal max_sample;  // max_m |f(node_m)|
};

/// Taylor coefficients about the center by the trapezoidal Cauchy formula
///   a_n = (1/M) sum_m f_m e^{-2 pi i n m / M} / r^n,
/// all from one pass over the shared samples. Requires n_max < node_count / 2.
ContourCoefficients contour_coeffs(const ContourSamples& samples, std::size_t n_max);

}  // namespace li
