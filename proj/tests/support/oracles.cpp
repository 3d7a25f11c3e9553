#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "li/numeric/precision.hpp"

namespace li::test {

BigComplex zeta_borwein(const BigComplex& s, int digits) {
  const mpfr_prec_t bits = bits_for_digits(digits + 20);
  const double t = std::abs(s.im().to_double());
  // error ~ (3 + sqrt 8)^-n e^{pi |t| / 2}; log10(3 + sqrt 8) = 0.7656
  const int n = static_cast<int>(std::ceil((digits + 10 + 0.6822 * t) / 0.7656)) + 4;

  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
  std::vector<mpq_class> d(n + 1);
  mpq_class acc = 0;
  for (int i = 0; i <= n; ++i) {
    mpz_class num;
    mpz_class f1;
    mpz_class f2;
    mpz_class four_i;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n + i - 1));
    mpz_fac_ui(f1.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_fac_ui(f2.get_mpz_t(), static_cast<unsigned long>(2 * i));
    mpz_ui_pow_ui(four_i.get_mpz_t(), 4, static_cast<unsigned long>(i));
    mpq_class term(num * four_i * n, f1 * f2);
    term.canonicalize();
    acc += term;
    d[i] = acc;
  }

  const BigComplex sw(s.re().with_precision(bits), s.im().with_precision(bits));
  BigComplex sum(bits);
  for (int k = 0; k < n; ++k) {
    const BigReal lk = log_ui(static_cast<unsigned long>(k + 1), bits);
    BigComplex term = exp(-(sw * lk));
    term *= BigReal(mpq_class(d[k] - d[n]), bits);
    if (k % 2 == 0) sum += term; else sum -= term;
  }
  BigComplex eta = -sum / BigReal(d[n], bits);
  // zeta = eta / (1 - 2^{1-s})
  const BigComplex one_minus_s = BigComplex(BigReal(1, bits)) - sw;
  const BigComplex two_pow = exp(one_minus_s * log_ui(2, bits));
  return eta / (BigComplex(BigReal(1, bits)) - two_pow);
}

mpz_class pascal_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<mpz_class> row{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<mpz_class> next(r + 1);
    next[0] = 1;
    next[r] = 1;
    for (unsigned j = 1; j < r; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

mpq_class bernoulli_akiyama(unsigned k) {
  std::vector<mpq_class> a(k + 1);
  for (unsigned m = 0; m <= k; ++m) {
    a[m] = mpq_class(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
  }
  // the transform yields B_1 = +1/2
  return k == 1 ? mpq_class(-1, 2) : a[0];
}

std::vector<mpz_class> partitions_by_product(unsigned n_max) {
  std::vector<mpz_class> p(n_max + 1, 0);
  p[0] = 1;
  for (unsigned part = 1; part <= n_max; ++part) {
    for (unsigned n = part; n <= n_max; ++n) p[n] += p[n - part];
  }
  return p;
}

BigReal big(std::string_view decimal, int digits) {
  BigReal out(2);
  if (!BigReal::parse(decimal, bits_for_digits(digits), out)) {
    throw std::invalid_argument("bad test literal " + std::string(decimal));
  }
  return out;
}

BigComplex big(std::string_view re, std::string_view im, int digits) {
  return BigComplex(big(re, digits), big(im, digits));
}

double rel_error_log10(const BigReal& a, const BigReal& b) {
  const BigReal diff = abs(a - b);
  if (diff.is_zero()) return -std::numeric_limits<double>::infinity();
  if (b.is_zero()) return diff.log10_abs();
  return diff.log10_abs() - b.log10_abs();
}

double abs_error_log10(const BigReal& a, const BigReal& b) {
  const BigReal diff = abs(a - b);
  return diff.is_zero() ? -std::numeric_limits<double>::infinity() : diff.log10_abs();
}

double abs_error_log10(const BigComplex& a, const BigComplex& b) {
  const BigReal diff = abs(a - b);
  return diff.is_zero() ? -std::numeric_limits<double>::infinity() : diff.log10_abs();
}

}  // namespace li::test
