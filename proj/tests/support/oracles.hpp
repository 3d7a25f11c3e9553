#pragma once

#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "li/error.hpp"
#include "li/numeric/big.hpp"

namespace li::test {

/// zeta(s) for Re s > 0 through the alternating eta series with Borwein's
/// Chebyshev weights: eta(s) = -1/d_n sum_{k<n} (-1)^k (d_k - d_n) (k+1)^-s.
BigComplex zeta_borwein(const BigComplex& s, int digits);

/// C(n, k) read off Pascal's triangle built by additions only.
mpz_class pascal_binomial(unsigned n, unsigned k);

/// B_k (B_1 = -1/2) by the Akiyama-Tanigawa transform.
mpq_class bernoulli_akiyama(unsigned k);

/// p(n) from the product of 1/(1 - x^k), expanded term by term.
std::vector<mpz_class> partitions_by_product(unsigned n_max);

BigReal big(std::string_view decimal, int digits = 60);
BigComplex big(std::string_view re, std::string_view im, int digits = 60);

/// log10 |a - b| / max(|b|, tiny), or -inf when equal.
double rel_error_log10(const BigReal& a, const BigReal& b);
double abs_error_log10(const BigReal& a, const BigReal& b);
double abs_error_log10(const BigComplex& a, const BigComplex& b);

/// True when f throws li::Error of the given kind.
template <class F>
bool throws_kind(F&& f, ErrorKind kind) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace li::test
