#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "li/numeric/big.hpp"
#include "li/numeric/precision.hpp"
#include "li/stieltjes/gamma_table.hpp"

namespace li::oracles {

/// Exponents (e_0, e_1, ...) of gamma_0, gamma_1, ...; trailing zeros stripped.
using Monomial = std::vector<std::uint8_t>;

/// Polynomial in gamma_0..gamma_d with exact integer coefficients. No zero
/// coefficients are stored.
class SymbolicPoly {
 public:
  const std::map<Monomial, mpz_class>& terms() const { return terms_; }
  /// Adds c * monomial, dropping the entry if it cancels.
  void add(const Monomial& monomial, const mpz_class& c);
  /// Highest variable index present, -1 for constants and zero.
  int max_variable() const;
  bool is_zero() const { return terms_.empty(); }
  /// e.g. "g0^2 - 2*g1"
  std::string to_string() const;

 private:
  std::map<Monomial, mpz_class> terms_;
};

constexpr std::size_t kDefaultTermBudget = 30000;

/// eta_n as a polynomial in BL gamma_0..gamma_n, from -log(1 + sum gamma_i s^(i+1)).
SymbolicPoly expand_eta_symbolic(int n, std::size_t term_budget = kDefaultTermBudget);

/// Oscillatory lambda_n = -sum_{j=1}^n C(n,j) eta_{j-1} as a polynomial in gamma_0..gamma_{n-1}.
SymbolicPoly expand_lambda_osc_symbolic(int n, std::size_t term_budget = kDefaultTermBudget);

std::size_t term_count(const SymbolicPoly& poly);

/// p(n) by Euler's pentagonal recurrence.
mpz_class partition_count(int n);

/// Evaluates at a BL-convention table.
BigReal eval_symbolic(const SymbolicPoly& poly, const stieltjes::GammaTable& gamma, const PrecisionContext& ctx);

}  // namespace li::oracles
