#include "li/oracles/symbolic.hpp"

#include <mutex>
#include <string>

#include "li/error.hpp"
#include "li/numeric/exact.hpp"

namespace li::oracles {

namespace {

using RationalPoly = std::map<Monomial, mpq_class>;
using Poly = std::map<Monomial, mpz_class>;

Monomial times_variable(const Monomial& m, std::size_t variable) {
  Monomial out = m;
  if (out.size() <= variable) out.resize(variable + 1, 0);
  ++out[variable];
  return out;
}

mpz_class partition_sum(int upto) {
  mpz_class total = 0;
  for (int k = 1; k <= upto; ++k) total += partition_count(k);
  return total;
}

void check_budget(const mpz_class& terms, std::size_t budget, const std::string& what) {
  if (terms > mpz_class(static_cast<unsigned long>(budget))) {
    fail(ErrorKind::resource, "oracles",
         what + " has " + terms.get_str() + " terms, above the budget of " + std::to_string(budget));
  }
}

// eta_0..eta_{count-1}: eta_{m-1} = m [s^m] -log(1 + H), H = sum_i gamma_i s^(i+1).
std::vector<SymbolicPoly> eta_series(int count) {
  const int degree = count;
  std::vector<RationalPoly> log_coeffs(static_cast<std::size_t>(degree) + 1);
  // power[m] = [s^m] H^k, starting at k = 1
  std::vector<Poly> power(static_cast<std::size_t>(degree) + 1);
  for (int m = 1; m <= degree; ++m) power[static_cast<std::size_t>(m)][times_variable({}, static_cast<std::size_t>(m - 1))] = 1;

  for (int k = 1; k <= degree; ++k) {
    // [s^m] of (-1)^k H^k / k
    for (int m = k; m <= degree; ++m) {
      auto& target = log_coeffs[static_cast<std::size_t>(m)];
      for (const auto& [monomial, c] : power[static_cast<std::size_t>(m)]) {
        mpq_class term(c, k);
        term.canonicalize();
        if (k % 2 == 1) term = -term;
        target[monomial] += term;
      }
    }
    if (k == degree) break;
    std::vector<Poly> next(static_cast<std::size_t>(degree) + 1);
    for (int m = k + 1; m <= degree; ++m) {
      auto& target = next[static_cast<std::size_t>(m)];
      for (int i = 0; i <= m - 1 - k; ++i) {
        for (const auto& [monomial, c] : power[static_cast<std::size_t>(m - 1 - i)]) {
          target[times_variable(monomial, static_cast<std::size_t>(i))] += c;
        }
      }
    }
    power = std::move(next);
  }

  std::vector<SymbolicPoly> eta(static_cast<std::size_t>(count));
  for (int m = 1; m <= degree; ++m) {
    for (const auto& [monomial, c] : log_coeffs[static_cast<std::size_t>(m)]) {
      const mpq_class scaled = c * m;
      if (scaled.get_den() != 1) {
        fail(ErrorKind::domain, "oracles", "non-integral coefficient in eta_" + std::to_string(m - 1));
      }
      eta[static_cast<std::size_t>(m - 1)].add(monomial, scaled.get_num());
    }
  }
  return eta;
}

}  // namespace

void SymbolicPoly::add(const Monomial& monomial, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int SymbolicPoly::max_variable() const {
  int highest = -1;
  for (const auto& [monomial, c] : terms_) highest = std::max(highest, static_cast<int>(monomial.size()) - 1);
  return highest;
}

std::string SymbolicPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [monomial, c] : terms_) {
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < monomial.size(); ++i) {
      if (monomial[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "g" + std::to_string(i);
      if (monomial[i] > 1) factors += "^" + std::to_string(monomial[i]);
    }
    if (factors.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.get_str() + "*" + factors;
    }
  }
  return out;
}

SymbolicPoly expand_eta_symbolic(int n, std::size_t term_budget) {
  if (n < 0) fail(ErrorKind::validation, "oracles", "n must be >= 0");
  check_budget(partition_count(n + 1), term_budget, "eta_" + std::to_string(n));
  auto series = eta_series(n + 1);
  return std::move(series.back());
}

SymbolicPoly expand_lambda_osc_symbolic(int n, std::size_t term_budget) {
  if (n < 0) fail(ErrorKind::validation, "oracles", "n must be >= 0");
  check_budget(partition_sum(n), term_budget, "oscillation_" + std::to_string(n));
  SymbolicPoly out;
  if (n == 0) return out;
  const auto eta = eta_series(n);
  for (int j = 1; j <= n; ++j) {
    const mpz_class c = -binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    for (const auto& [monomial, coeff] : eta[static_cast<std::size_t>(j - 1)].terms()) out.add(monomial, c * coeff);
  }
  return out;
}

std::size_t term_count(const SymbolicPoly& poly) { return poly.terms().size(); }

mpz_class partition_count(int n) {
  if (n < 0) return 0;
  static std::mutex mutex;
  static std::vector<mpz_class> memo{1};
  std::lock_guard lock(mutex);
  for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
    mpz_class total = 0;
    for (int k = 1;; ++k) {
      const int first = m - k * (3 * k - 1) / 2;
      if (first < 0) break;
      const int second = m - k * (3 * k + 1) / 2;
      mpz_class pair = memo[static_cast<std::size_t>(first)];
      if (second >= 0) pair += memo[static_cast<std::size_t>(second)];
      if (k % 2 == 1) {
        total += pair;
      } else {
        total -= pair;
      }
    }
    memo.push_back(total);
  }
  return memo[static_cast<std::size_t>(n)];
}

BigReal eval_symbolic(const SymbolicPoly& poly, const stieltjes::GammaTable& gamma, const PrecisionContext& ctx) {
  if (gamma.convention != stieltjes::Convention::bombieri_lagarias) {
    fail(ErrorKind::convention, "oracles", "symbolic evaluation needs the Bombieri-Lagarias convention");
  }
  const int highest = poly.max_variable();
  if (highest > gamma.n_max()) {
    fail(ErrorKind::coverage, "oracles",
         "polynomial uses gamma_" + std::to_string(highest) + " but table stops at " + std::to_string(gamma.n_max()));
  }
  const mpfr_prec_t bits = ctx.bits();
  // powers[i][e] = gamma_i^e
  std::vector<std::vector<BigReal>> powers(static_cast<std::size_t>(highest + 1));
  for (const auto& [monomial, c] : poly.terms()) {
    for (std::size_t i = 0; i < monomial.size(); ++i) {
      auto& row = powers[i];
      if (row.empty()) row.push_back(BigReal(1, bits));
      while (row.size() <= monomial[i]) row.push_back(row.back() * gamma.values[i].with_precision(bits));
    }
  }
  BigReal sum(bits);
  for (const auto& [monomial, c] : poly.terms()) {
    BigReal term(c, bits);
    for (std::size_t i = 0; i < monomial.size(); ++i) {
      if (monomial[i] != 0) term *= powers[i][monomial[i]];
    }
    sum += term;
  }
  return sum;
}

}  // namespace li::oracles
