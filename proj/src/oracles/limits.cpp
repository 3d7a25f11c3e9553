#include "li/oracles/limits.hpp"

#include <cmath>
#include <string>

#include "li/error.hpp"

namespace li::oracles {

namespace {

constexpr mpfr_prec_t kBits = 64;

long double sign_over_factorial(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return (n % 2 == 0 ? 1.0L : -1.0L) / f;
}

// Neumaier-compensated running sum.
struct CompensatedSum {
  long double sum = 0.0L;
  long double carry = 0.0L;
  void add(long double x) {
    const long double t = sum + x;
    carry += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  long double value() const { return sum + carry; }
};

BigReal to_big(long double x) {
  BigReal out(kBits);
  mpfr_set_ld(out.raw(), x, MPFR_RNDN);
  return out;
}

}  // namespace

std::vector<double> von_mangoldt_table(std::uint32_t limit) {
  std::vector<double> lambda(static_cast<std::size_t>(limit) + 1, 0.0);
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
    const double log_p = std::log(static_cast<double>(p));
    for (std::uint64_t q = p; q <= limit; q *= p) lambda[q] = log_p;
  }
  return lambda;
}

BigReal gamma_limit_estimate(int n, std::uint64_t big_n) {
  if (n < 0 || n > 5) fail(ErrorKind::validation, "oracles", "limit estimate supports 0 <= n <= 5");
  if (big_n < 10000) fail(ErrorKind::validation, "oracles", "limit estimate needs N >= 10^4");
  CompensatedSum sum;
  for (std::uint64_t k = 2; k <= big_n; ++k) {
    const long double log_k = std::log(static_cast<long double>(k));
    sum.add(std::pow(log_k, n) / static_cast<long double>(k));
  }
  if (n == 0) sum.add(1.0L);  // k = 1 contributes (log 1)^0 = 1
  const long double log_n = std::log(static_cast<long double>(big_n));
  const long double limit = sum.value() - std::pow(log_n, n + 1) / (n + 1) -
                            std::pow(log_n, n) / (2.0L * static_cast<long double>(big_n));
  return to_big(sign_over_factorial(n) * limit);
}

BigReal eta_limit_estimate(int n, std::uint32_t big_n) {
  if (n < 0 || n > 2) fail(ErrorKind::validation, "oracles", "eta limit estimate supports 0 <= n <= 2");
  if (big_n < 2 || big_n > 10'000'000) fail(ErrorKind::validation, "oracles", "eta limit estimate needs 2 <= N <= 10^7");
  const auto lambda = von_mangoldt_table(big_n);
  CompensatedSum sum;
  for (std::uint32_t k = 2; k <= big_n; ++k) {
    if (lambda[k] == 0.0) continue;
    const long double log_k = std::log(static_cast<long double>(k));
    sum.add(static_cast<long double>(lambda[k]) * std::pow(log_k, n) / static_cast<long double>(k));
  }
  const long double log_n = std::log(static_cast<long double>(big_n));
  return to_big(sign_over_factorial(n) * (sum.value() - std::pow(log_n, n + 1) / (n + 1)));
}

}  // namespace li::oracles
