#include "li/numeric/special.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "li/error.hpp"
#include "li/numeric/exact.hpp"

namespace li {

namespace {

constexpr double kLog10TwoPi = 0.79817986835811504;
constexpr double kLn10 = 2.302585092994046;
constexpr double kTwoPi = 6.283185307179586;
constexpr long kMaxTerms = 200000;

// Extra bits carried inside summations.
constexpr mpfr_prec_t kInternalBits = 24;

double log10_hypot(double x, double y) { return 0.5 * std::log10(x * x + y * y); }

// Smallest prime factor for 2..n (spf[k] == k for primes).
std::vector<long> smallest_prime_factors(long n) {
  std::vector<long> spf(static_cast<std::size_t>(n + 1), 0);
  for (long i = 2; i <= n; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (long j = i; j <= n; j += i) {
      if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;
    }
  }
  return spf;
}

class BernoulliFactorialCache {
 public:
  const BigReal& get(unsigned j, mpfr_prec_t bits) {
    {
      std::shared_lock lock(mutex_);
      auto it = by_bits_.find(bits);
      if (it != by_bits_.end() && j < it->second.size()) return *it->second[j];
    }
    std::unique_lock lock(mutex_);
    auto& row = by_bits_[bits];
    while (row.size() <= j) {
      const unsigned k = static_cast<unsigned>(row.size());
      mpq_class q = bernoulli(2 * k) / mpq_class(factorial(2 * k));
      row.push_back(std::make_unique<BigReal>(q, bits));
    }
    return *row[j];
  }

 private:
  std::shared_mutex mutex_;
  // unique_ptr keeps references stable while rows grow.
  std::map<mpfr_prec_t, std::vector<std::unique_ptr<BigReal>>> by_bits_;
};

BernoulliFactorialCache& bernoulli_factorial_cache() {
  static BernoulliFactorialCache cache;
  return cache;
}

class ZetaIntMemo {
 public:
  template <typename Compute>
  BigReal get(long j, mpfr_prec_t bits, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = values_.find({j, bits});
      if (it != values_.end()) return it->second;
    }
    BigReal value = compute();
    std::unique_lock lock(mutex_);
    return values_.emplace(std::make_pair(j, bits), std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<long, mpfr_prec_t>, BigReal> values_;
};

ZetaIntMemo& zeta_int_memo() {
  static ZetaIntMemo memo;
  return memo;
}

// log10 of the remainder bound after M corrections with N direct terms.
// `log_poch` holds log10 |(s)_{2M+1}|.
double remainder_bound(double sigma, double t, long n, long m, double log_poch) {
  const double k = 2.0 * static_cast<double>(m) + 2.0;  // index of B_{2M+2}
  // |B_{2M+2}|/(2M+2)! = 2 zeta(2M+2)/(2 pi)^{2M+2} <= 2 * 1.645 / (2 pi)^{2M+2}
  const double log_b = std::log10(2.0 * 1.6449340668482264) - k * kLog10TwoPi;
  const double log_term = log_b + log_poch - (sigma + k - 1.0) * std::log10(static_cast<double>(n));
  const double denom = sigma + 2.0 * static_cast<double>(m) + 1.0;
  const double factor = log10_hypot(sigma + 2.0 * static_cast<double>(m) + 1.0, t) - std::log10(denom);
  return log_term + factor;
}

// Evaluates the bound for fixed N, growing M until the bound drops below the
// target or the terms start growing. Returns the smallest adequate M.
std::optional<EulerMaclaurinPlan> try_terms(double sigma, double t, long n, double target, long max_corrections) {
  double log_poch = log10_hypot(sigma, t);  // (s)_1
  double previous = HUGE_VAL;
  for (long m = 0; m <= max_corrections; ++m) {
    if (sigma + 2.0 * static_cast<double>(m) + 1.0 > 0.0) {
      const double bound = remainder_bound(sigma, t, n, m, log_poch);
      if (bound < target) return EulerMaclaurinPlan{n, m, bound};
      if (bound > previous && m > 2) return std::nullopt;
      previous = bound;
    }
    // (s)_{2M+1} -> (s)_{2M+3}
    log_poch += log10_hypot(sigma + 2.0 * static_cast<double>(m) + 1.0, t) +
                log10_hypot(sigma + 2.0 * static_cast<double>(m) + 2.0, t);
  }
  return std::nullopt;
}

// Sum_{k=1}^{N-1} k^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + corrections, complex s.
BigComplex euler_maclaurin(const BigComplex& s, const EulerMaclaurinPlan& plan, mpfr_prec_t bits) {
  const long n = plan.terms;
  const auto spf = smallest_prime_factors(n);
  const bool real = s.im().is_zero();

  // k^{-s} for k = 1..n, multiplicative in k.
  std::vector<BigComplex> powers;
  powers.reserve(static_cast<std::size_t>(n + 1));
  powers.emplace_back(bits);
  powers.emplace_back(BigReal(1, bits));
  BigReal scratch(bits);
  BigReal log_k(bits);
  BigReal magnitude(bits);
  for (long k = 2; k <= n; ++k) {
    BigComplex value(bits);
    const long p = spf[static_cast<std::size_t>(k)];
    if (p == k) {
      mpfr_log_ui(log_k.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
      mpfr_mul(magnitude.raw(), s.re().raw(), log_k.raw(), MPFR_RNDN);
      mpfr_neg(magnitude.raw(), magnitude.raw(), MPFR_RNDN);
      mpfr_exp(magnitude.raw(), magnitude.raw(), MPFR_RNDN);
      if (real) {
        mpfr_set(value.re().raw(), magnitude.raw(), MPFR_RNDN);
      } else {
        mpfr_mul(scratch.raw(), s.im().raw(), log_k.raw(), MPFR_RNDN);
        mpfr_sin_cos(value.im().raw(), value.re().raw(), scratch.raw(), MPFR_RNDN);
        mpfr_neg(value.im().raw(), value.im().raw(), MPFR_RNDN);
        mpfr_mul(value.re().raw(), value.re().raw(), magnitude.raw(), MPFR_RNDN);
        mpfr_mul(value.im().raw(), value.im().raw(), magnitude.raw(), MPFR_RNDN);
      }
    } else if (real) {
      mpfr_mul(value.re().raw(), powers[static_cast<std::size_t>(p)].re().raw(),
               powers[static_cast<std::size_t>(k / p)].re().raw(), MPFR_RNDN);
    } else {
      value.assign_product(powers[static_cast<std::size_t>(p)], powers[static_cast<std::size_t>(k / p)], scratch);
    }
    powers.push_back(std::move(value));
  }

  BigComplex sum(bits);
  for (long k = 1; k < n; ++k) sum += powers[static_cast<std::size_t>(k)];

  const BigComplex& n_pow = powers[static_cast<std::size_t>(n)];  // N^{-s}
  const BigReal n_real(n, bits);
  BigComplex s_minus_one = s;
  s_minus_one.re() -= BigReal(1, bits);
  sum += n_pow * n_real / s_minus_one;
  sum += n_pow / BigReal(2, bits);

  // term_j = (s)_{2j-1} N^{-s-2j+1}
  BigComplex term = n_pow * s / n_real;
  const BigReal inv_n_sq = BigReal(1, bits) / (n_real * n_real);
  BigComplex shifted(bits);
  BigComplex weighted(bits);
  for (long j = 1; j <= plan.corrections; ++j) {
    const BigReal& b = bernoulli_factorial_cache().get(static_cast<unsigned>(j), bits);
    mpfr_mul(weighted.re().raw(), term.re().raw(), b.raw(), MPFR_RNDN);
    mpfr_mul(weighted.im().raw(), term.im().raw(), b.raw(), MPFR_RNDN);
    sum += weighted;
    if (j == plan.corrections) break;
    shifted = s;
    mpfr_add_si(shifted.re().raw(), shifted.re().raw(), 2 * j - 1, MPFR_RNDN);
    term.assign_product(term, shifted, scratch);
    mpfr_add_ui(shifted.re().raw(), shifted.re().raw(), 1, MPFR_RNDN);
    term.assign_product(term, shifted, scratch);
    term *= inv_n_sq;
  }
  return sum;
}

BigComplex rounded(const BigComplex& z, mpfr_prec_t bits) {
  return BigComplex(z.re().with_precision(bits), z.im().with_precision(bits));
}

bool is_nonpositive_integer(const BigComplex& s) {
  return s.im().is_zero() && s.re().sign() <= 0 && mpfr_integer_p(s.re().raw()) != 0;
}

}  // namespace

EulerMaclaurinPlan plan_euler_maclaurin(double sigma, double t, int target_digits, const ZetaOptions& options) {
  const double target = -static_cast<double>(target_digits) - 2.0;
  const long max_corrections = 4 * target_digits + 400;
  if (options.terms) {
    const long n = *options.terms;
    if (n < 1) fail(ErrorKind::validation, "numeric", "Euler-Maclaurin term count must be >= 1");
    if (options.corrections) {
      double log_poch = log10_hypot(sigma, t);
      for (long m = 0; m < *options.corrections; ++m) {
        log_poch += log10_hypot(sigma + 2.0 * m + 1.0, t) + log10_hypot(sigma + 2.0 * m + 2.0, t);
      }
      const double bound = remainder_bound(sigma, t, n, *options.corrections, log_poch);
      if (!(bound < target)) {
        fail(ErrorKind::precision, "numeric",
             "Euler-Maclaurin cutoffs N=" + std::to_string(n) + " M=" + std::to_string(*options.corrections) +
                 " cannot reach 10^-" + std::to_string(target_digits));
      }
      return {n, *options.corrections, bound};
    }
    if (auto plan = try_terms(sigma, t, n, target, max_corrections)) return *plan;
    fail(ErrorKind::precision, "numeric",
         "Euler-Maclaurin with N=" + std::to_string(n) + " cannot reach 10^-" + std::to_string(target_digits));
  }
  // Smallest N that admits an adequate M: the minimal term is ~exp(-2 pi N).
  const double abs_s = std::hypot(sigma, t);
  long n = std::max<long>(2, static_cast<long>(std::floor((target_digits + 2) * kLn10 / kTwoPi)));
  n = std::max<long>(n, static_cast<long>(abs_s / kTwoPi) + 2);
  // Among adequate N, minimize the estimated work: a prime power costs about
  // 150 multiplications, a composite 4, a correction term 12.
  std::optional<EulerMaclaurinPlan> best;
  double best_cost = HUGE_VAL;
  long first_feasible = 0;
  for (; n <= kMaxTerms; n += std::max<long>(1, n / 50)) {
    if (first_feasible != 0 && n > 3 * first_feasible) break;
    auto plan = try_terms(sigma, t, n, target, max_corrections);
    if (!plan) continue;
    if (options.corrections) {
      if (*options.corrections < plan->corrections) continue;
      plan->corrections = *options.corrections;
      return *plan;
    }
    if (first_feasible == 0) first_feasible = n;
    const double nd = static_cast<double>(n);
    const double cost = 150.0 * nd / std::log(nd + 1.0) + 4.0 * nd + 12.0 * static_cast<double>(plan->corrections);
    if (cost < best_cost) {
      best_cost = cost;
      best = plan;
    }
  }
  if (best) return *best;
  fail(ErrorKind::precision, "numeric", "no Euler-Maclaurin cutoffs reach 10^-" + std::to_string(target_digits));
}

const BigReal& bernoulli_over_factorial(unsigned j, mpfr_prec_t bits) {
  return bernoulli_factorial_cache().get(j, bits);
}

BigComplex zeta(const BigComplex& s, const PrecisionContext& ctx, const ZetaOptions& options) {
  const mpfr_prec_t bits = ctx.bits();
  BigComplex offset = s;
  offset.re() -= BigReal(1, s.precision());
  if (abs(offset).log10_abs() < -static_cast<double>(ctx.digits())) {
    fail(ErrorKind::pole, "numeric", "zeta evaluated at its pole s = 1");
  }
  const auto plan = plan_euler_maclaurin(s.re().to_double(), s.im().to_double(), ctx.working_digits(), options);
  const mpfr_prec_t inner = bits + kInternalBits;
  return rounded(euler_maclaurin(rounded(s, inner), plan, inner), bits);
}

BigReal zeta_int(long j, const PrecisionContext& ctx) {
  if (j < 2) fail(ErrorKind::domain, "numeric", "zeta_int requires j >= 2, got " + std::to_string(j));
  const mpfr_prec_t bits = ctx.bits();
  return zeta_int_memo().get(j, bits, [&] {
    const mpfr_prec_t inner = bits + kInternalBits;
    if (j % 2 == 0) {
      // (2 pi)^j |B_j| / (2 j!)
      BigReal two_pi = const_pi(inner) * 2L;
      BigReal value = pow(two_pi, j);
      value *= abs(BigReal(mpq_class(bernoulli(static_cast<unsigned>(j))), inner));
      value /= BigReal(mpz_class(factorial(static_cast<unsigned long>(j)) * 2), inner);
      return value.with_precision(bits);
    }
    const auto plan = plan_euler_maclaurin(static_cast<double>(j), 0.0, ctx.working_digits());
    BigComplex s{BigReal(j, inner)};
    return euler_maclaurin(s, plan, inner).re().with_precision(bits);
  });
}

BigComplex log_gamma(const BigComplex& s, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(s)) fail(ErrorKind::pole, "numeric", "log_gamma pole at non-positive integer");
  const int digits = ctx.working_digits();
  const mpfr_prec_t bits = ctx.bits();
  const mpfr_prec_t inner = bits + kInternalBits;

  // Shift so the Stirling series reaches 10^-digits: its smallest term is
  // about exp(-2 pi |z|).
  const double sr = s.re().to_double();
  const double si = s.im().to_double();
  const double z_min = (digits + 3) * kLn10 / kTwoPi + 10.0;
  const long shift = std::max<long>(0, static_cast<long>(std::ceil(z_min - sr)));

  BigComplex z = rounded(s, inner);
  BigComplex shift_log(inner);
  if (shift > 0) {
    // log prod_{k<K}(s+k), with the 2 pi multiple fixed by summing the
    // double-precision arguments of each factor.
    BigComplex product = z;
    double arg_sum = std::atan2(si, sr);
    BigComplex factor = z;
    BigReal scratch(inner);
    for (long k = 1; k < shift; ++k) {
      mpfr_add_ui(factor.re().raw(), factor.re().raw(), 1, MPFR_RNDN);
      product.assign_product(product, factor, scratch);
      arg_sum += std::atan2(si, sr + static_cast<double>(k));
    }
    shift_log = log(product);
    const double turns = std::round((arg_sum - shift_log.im().to_double()) / kTwoPi);
    if (turns != 0.0) shift_log.im() += const_pi(inner) * static_cast<long>(2.0 * turns);
    z.re() += BigReal(shift, inner);
  }

  // (z - 1/2) log z - z + log(2 pi)/2 + sum B_{2k} / (2k (2k-1) z^{2k-1})
  const BigComplex log_z = log(z);
  BigComplex result = z;
  result.re() -= BigReal(mpq_class(1, 2), inner);
  result *= log_z;
  result -= z;
  result.re() += log(const_pi(inner) * 2L) / 2L;

  const BigComplex w = reciprocal(z);
  const BigComplex w_sq = w * w;
  BigComplex power = w;
  const double threshold = -static_cast<double>(digits) - 3.0;
  bool converged = false;
  for (unsigned k = 1; k < 100000; ++k) {
    BigReal coeff(mpq_class(bernoulli(2 * k)) / mpq_class(2 * k * (2 * k - 1)), inner);
    BigComplex term = power * coeff;
    result += term;
    if (abs(term).log10_abs() < threshold) {
      converged = true;
      break;
    }
    power *= w_sq;
  }
  if (!converged) fail(ErrorKind::precision, "numeric", "Stirling series did not converge");
  result -= shift_log;
  return rounded(result, bits);
}

BigComplex LogXiParts::total(const BigReal& log_two) const {
  BigComplex out = residual + gamma_pi;
  out.re() += log_two;
  return out;
}

LogXiParts log_xi_parts(const BigComplex& s, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  BigComplex s_minus_one = s;
  s_minus_one.re() -= BigReal(1, bits);
  BigComplex half_s = s / BigReal(2, bits);
  BigComplex one_plus_half = half_s;
  one_plus_half.re() += BigReal(1, bits);

  LogXiParts parts{log(s_minus_one * zeta(s, ctx)), log_gamma(one_plus_half, ctx)};
  parts.gamma_pi -= half_s * log(const_pi(bits));
  return parts;
}

BigComplex xi(const BigComplex& s, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  BigComplex s_minus_one = s;
  s_minus_one.re() -= BigReal(1, bits);
  if (abs(s_minus_one).log10_abs() < -static_cast<double>(ctx.digits())) {
    return BigComplex(BigReal(1, bits));  // (s-1) zeta(s) -> 1 and 2 Gamma(3/2)/sqrt(pi) = 1
  }
  BigComplex half_s = s / BigReal(2, bits);
  BigComplex one_plus_half = half_s;
  one_plus_half.re() += BigReal(1, bits);
  BigComplex factor = exp(log_gamma(one_plus_half, ctx) - half_s * log(const_pi(bits)));
  return s_minus_one * zeta(s, ctx) * factor * BigReal(2, bits);
}

}  // namespace li
