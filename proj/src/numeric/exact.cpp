#include "li/numeric/exact.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace li {

namespace {

// Even-index Bernoulli numbers B_0, B_2, B_4, ... computed from tangent
// numbers with integer arithmetic only (Brent & Harvey, 2011):
//   B_{2n} = (-1)^(n-1) 2n T_n / (4^n (4^n - 1)).
class BernoulliMemo {
 public:
  mpq_class even(unsigned half_index) {
    {
      std::shared_lock lock(mutex_);
      if (half_index < values_.size()) return values_[half_index];
    }
    std::unique_lock lock(mutex_);
    if (half_index >= values_.size()) extend(std::max<std::size_t>(half_index + 1, 2 * values_.size()));
    return values_[half_index];
  }

 private:
  void extend(std::size_t count) {
    const std::size_t n = count - 1;  // tangent numbers T_1..T_n
    std::vector<mpz_class> tangent(n + 1);
    if (n >= 1) tangent[1] = 1;
    for (std::size_t k = 2; k <= n; ++k) tangent[k] = tangent[k - 1] * static_cast<unsigned long>(k - 1);
    for (std::size_t k = 2; k <= n; ++k) {
      for (std::size_t j = k; j <= n; ++j) {
        tangent[j] = tangent[j - 1] * static_cast<unsigned long>(j - k) + tangent[j] * static_cast<unsigned long>(j - k + 2);
      }
    }
    std::vector<mpq_class> values(count);
    values[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      mpz_class four_pow;
      mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, i);
      mpq_class b(tangent[i] * static_cast<unsigned long>(2 * i), four_pow * (four_pow - 1));
      b.canonicalize();
      if (i % 2 == 0) b = -b;
      values[i] = b;
    }
    values_ = std::move(values);
  }

  std::shared_mutex mutex_;
  std::vector<mpq_class> values_{mpq_class(1)};
};

BernoulliMemo& bernoulli_memo() {
  static BernoulliMemo memo;
  return memo;
}

}  // namespace

mpq_class bernoulli(unsigned k) {
  if (k == 1) return mpq_class(-1, 2);
  if (k % 2 == 1) return mpq_class(0);
  return bernoulli_memo().even(k / 2);
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace li
