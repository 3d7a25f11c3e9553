#pragma once

#include <gmpxx.h>

namespace li {

/// Exact Bernoulli number B_k with B_1 = -1/2. Memoized and safe to call from
/// several threads.
mpq_class bernoulli(unsigned k);

/// Exact C(n, k); zero when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

mpz_class factorial(unsigned long n);

}  // namespace li
