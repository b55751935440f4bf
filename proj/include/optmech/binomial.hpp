#pragma once

#include <gmpxx.h>

#include "optmech/rational.hpp"

namespace optmech {

// C(n, k); 0 when k < 0 or k > n.
mpz_class binom(long n, long k);

// Pr[B(m, p) = k] = C(m,k) p^k (1-p)^{m-k}; 0 outside [0, m].
// Throws std::domain_error unless 0 <= p <= 1.
Rational binom_pmf(long m, const Rational& p, long k);

// Pr[B(m, p) <= k].
Rational binom_cdf(long m, const Rational& p, long k);

// Pr[B(m, p) < k].
Rational binom_cdf_strict(long m, const Rational& p, long k);

// sum_{j=1..n} (1/j) C(n-1, j-1) q^{j-1} p^{n-j}, evaluated through the
// closed form ((p+q)^n - p^n) / (n q) for q > 0 and its limit p^{n-1} at
// q = 0. Requires n >= 1 and p, q >= 0.
Rational partition_sum(long n, const Rational& p, const Rational& q);

}  // namespace optmech
