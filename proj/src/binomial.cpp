#include "optmech/binomial.hpp"

#include <stdexcept>

namespace optmech {

mpz_class binom(long n, long k) {
  if (n < 0) throw std::domain_error("binom: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

static void check_prob(const Rational& p, const char* where) {
  if (p.sign() < 0 || p > Rational(1))
    throw std::domain_error(std::string(where) + ": p outside [0, 1]");
}

Rational binom_pmf(long m, const Rational& p, long k) {
  if (m < 0) throw std::domain_error("binom_pmf: m must be nonnegative");
  check_prob(p, "binom_pmf");
  if (k < 0 || k > m) return Rational(0);
  Rational coeff(binom(m, k), mpz_class(1));
  return coeff * p.pow(k) * (Rational(1) - p).pow(m - k);
}

Rational binom_cdf(long m, const Rational& p, long k) {
  if (m < 0) throw std::domain_error("binom_cdf: m must be nonnegative");
  check_prob(p, "binom_cdf");
  if (k < 0) return Rational(0);
  if (k >= m) return Rational(1);
  Rational s(0);
  for (long i = 0; i <= k; ++i) s += binom_pmf(m, p, i);
  return s;
}

Rational binom_cdf_strict(long m, const Rational& p, long k) {
  return binom_cdf(m, p, k - 1);
}

Rational partition_sum(long n, const Rational& p, const Rational& q) {
  if (n < 1) throw std::domain_error("partition_sum: n must be >= 1");
  if (p.sign() < 0 || q.sign() < 0)
    throw std::domain_error("partition_sum: p, q must be nonnegative");
  if (q.is_zero()) return p.pow(n - 1);
  return ((p + q).pow(n) - p.pow(n)) / (Rational(n) * q);
}

}  // namespace optmech
