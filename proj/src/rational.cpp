#include "optmech/rational.hpp"

#include <ostream>

namespace optmech {

Rational Rational::from_string(std::string_view s) {
  auto parse_int = [](std::string_view t) -> mpz_class {
    if (t.empty()) throw std::invalid_argument("Rational: empty integer");
    // mpz_class accepts leading whitespace and other bases; be stricter.
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) throw std::invalid_argument("Rational: bad integer");
    for (std::size_t i = start; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9')
        throw std::invalid_argument("Rational: bad character in '" +
                                    std::string(t) + "'");
    }
    return mpz_class(std::string(t), 10);
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(s), mpz_class(1));
  }
  mpz_class num = parse_int(s.substr(0, slash));
  mpz_class den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(num, den);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long ue = invert ? static_cast<unsigned long>(-(e + 1)) + 1
                            : static_cast<unsigned long>(e);
  if (invert && is_zero())
    throw std::domain_error("Rational: 0 to a negative power");
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
  return invert ? Rational(d, n) : Rational(n, d);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace optmech
