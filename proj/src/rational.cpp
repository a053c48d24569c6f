#include "qident/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace qident {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rational_from_string: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string rational_to_decimal(const Rational& r, int sig_digits) {
  mpf_class f(r, 256);
  std::ostringstream os;
  os.precision(sig_digits);
  os << f;
  return os.str();
}

BigInt int_pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw std::domain_error("rational_pow: 0 to a negative power");
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  BigInt num = int_pow(base.get_num(), e);
  BigInt den = int_pow(base.get_den(), e);
  return exp > 0 ? make_rational(num, den) : make_rational(den, num);
}

Rational inv_power(long q, unsigned long e) {
  if (q < 2) throw std::invalid_argument("inv_power: q must be >= 2");
  return make_rational(BigInt(1), int_pow(BigInt(q), e));
}

Rational pochhammer_at(const Rational& x, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer_at: negative subscript");
  Rational acc(1);
  Rational xp(1);
  for (int s = 1; s <= n; ++s) {
    xp *= x;
    acc *= Rational(1) - xp;
  }
  return acc;
}

BigInt binomial(const BigInt& n, unsigned long k) {
  BigInt num(1);
  BigInt den(1);
  for (unsigned long s = 0; s < k; ++s) {
    num *= n - static_cast<long>(s);
    den *= static_cast<long>(s + 1);
  }
  BigInt out = num / den;
  if (out * den != num) throw std::logic_error("binomial: non-exact division");
  return out;
}

}  // namespace qident
