#include "vop/rational.hpp"

#include <ostream>

namespace vop {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw InvalidSpec("empty rational literal");
  std::string t(s);
  mpq_class v;
  if (v.set_str(t, 10) != 0)
    throw InvalidSpec("malformed rational literal: '" + t + "'");
  if (v.get_den() == 0) throw DivisionByZero("rational literal with zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw InexactDivision("rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  return v_.get_str();  // gmp emits "p/q", or "p" when q == 1
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& base, unsigned exp) {
  Rational out(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u) out *= b;
    b *= b;
    exp >>= 1u;
  }
  return out;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

}  // namespace vop
