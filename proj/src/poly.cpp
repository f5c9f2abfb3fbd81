#include "vop/poly.hpp"

#include <sstream>

namespace vop {

namespace {
const Rational kZero(0);
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::from_coeffs(std::vector<Rational> cs) {
  Poly p;
  p.coeffs_ = std::move(cs);
  p.trim();
  return p;
}

Poly Poly::monomial(int degree, const Rational& coeff) {
  Poly p;
  if (degree < 0 || coeff.is_zero()) return p;
  p.coeffs_.assign(static_cast<size_t>(degree) + 1, kZero);
  p.coeffs_.back() = coeff;
  return p;
}

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly::from_coeffs(std::move(out));
}

Poly operator*(const Rational& s, const Poly& p) {
  if (s.is_zero()) return Poly();
  Poly out = p;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return Poly();
  if (degree() < divisor.degree())
    throw InexactDivision("dividend degree below divisor degree");
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quot(static_cast<size_t>(degree() - divisor.degree()) + 1, kZero);
  const Rational lead = divisor.leading();
  for (int k = degree() - divisor.degree(); k >= 0; --k) {
    Rational c = rem[static_cast<size_t>(k + divisor.degree())] / lead;
    quot[static_cast<size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= divisor.degree(); ++i)
      rem[static_cast<size_t>(k + i)] -= c * divisor.coeff(i);
  }
  for (const auto& c : rem)
    if (!c.is_zero()) throw InexactDivision("polynomial division leaves a remainder");
  return Poly::from_coeffs(std::move(quot));
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> out(coeffs_.size() - 1, kZero);
  for (size_t k = 1; k < coeffs_.size(); ++k)
    out[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
  return Poly::from_coeffs(std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly out{Rational(1)};
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c.is_zero()) continue;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (k == 0 || !a.is_one()) os << a.str();
    if (k > 0) {
      if (!a.is_one()) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Poly taylor_shift(const Poly& p, const Rational& s) {
  if (p.is_zero() || s.is_zero()) return p;
  const int n = p.degree();
  // powers of s, then a running binomial row: (x+s)^k = sum C(k,j) s^(k-j) x^j
  std::vector<Rational> spow(static_cast<size_t>(n) + 1, Rational(1));
  for (int i = 1; i <= n; ++i) spow[static_cast<size_t>(i)] = spow[static_cast<size_t>(i - 1)] * s;
  std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    const Rational& a = p.coeff(k);
    if (a.is_zero()) continue;
    for (int j = 0; j <= k; ++j)
      out[static_cast<size_t>(j)] +=
          a * binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) *
          spow[static_cast<size_t>(k - j)];
  }
  return Poly::from_coeffs(std::move(out));
}

Poly forward_diff(const Poly& p, unsigned j) {
  Poly cur = p;
  for (unsigned i = 0; i < j && !cur.is_zero(); ++i)
    cur = taylor_shift(cur, Rational(1)) - cur;
  return cur;
}

Poly falling_factorial_poly(unsigned n) {
  Poly out{Rational(1)};
  for (unsigned k = 0; k < n; ++k)
    out = out * Poly{Rational(-static_cast<long>(k)), Rational(1)};
  return out;
}

}  // namespace vop
