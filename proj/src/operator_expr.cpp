#include "vop/operator_expr.hpp"

#include <sstream>

namespace vop {

std::string to_string(Realization r) {
  return r == Realization::Differential ? "differential" : "shift";
}

OperatorExpr OperatorExpr::zero(Realization r) {
  OperatorExpr e;
  e.realization_ = r;
  return e;
}

OperatorExpr OperatorExpr::identity(Realization r) {
  return term(r, 0, Poly{Rational(1)});
}

OperatorExpr OperatorExpr::term(Realization r, int order, Poly coeff) {
  if (r == Realization::Differential && order < 0)
    throw InvalidSpec("differential operators have nonnegative orders");
  OperatorExpr e;
  e.realization_ = r;
  if (!coeff.is_zero()) e.terms_.emplace(order, std::move(coeff));
  return e;
}

OperatorExpr OperatorExpr::x_mult(Realization r) {
  return term(r, 0, Poly::variable());
}

OperatorExpr OperatorExpr::delta() {
  return shift(1) - identity(Realization::Shift);
}

OperatorExpr OperatorExpr::nabla() {
  return shift(-1) - identity(Realization::Shift);
}

OperatorExpr OperatorExpr::euler(Realization r) {
  if (r == Realization::Differential)
    return term(r, 1, Poly::variable());
  // -x nabla = x - x D^{-1}
  return term(r, 0, Poly::variable()) - term(r, -1, Poly::variable());
}

OperatorExpr OperatorExpr::weyl_y(Realization r) {
  if (r == Realization::Differential) return x_mult(r);
  return term(r, -1, Poly::variable());  // g = x D^{-1} = x_mult - euler
}

OperatorExpr OperatorExpr::weyl_z(Realization r) {
  return r == Realization::Differential ? derivative() : delta();
}

void OperatorExpr::add_term(int order, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(order);
  if (it == terms_.end()) {
    terms_.emplace(order, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void OperatorExpr::check_same(const OperatorExpr& other) const {
  if (realization_ != other.realization_)
    throw RealizationMismatch("cannot combine " + to_string(realization_) +
                              " and " + to_string(other.realization_) + " operators");
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr e = *this;
  for (auto& [k, c] : e.terms_) c = -c;
  return e;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

OperatorExpr operator*(const Rational& s, const OperatorExpr& a) {
  OperatorExpr e = OperatorExpr::zero(a.realization_);
  if (s.is_zero()) return e;
  for (const auto& [k, c] : a.terms_) e.terms_.emplace(k, s * c);
  return e;
}

Poly OperatorExpr::apply(const Poly& p) const {
  Poly out;
  if (realization_ == Realization::Differential) {
    // derivative ladder p, p', p'', ... reused across terms
    std::vector<Poly> ders{p};
    for (const auto& [k, c] : terms_) {
      while (static_cast<int>(ders.size()) <= k) ders.push_back(ders.back().derivative());
      out += c * ders[static_cast<size_t>(k)];
    }
  } else {
    for (const auto& [s, c] : terms_) out += c * taylor_shift(p, Rational(s));
  }
  return out;
}

OperatorExpr OperatorExpr::compose(const OperatorExpr& other) const {
  check_same(other);
  OperatorExpr out = zero(realization_);
  if (realization_ == Realization::Shift) {
    // (a D^s)(b D^t) = a(x) b(x+s) D^{s+t}
    for (const auto& [s, a] : terms_)
      for (const auto& [t, b] : other.terms_)
        out.add_term(s + t, a * taylor_shift(b, Rational(s)));
    return out;
  }
  // d^k ∘ b(x) = sum_m C(k,m) b^(m)(x) d^{k-m}
  for (const auto& [k, a] : terms_) {
    for (const auto& [m, b] : other.terms_) {
      Poly der = b;
      for (int i = 0; i <= k && !der.is_zero(); ++i) {
        out.add_term(k - i + m,
                     a * (binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)) * der));
        der = der.derivative();
      }
    }
  }
  return out;
}

OperatorExpr OperatorExpr::pow(unsigned e) const {
  OperatorExpr out = identity(realization_);
  OperatorExpr base = *this;
  while (e > 0) {
    if (e & 1u) out = out.compose(base);
    base = base.compose(base);
    e >>= 1u;
  }
  return out;
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* sym = realization_ == Realization::Differential ? "d" : "D";
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (k != 0) os << "*" << sym << "^" << k;
    first = false;
  }
  return os.str();
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) {
  return a.compose(b) - b.compose(a);
}

OperatorExpr operator_poly(const Poly& p, const OperatorExpr& a) {
  OperatorExpr out = OperatorExpr::zero(a.realization());
  for (int k = p.degree(); k >= 0; --k) {
    out = out.compose(a);
    if (!p.coeff(k).is_zero())
      out += p.coeff(k) * OperatorExpr::identity(a.realization());
  }
  return out;
}

std::pair<OperatorExpr, AdSeriesReport> ad_exp(const OperatorExpr& gen,
                                               const OperatorExpr& a, int cap) {
  if (cap < 1) throw InvalidSpec("ad series cap must be at least 1");
  OperatorExpr sum = a;
  OperatorExpr term = a;  // ad^j(A)/j!
  for (int j = 1; j <= cap; ++j) {
    term = Rational(1, j) * commutator(gen, term);
    if (term.is_zero()) {
      AdSeriesReport rep;
      rep.steps = j;
      rep.cap = cap;
      rep.vanished = true;
      return {sum, rep};
    }
    sum += term;
  }
  throw NilpotencyCapExceeded("ad series did not vanish within " + std::to_string(cap) +
                              " steps; generator is not locally nilpotent here");
}

Poly exp_apply(const OperatorExpr& a, const Poly& p) {
  Poly sum = p;
  Poly term = p;
  int last_deg = p.degree();
  for (long j = 1; !term.is_zero(); ++j) {
    term = Rational(1, j) * a.apply(term);
    if (term.is_zero()) break;
    if (term.degree() >= last_deg)
      throw NotDegreeLowering("series term of degree " + std::to_string(term.degree()) +
                              " does not descend below " + std::to_string(last_deg));
    last_deg = term.degree();
    sum += term;
  }
  return sum;
}

bool conjugation_check(const OperatorExpr& gen, const OperatorExpr& a, int bound, int cap) {
  const OperatorExpr sigma_a = ad_exp(gen, a, cap).first;
  for (int m = 0; m <= bound; ++m) {
    const Poly xm = Poly::monomial(m);
    const Poly lhs = sigma_a.apply(exp_apply(gen, xm));
    const Poly rhs = exp_apply(gen, a.apply(xm));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace vop
