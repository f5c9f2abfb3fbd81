#ifndef VOP_OPERATOR_EXPR_HPP
#define VOP_OPERATOR_EXPR_HPP

#include <map>
#include <string>
#include <utility>

#include "vop/poly.hpp"

namespace vop {

/// The two Weyl-algebra realizations the engine works in.
enum class Realization { Differential, Shift };

std::string to_string(Realization r);

/// Normal-form operator acting on F[x].
///
/// Differential realization: sum_k a_k(x) d^k, orders k >= 0.
/// Shift realization: sum_s c_s(x) D^s with D^s f(x) = f(x + s), s in Z.
/// No zero coefficient polynomial is ever stored, so equality of normal
/// forms is equality of term maps.
class OperatorExpr {
public:
  OperatorExpr() : realization_(Realization::Differential) {}

  static OperatorExpr zero(Realization r);
  static OperatorExpr identity(Realization r);
  static OperatorExpr term(Realization r, int order, Poly coeff);
  /// Multiplication by x (order-0 term with coefficient x).
  static OperatorExpr x_mult(Realization r);
  static OperatorExpr derivative() { return term(Realization::Differential, 1, Poly{Rational(1)}); }
  static OperatorExpr shift(int s) { return term(Realization::Shift, s, Poly{Rational(1)}); }
  static OperatorExpr delta();   // D - 1
  static OperatorExpr nabla();   // D^{-1} - 1
  /// Euler-type operator H with H x^n = n x^n resp. H (x)_n = n (x)_n:
  /// x d/dx in the differential realization, -x nabla in the shift one.
  static OperatorExpr euler(Realization r);
  /// The Y of the Weyl pair [Z, Y] = 1: multiplication by x, or g = x D^{-1}.
  static OperatorExpr weyl_y(Realization r);
  /// The Z of the Weyl pair: d/dx, or Delta.
  static OperatorExpr weyl_z(Realization r);

  Realization realization() const { return realization_; }
  const std::map<int, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_order() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  int min_order() const { return terms_.empty() ? 0 : terms_.begin()->first; }

  OperatorExpr operator-() const;
  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(const Rational& s, const OperatorExpr& a);
  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) = default;

  /// Exact application to a polynomial in monomial coefficients.
  Poly apply(const Poly& p) const;

  /// Normal form of this ∘ other; same realization required.
  OperatorExpr compose(const OperatorExpr& other) const;
  OperatorExpr pow(unsigned e) const;

  std::string str() const;

private:
  void add_term(int order, const Poly& coeff);
  void check_same(const OperatorExpr& other) const;

  Realization realization_;
  std::map<int, Poly> terms_;
};

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);

/// p(A) as an operator, Horner composed.
OperatorExpr operator_poly(const Poly& p, const OperatorExpr& a);

struct AdSeriesReport {
  int steps = 0;     // smallest j with ad^j identically zero
  int cap = 0;
  bool vanished = false;
};

/// sigma(A) = e^{ad_gen}(A) = sum_j ad_gen^j(A) / j!, summed until the
/// iterated commutator vanishes identically.  Throws NilpotencyCapExceeded
/// when no vanishing occurs within `cap` steps.
std::pair<OperatorExpr, AdSeriesReport> ad_exp(const OperatorExpr& gen,
                                               const OperatorExpr& a, int cap);

/// e^A p = sum_j A^j p / j!.  A must strictly lower degree; this is checked
/// per series term, not trusted.  Preserves the leading coefficient.
Poly exp_apply(const OperatorExpr& a, const Poly& p);

/// Checks e^{ad_gen}(A) e^{gen} p = e^{gen} (A p) on monomials up to `bound`.
bool conjugation_check(const OperatorExpr& gen, const OperatorExpr& a, int bound,
                       int cap = 64);

}  // namespace vop

#endif
