#ifndef VOP_POLY_HPP
#define VOP_POLY_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "vop/rational.hpp"

namespace vop {

/// Dense univariate polynomial over Rational.
///
/// Coefficients are stored ascending by degree with no trailing zeros; the
/// zero polynomial is the empty vector and reports the sentinel degree
/// kZeroDegree.  The variable name (x, n, H, G, ...) is context supplied at
/// print time.
class Poly {
public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(const Rational& c) { if (!c.is_zero()) coeffs_ = {c}; }
  Poly(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }

  static Poly from_coeffs(std::vector<Rational> cs);
  static Poly monomial(int degree, const Rational& coeff = Rational(1));
  static Poly variable() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

  /// Coefficient of x^k; zero beyond the stored degree.
  const Rational& coeff(int k) const;
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Exact division; throws InexactDivision when the remainder is nonzero.
  Poly divide_exact(const Poly& divisor) const;

  Rational operator()(const Rational& x) const;  // Horner evaluation
  Poly derivative() const;
  Poly pow(unsigned e) const;

  /// Human-readable form, descending powers, e.g. "x^2 - 3x + 1".
  std::string str(std::string_view var = "x") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// p(x + s) by binomial expansion.
Poly taylor_shift(const Poly& p, const Rational& s);

/// j-th forward difference: (Δp)(x) = p(x+1) - p(x), iterated.
Poly forward_diff(const Poly& p, unsigned j = 1);

/// Falling factorial (x)_n = x(x-1)...(x-n+1), expanded in the monomial basis.
Poly falling_factorial_poly(unsigned n);

}  // namespace vop

#endif
