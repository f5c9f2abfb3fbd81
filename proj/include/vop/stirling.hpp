#ifndef VOP_STIRLING_HPP
#define VOP_STIRLING_HPP

#include <memory>
#include <vector>

#include "vop/poly.hpp"

namespace vop {

/// Which basis a coefficient vector is read in.
enum class BasisTag { Monomial, FallingFactorial };

/// Triangular tables of Stirling numbers up to n = size().
///
/// s1 holds the signed numbers of the first kind, defined by
/// (x)_n = sum_k s1(n,k) x^k; s2 the second kind, x^n = sum_k s2(n,k) (x)_k.
/// The two triangles are mutually inverse as lower-triangular maps.
class StirlingTable {
public:
  explicit StirlingTable(int size);

  int size() const { return size_; }
  const Rational& s1(int n, int k) const { return at(s1_, n, k); }
  const Rational& s2(int n, int k) const { return at(s2_, n, k); }

private:
  const Rational& at(const std::vector<std::vector<Rational>>& t, int n, int k) const;
  int size_;
  std::vector<std::vector<Rational>> s1_, s2_;
};

/// Session-wide immutable table cache, grown on demand under a lock.
std::shared_ptr<const StirlingTable> shared_stirling(int min_size);

/// Reinterprets a coefficient vector between bases.  The input polynomial is
/// read as coefficients in `from`; the result holds the coefficients of the
/// same element of F[x] in `to`.  Round trips are exact identities.
Poly to_basis(const Poly& coeffs, BasisTag from, BasisTag to, const StirlingTable& table);

}  // namespace vop

#endif
