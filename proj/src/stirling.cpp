#include "vop/stirling.hpp"

#include <mutex>

namespace vop {

StirlingTable::StirlingTable(int size) : size_(size) {
  if (size < 0) throw InvalidSpec("stirling table size must be nonnegative");
  s1_.resize(static_cast<size_t>(size) + 1);
  s2_.resize(static_cast<size_t>(size) + 1);
  for (int n = 0; n <= size; ++n) {
    s1_[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, Rational(0));
    s2_[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, Rational(0));
  }
  s1_[0][0] = Rational(1);
  s2_[0][0] = Rational(1);
  for (int n = 0; n < size; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      Rational a = (k > 0) ? s1_[static_cast<size_t>(n)][static_cast<size_t>(k - 1)] : Rational(0);
      Rational b = (k <= n) ? s1_[static_cast<size_t>(n)][static_cast<size_t>(k)] : Rational(0);
      s1_[static_cast<size_t>(n) + 1][static_cast<size_t>(k)] = a - Rational(n) * b;
      Rational c = (k > 0) ? s2_[static_cast<size_t>(n)][static_cast<size_t>(k - 1)] : Rational(0);
      Rational d = (k <= n) ? s2_[static_cast<size_t>(n)][static_cast<size_t>(k)] : Rational(0);
      s2_[static_cast<size_t>(n) + 1][static_cast<size_t>(k)] = c + Rational(k) * d;
    }
  }
}

const Rational& StirlingTable::at(const std::vector<std::vector<Rational>>& t, int n, int k) const {
  static const Rational zero(0);
  if (n < 0 || n > size_)
    throw TableTooSmall("stirling table of size " + std::to_string(size_) +
                        " queried at n = " + std::to_string(n));
  if (k < 0 || k > n) return zero;
  return t[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

std::shared_ptr<const StirlingTable> shared_stirling(int min_size) {
  static std::mutex mu;
  static std::shared_ptr<const StirlingTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache || cache->size() < min_size) {
    int grown = cache ? cache->size() : 32;
    while (grown < min_size) grown *= 2;
    cache = std::make_shared<const StirlingTable>(grown);
  }
  return cache;
}

Poly to_basis(const Poly& coeffs, BasisTag from, BasisTag to, const StirlingTable& table) {
  if (from == to) return coeffs;
  const int deg = coeffs.degree();
  if (deg > table.size())
    throw TableTooSmall("basis conversion needs a stirling table of size >= " +
                        std::to_string(deg));
  if (coeffs.is_zero()) return coeffs;
  std::vector<Rational> out(static_cast<size_t>(deg) + 1, Rational(0));
  for (int n = 0; n <= deg; ++n) {
    const Rational& c = coeffs.coeff(n);
    if (c.is_zero()) continue;
    for (int k = 0; k <= n; ++k) {
      const Rational& t = (from == BasisTag::FallingFactorial) ? table.s1(n, k) : table.s2(n, k);
      if (!t.is_zero()) out[static_cast<size_t>(k)] += c * t;
    }
  }
  return Poly::from_coeffs(std::move(out));
}

}  // namespace vop
