#include "vop/mellin.hpp"

namespace vop {

MellinMap::MellinMap(int max_degree)
    : table_(shared_stirling(max_degree)), max_degree_(max_degree) {
  if (max_degree < 0) throw InvalidSpec("mellin map needs a nonnegative max degree");
}

Poly MellinMap::operator()(const Poly& p) const {
  if (p.degree() > max_degree_)
    throw TableTooSmall("mellin map of degree " + std::to_string(max_degree_) +
                        " applied to degree " + std::to_string(p.degree()));
  return to_basis(p, BasisTag::FallingFactorial, BasisTag::Monomial, *table_);
}

Poly MellinMap::inverse(const Poly& p) const {
  if (p.degree() > max_degree_)
    throw TableTooSmall("mellin inverse of degree " + std::to_string(max_degree_) +
                        " applied to degree " + std::to_string(p.degree()));
  return to_basis(p, BasisTag::Monomial, BasisTag::FallingFactorial, *table_);
}

MellinCorrespondence map_family(const Family& cont, int jobs) {
  if (cont.spec.realization != FamilyRealization::Continuous)
    throw InvalidSpec("map_family expects a continuous family");
  FamilySpec disc_spec = cont.spec;
  disc_spec.realization = FamilyRealization::Discrete;
  MellinCorrespondence out{generate(disc_spec, jobs), {}};
  const MellinMap mellin(cont.max_n());
  out.matches.resize(static_cast<size_t>(cont.max_n()) + 1, false);
  int first_bad = -1;
  for (int n = 0; n <= cont.max_n(); ++n) {
    out.matches[static_cast<size_t>(n)] =
        mellin(cont.polys[static_cast<size_t>(n)]) ==
        out.discrete.polys[static_cast<size_t>(n)];
    if (!out.matches[static_cast<size_t>(n)] && first_bad < 0) first_bad = n;
  }
  if (first_bad >= 0)
    throw CorrespondenceMismatch("transform image differs from the discrete family at n = " +
                                 std::to_string(first_bad));
  return out;
}

bool intertwine_check(const Poly& R, int bound) {
  if (R.is_zero()) throw InvalidSpec("R must not be identically zero");
  const OperatorExpr Hc = OperatorExpr::euler(Realization::Differential);
  const OperatorExpr Hd = OperatorExpr::euler(Realization::Shift);
  const OperatorExpr Gc = operator_poly(R, Hc).compose(OperatorExpr::derivative());
  const OperatorExpr Gd = operator_poly(R, Hd).compose(OperatorExpr::delta());
  const MellinMap mellin(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    const Poly tn = Poly::monomial(n);
    if (mellin(Gc.apply(tn)) != Gd.apply(mellin(tn))) return false;
  }
  return true;
}

}  // namespace vop
