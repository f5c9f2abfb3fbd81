#ifndef VOP_MELLIN_HPP
#define VOP_MELLIN_HPP

#include <vector>

#include "vop/family.hpp"

namespace vop {

/// Exact linear map t^n -> (x)_n between the continuous and discrete
/// polynomial worlds, realized purely algebraically through the signed
/// Stirling numbers of the first kind.  (Analytically it is a normalized
/// Mellin-type integral transform; no integral is ever evaluated here.)
class MellinMap {
public:
  explicit MellinMap(int max_degree);

  int max_degree() const { return max_degree_; }

  /// Image of p: the monomial coefficient vector of p, reinterpreted as
  /// falling-factorial coefficients and expanded back to monomial form.
  Poly operator()(const Poly& p) const;

  /// Inverse map (x)_n -> t^n.
  Poly inverse(const Poly& p) const;

private:
  std::shared_ptr<const StirlingTable> table_;
  int max_degree_;
};

struct MellinCorrespondence {
  Family discrete;
  std::vector<bool> matches;  // per n: M*(P_n^c) == P_n^d
};

/// Regenerates the discrete family from the same (R, q) and checks the
/// correspondence M*(P_n^c) = P_n^d for every n; throws
/// CorrespondenceMismatch when any index disagrees.
MellinCorrespondence map_family(const Family& cont, int jobs = 1);

/// M* ∘ G^c = G^d ∘ M* on monomials t^n, n <= bound, with G^c = R(H) d/dt
/// and G^d = R(H) Delta.
bool intertwine_check(const Poly& R, int bound);

}  // namespace vop

#endif
