#ifndef VOP_FAMILY_HPP
#define VOP_FAMILY_HPP

#include <optional>
#include <string>
#include <vector>

#include "vop/operator_expr.hpp"
#include "vop/stirling.hpp"

namespace vop {

enum class FamilyRealization { Continuous, Discrete };

std::string to_string(FamilyRealization r);
Realization operator_realization(FamilyRealization r);

/// Defining data of one family: the lowering-element polynomial R (in H),
/// the automorphism generator polynomial q (in G, zero constant term), and
/// the top index to generate.
struct FamilySpec {
  FamilyRealization realization = FamilyRealization::Continuous;
  Poly R;
  Poly q;
  int max_n = 0;
  std::string name;

  int r_degree() const { return R.degree(); }   // d
  int q_degree() const { return q.degree(); }   // l
  /// Throws InvalidSpec unless R != 0, deg q >= 1, q(0) = 0, max_n >= 0.
  void validate() const;
  /// Default ad-series cap, comfortably above the proven d+2 bound.
  int nilpotency_cap() const;
};

/// The operators attached to a spec: G = R(H) Z, H, L = H + q'(G) G and the
/// raising operator M = sigma(x), plus q(G) itself for generation.
struct FamilyOperators {
  OperatorExpr G, H, L, M, qG;
};

FamilyOperators build_operators(const FamilySpec& spec);

/// Generated family: monic P_0..P_N in the monomial basis together with the
/// attached operators.
struct Family {
  FamilySpec spec;
  std::vector<Poly> polys;
  OperatorExpr G, H, L, M;

  int max_n() const { return static_cast<int>(polys.size()) - 1; }
  /// Coefficients of P_n in the falling-factorial basis (discrete view).
  Poly falling_factorial_view(int n) const;
};

/// P_n = e^{q(G)} x^n (continuous) or e^{q(G)} (x)_n (discrete).
/// `jobs` > 1 parallelizes over n.
Family generate(const FamilySpec& spec, int jobs = 1);

struct CheckResult {
  bool passed = true;
  std::optional<int> first_failure;
  long indices_checked = 0;
};

struct VerificationReport {
  CheckResult eigen, lowering, raising, rodrigues;
  bool passed() const {
    return eigen.passed && lowering.passed && raising.passed && rodrigues.passed;
  }
};

/// L P_n = n P_n for all n <= N.
CheckResult check_eigen(const Family& fam, int jobs = 1);
/// G P_n = n R(n-1) P_{n-1} and M P_n = P_{n+1}; both halves reported.
struct LadderResult {
  CheckResult lowering, raising;
};
LadderResult check_ladder(const Family& fam, int jobs = 1);
/// M^n 1; throws RodriguesMismatch unless it equals P_n.
Poly rodrigues(const Family& fam, int n);
CheckResult check_rodrigues(const Family& fam, int limit = -1);

VerificationReport verify_family(const Family& fam, int jobs = 1);

}  // namespace vop

#endif
