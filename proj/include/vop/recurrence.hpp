#ifndef VOP_RECURRENCE_HPP
#define VOP_RECURRENCE_HPP

#include <map>
#include <utility>
#include <vector>

#include "vop/family.hpp"

namespace vop {

/// Exact recurrence coefficients x P_n = P_{n+1} + sum_j gamma(j,n) P_{n-j},
/// tabulated per index.  Only nonzero entries are stored; entries beyond the
/// observed bandwidth are absent rather than zero.
struct RecurrenceTable {
  std::map<std::pair<int, int>, Rational> gamma;  // (j, n) -> value
  int max_offset = -1;                            // largest j present
  int n_max = -1;                                 // rows cover n = 0..n_max

  Rational value(int j, int n) const;
};

/// Reduces each x P_n against the monic graded family.  Exact; always
/// terminates because the family is a monic basis of F[x].  Rows are
/// independent, so `jobs` > 1 parallelizes over n.
RecurrenceTable extract(const Family& fam, int jobs = 1);

/// Fitted form: gamma_j as a polynomial in n per offset, the inferred
/// orthogonality order d (largest offset with a nonzero coefficient), and
/// the resulting bandwidth d + 2.
struct RecurrenceForm {
  std::vector<Poly> gamma_polys;  // index j = 0..d_inferred, polynomials in n
  int d_inferred = -1;
  int bandwidth = 1;
  std::pair<int, int> validated_range{0, -1};
};

/// Newton interpolation through all samples but the last `holdout`, then
/// verification on the held-out rows.  A holdout miss means the coefficients
/// are not polynomial in n and aborts with FitMismatch.
RecurrenceForm fit(const RecurrenceTable& table, int holdout = 3);

/// Returns d_inferred after asserting the bandwidth law: continuous term
/// count <= l(d+1)+1; discrete max offset <= ld+l-1 (d>0) resp. l (d=0).
int infer_d(const RecurrenceForm& form, const FamilySpec& spec);

/// gamma_{d}(n) != 0 for every integer n in [d, n_top].
bool van_iseghem_check(const RecurrenceForm& form, int n_top);

/// Same bandwidth law asserted straight on the exact table; usable when the
/// coefficient degrees are too high for the sampled range to fit.
int check_bandwidth_law(const RecurrenceTable& table, const FamilySpec& spec);

/// Table-level nonvanishing: gamma(max_offset, n) != 0 on its tabulated range.
bool van_iseghem_table_check(const RecurrenceTable& table);

/// Closed-form recurrence coefficients for q(G) = G, evaluated at index n;
/// the shift-operator products are normal ordered (each T^{-1} decrements
/// every index to its right).  Independent oracle against extract().
std::vector<std::pair<int, Rational>> closed_form_qG(const FamilySpec& spec, int n);

}  // namespace vop

#endif
