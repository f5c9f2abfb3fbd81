#include "vop/family.hpp"

#include <algorithm>

#include "vop/parallel.hpp"

namespace vop {

using detail::parallel_for;

std::string to_string(FamilyRealization r) {
  return r == FamilyRealization::Continuous ? "continuous" : "discrete";
}

Realization operator_realization(FamilyRealization r) {
  return r == FamilyRealization::Continuous ? Realization::Differential
                                            : Realization::Shift;
}

void FamilySpec::validate() const {
  if (R.is_zero()) throw InvalidSpec("R must not be identically zero");
  if (q.degree() < 1) throw InvalidSpec("q must have degree at least 1");
  if (!q.coeff(0).is_zero()) throw InvalidSpec("q must have zero constant term");
  if (max_n < 0) throw InvalidSpec("max_n must be nonnegative");
}

int FamilySpec::nilpotency_cap() const {
  return q_degree() * (r_degree() + 2) + 4;
}

FamilyOperators build_operators(const FamilySpec& spec) {
  spec.validate();
  const Realization r = operator_realization(spec.realization);
  FamilyOperators ops;
  ops.H = OperatorExpr::euler(r);
  ops.G = operator_poly(spec.R, ops.H).compose(OperatorExpr::weyl_z(r));
  ops.qG = operator_poly(spec.q, ops.G);
  ops.L = ops.H + operator_poly(spec.q.derivative(), ops.G).compose(ops.G);
  // raising operator: sigma of the basis raiser Y (x continuously, g = x D^{-1}
  // discretely); sigma(x) raises only in the continuous realization, where Y = x
  ops.M = ad_exp(ops.qG, OperatorExpr::weyl_y(r), spec.nilpotency_cap()).first;
  return ops;
}

Poly Family::falling_factorial_view(int n) const {
  auto table = shared_stirling(max_n() + 1);
  return to_basis(polys.at(static_cast<size_t>(n)), BasisTag::Monomial,
                  BasisTag::FallingFactorial, *table);
}

Family generate(const FamilySpec& spec, int jobs) {
  FamilyOperators ops = build_operators(spec);
  Family fam;
  fam.spec = spec;
  fam.G = ops.G;
  fam.H = ops.H;
  fam.L = ops.L;
  fam.M = ops.M;
  fam.polys.assign(static_cast<size_t>(spec.max_n) + 1, Poly());
  const bool discrete = spec.realization == FamilyRealization::Discrete;
  parallel_for(spec.max_n + 1, jobs, [&](int n) {
    Poly basis = discrete ? falling_factorial_poly(static_cast<unsigned>(n))
                          : Poly::monomial(n);
    Poly p = exp_apply(ops.qG, basis);
    if (p.degree() != n || !p.leading().is_one())
      throw Error(ErrorKind::Internal, "MonicityViolation",
                  "generated P_" + std::to_string(n) + " is not monic of degree " +
                      std::to_string(n));
    fam.polys[static_cast<size_t>(n)] = std::move(p);
  });
  return fam;
}

CheckResult check_eigen(const Family& fam, int jobs) {
  CheckResult res;
  const int count = fam.max_n() + 1;
  std::vector<char> ok(static_cast<size_t>(count), 1);
  parallel_for(count, jobs, [&](int n) {
    ok[static_cast<size_t>(n)] =
        fam.L.apply(fam.polys[static_cast<size_t>(n)]) ==
        Rational(n) * fam.polys[static_cast<size_t>(n)];
  });
  res.indices_checked = count;
  for (int n = 0; n < count; ++n) {
    if (!ok[static_cast<size_t>(n)]) {
      res.passed = false;
      res.first_failure = n;
      break;
    }
  }
  return res;
}

LadderResult check_ladder(const Family& fam, int jobs) {
  LadderResult res;
  const int count = fam.max_n() + 1;
  std::vector<char> low(static_cast<size_t>(count), 1);
  std::vector<char> high(static_cast<size_t>(count), 1);
  parallel_for(count, jobs, [&](int n) {
    const Poly& pn = fam.polys[static_cast<size_t>(n)];
    Poly expected = (n == 0) ? Poly()
                             : (Rational(n) * fam.spec.R(Rational(n - 1))) *
                                   fam.polys[static_cast<size_t>(n - 1)];
    low[static_cast<size_t>(n)] = fam.G.apply(pn) == expected;
    if (n < fam.max_n())
      high[static_cast<size_t>(n)] =
          fam.M.apply(pn) == fam.polys[static_cast<size_t>(n) + 1];
  });
  res.lowering.indices_checked = count;
  res.raising.indices_checked = count > 0 ? count - 1 : 0;
  for (int n = 0; n < count; ++n) {
    if (!low[static_cast<size_t>(n)] && res.lowering.passed) {
      res.lowering.passed = false;
      res.lowering.first_failure = n;
    }
    if (n < fam.max_n() && !high[static_cast<size_t>(n)] && res.raising.passed) {
      res.raising.passed = false;
      res.raising.first_failure = n;
    }
  }
  return res;
}

Poly rodrigues(const Family& fam, int n) {
  if (n < 0 || n > fam.max_n()) throw InvalidSpec("rodrigues index out of range");
  Poly cur{Rational(1)};
  for (int k = 0; k < n; ++k) cur = fam.M.apply(cur);
  if (cur != fam.polys[static_cast<size_t>(n)])
    throw RodriguesMismatch("M^" + std::to_string(n) + " 1 differs from P_" + std::to_string(n));
  return cur;
}

CheckResult check_rodrigues(const Family& fam, int limit) {
  CheckResult res;
  const int top = (limit < 0) ? fam.max_n() : std::min(limit, fam.max_n());
  Poly cur{Rational(1)};
  for (int n = 0; n <= top; ++n) {
    ++res.indices_checked;
    if (cur != fam.polys[static_cast<size_t>(n)]) {
      res.passed = false;
      res.first_failure = n;
      break;
    }
    cur = fam.M.apply(cur);
  }
  return res;
}

VerificationReport verify_family(const Family& fam, int jobs) {
  VerificationReport rep;
  rep.eigen = check_eigen(fam, jobs);
  LadderResult lad = check_ladder(fam, jobs);
  rep.lowering = lad.lowering;
  rep.raising = lad.raising;
  rep.rodrigues = check_rodrigues(fam);
  return rep;
}

}  // namespace vop
