#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vop/catalog.hpp"
#include "vop/recurrence.hpp"

using namespace vop;
using namespace vop::testutil;

namespace {

const Poly kQx = Poly{Rational(0), Rational(1)};

// Reference reconstruction: x P_n - P_{n+1} - sum_j gamma(j,n) P_{n-j} == 0.
bool reconstructs(const Family& fam, const RecurrenceTable& table) {
  const Poly x = Poly::variable();
  for (int n = 0; n < fam.max_n(); ++n) {
    Poly r = x * fam.polys[static_cast<size_t>(n)] - fam.polys[static_cast<size_t>(n) + 1];
    for (const auto& [key, value] : table.gamma)
      if (key.second == n) r -= value * fam.polys[static_cast<size_t>(n - key.first)];
    if (!r.is_zero()) return false;
  }
  return true;
}

std::vector<Poly> trimmed(std::vector<Poly> v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

void check_gamma_polys(const RecurrenceForm& form, const std::vector<Poly>& expected) {
  const auto want = trimmed(expected);
  REQUIRE(form.gamma_polys.size() == want.size());
  for (size_t j = 0; j < want.size(); ++j) CHECK(form.gamma_polys[j] == want[j]);
}

}  // namespace

TEST_CASE("hermite: x P_n = P_{n+1} + n P_{n-1}") {
  Family fam = generate(catalog::instantiate("hermite"));
  RecurrenceTable table = extract(fam);
  RecurrenceForm form = fit(table);
  check_gamma_polys(form, {Poly(), Poly::variable()});
  CHECK(form.d_inferred == 1);
  CHECK(form.bandwidth == 3);
  CHECK(infer_d(form, fam.spec) == 1);
  CHECK(van_iseghem_check(form, fam.max_n()));
  CHECK(reconstructs(fam, table));
}

TEST_CASE("gould_hopper l=3: single lower term gamma_2 = n(n-1)") {
  Family fam = generate(catalog::instantiate("gould_hopper"));  // rho=-1/3, l=3
  RecurrenceForm form = fit(extract(fam));
  check_gamma_polys(form, {Poly(), Poly(), falling_factorial_poly(2)});
  CHECK(form.d_inferred == 2);
}

TEST_CASE("discrete hermite-type tables") {
  // literal q = a Delta^2 at a = 1: gamma = [n, -2n, -2n(n-1)]
  Family lit = generate(spec(FamilyRealization::Discrete, Poly{Rational(1)},
                             poly({"0", "0", "1"}), 16));
  check_gamma_polys(fit(extract(lit)),
                    {Poly::variable(), Rational(-2) * Poly::variable(),
                     Rational(-2) * falling_factorial_poly(2)});

  // normalized q = -X^2/2 (preset at a = 1): gamma = [n, n, n(n-1)]
  Family fam = generate(catalog::instantiate("discrete_hermite"));
  check_gamma_polys(fit(extract(fam)),
                    {Poly::variable(), Poly::variable(), falling_factorial_poly(2)});
}

TEST_CASE("the two offsets of a quadratic Appell generator are locked") {
  // for q = c X^2, R = 1 discrete: gamma_2(n) = (n-1) gamma_1(n) always
  for (const auto& c : {rat("1"), rat("-1/2"), rat("3/4")}) {
    Family fam = generate(spec(FamilyRealization::Discrete, Poly{Rational(1)},
                               Poly{Rational(0), Rational(0), c}, 14));
    RecurrenceForm form = fit(extract(fam));
    REQUIRE(form.gamma_polys.size() == 3);
    CHECK(form.gamma_polys[2] ==
          form.gamma_polys[1] * poly({"-1", "1"}));
  }
}

TEST_CASE("fit: minimal degree and holdout alarm") {
  Family fam = generate(catalog::instantiate("hermite"));
  RecurrenceForm form = fit(extract(fam));
  CHECK(form.gamma_polys[1].degree() == 1);

  // corrupt one tabulated value: the holdout must scream
  RecurrenceTable table = extract(fam);
  table.gamma[{1, table.n_max}] += Rational(1);
  CHECK_THROWS_AS(fit(table), FitMismatch);
}

TEST_CASE("fit rejects under-sampled tables") {
  Family fam = generate(catalog::instantiate("hermite"));
  RecurrenceTable table = extract(fam);
  CHECK_THROWS_AS(fit(table, table.n_max), InvalidSpec);
}

TEST_CASE("ex3_1 pinned coefficient formulas") {
  const std::vector<std::pair<Rational, Rational>> params = {
      {rat("0"), rat("0")}, {rat("1"), rat("2")}, {rat("-1"), rat("1/2")}};
  for (const auto& [alpha, beta] : params) {
    Family fam = generate(spec(FamilyRealization::Continuous,
                               Poly{beta, alpha, Rational(1)}, kQx, 20));
    RecurrenceForm form = fit(extract(fam));
    const Poly R = Poly{beta, alpha, Rational(1)};
    const Poly Rm1 = taylor_shift(R, rat("-1"));
    const Poly Rm2 = taylor_shift(R, rat("-2"));
    const Poly n = Poly::variable();
    check_gamma_polys(form,
                      {Poly{-beta, -(alpha * 2 - 1), Rational(-3)},
                       n * Rm1 * Poly{alpha - 2, Rational(3)},
                       -(falling_factorial_poly(2) * Rm1 * Rm2)});
    CHECK(infer_d(form, fam.spec) == 2);
  }
}

TEST_CASE("ex2_2 parity structure and exact coefficients") {
  for (const auto& beta : {rat("1"), rat("2"), rat("-1/2")}) {
    Family fam = generate(spec(FamilyRealization::Continuous, Poly{beta, Rational(1)},
                               poly({"0", "0", "1/2"}), 20));
    RecurrenceForm form = fit(extract(fam));
    REQUIRE(form.gamma_polys.size() == 4);
    CHECK(form.gamma_polys[0].is_zero());
    CHECK(form.gamma_polys[2].is_zero());
    // gamma_1 = -n(n+beta-1)(2n+beta-1): the last factor carries beta,
    // unlike either variant printed in the classical table
    const Poly n = Poly::variable();
    CHECK(form.gamma_polys[1] ==
          -(n * taylor_shift(n, beta - 1) * Poly{beta - 1, Rational(2)}));
    CHECK(form.gamma_polys[3] ==
          falling_factorial_poly(3) * taylor_shift(falling_factorial_poly(3), beta - 1));
    // parity of the polynomials themselves
    for (int k = 0; k <= fam.max_n(); ++k) {
      const Poly& p = fam.polys[static_cast<size_t>(k)];
      for (int i = 0; i <= p.degree(); ++i)
        if ((k - i) % 2 != 0) CHECK(p.coeff(i).is_zero());
    }
  }
}

TEST_CASE("m2 extraction is the ground truth for the discrete quadratic family") {
  const Rational beta = rat("1");
  Family fam = generate(catalog::instantiate("m2"));
  RecurrenceForm form = fit(extract(fam));
  const Poly n = Poly::variable();
  check_gamma_polys(
      form, {n, -(n * taylor_shift(n, beta - 1) * Poly{beta - 1, Rational(2)}),
             -(falling_factorial_poly(2) * taylor_shift(falling_factorial_poly(2), beta - 1)),
             falling_factorial_poly(3) * taylor_shift(falling_factorial_poly(3), beta - 1)});
  CHECK(infer_d(form, fam.spec) == 3);  // bound ld + l - 1 = 3 holds; offset 4 impossible
}

TEST_CASE("closed form for q = G matches extraction (continuous)") {
  for (const auto& alpha : {rat("0"), rat("1/2"), rat("2")}) {
    FamilySpec s = spec(FamilyRealization::Continuous,
                        Poly{-(alpha + 1), Rational(-1)}, kQx, 18);
    Family fam = generate(s);
    RecurrenceTable table = extract(fam);
    for (int n = 0; n < fam.max_n(); ++n) {
      auto closed = closed_form_qG(s, n);
      std::map<std::pair<int, int>, Rational> row;
      for (const auto& [key, value] : table.gamma)
        if (key.second == n) row[key] = value;
      std::map<std::pair<int, int>, Rational> expected;
      for (const auto& [offset, value] : closed) expected[{offset, n}] = value;
      CHECK(row == expected);
    }
  }
  // Appell with q = G: gamma_0 = -1, i.e. x P_n = P_{n+1} - P_n
  FamilySpec appell = spec(FamilyRealization::Continuous, Poly{Rational(1)}, kQx, 10);
  auto cf = closed_form_qG(appell, 4);
  REQUIRE(cf.size() == 1);
  CHECK(cf[0] == std::pair<int, Rational>(0, Rational(-1)));
  RecurrenceTable table = extract(generate(appell));
  CHECK(table.value(0, 4) == Rational(-1));
  CHECK(table.max_offset == 0);
}

TEST_CASE("closed form for q = G matches extraction (discrete)") {
  std::vector<FamilySpec> specs = {
      catalog::instantiate("charlier"),
      catalog::instantiate("charlier_neg"),
      catalog::instantiate("meixner"),
      catalog::instantiate("meixner", {{"beta", rat("3")}, {"c", rat("1/3")}}),
      catalog::instantiate("kravchuk"),
      spec(FamilyRealization::Discrete, poly({"1", "1"}), kQx, 15),
      spec(FamilyRealization::Discrete, poly({"-2", "0", "1"}), kQx, 15),
  };
  for (auto& s : specs) {
    s.max_n = std::min(s.max_n, 15);
    Family fam = generate(s);
    RecurrenceTable table = extract(fam);
    for (int n = 0; n < fam.max_n(); ++n) {
      std::map<int, Rational> row;
      for (const auto& [key, value] : table.gamma)
        if (key.second == n) row[key.first] = value;
      std::map<int, Rational> expected;
      for (const auto& [offset, value] : closed_form_qG(s, n)) expected[offset] = value;
      CHECK(row == expected);
    }
  }
}

TEST_CASE("closed form requires q = G") {
  CHECK_THROWS_AS(closed_form_qG(catalog::instantiate("hermite"), 3), SpecNotQEqualsG);
  // n = 0 has the single term x P_0 = P_1 + gamma_0(0) P_0
  auto cf = closed_form_qG(catalog::instantiate("laguerre"), 0);
  REQUIRE(cf.size() == 1);
  CHECK(cf[0].first == 0);
  CHECK(cf[0].second == rat("1"));  // 2n + alpha + 1 at n = 0, alpha = 0
}

TEST_CASE("bandwidth law on randomized specs") {
  Rng rng(67);
  int done = 0;
  while (done < 10) {
    const int d = static_cast<int>(rng.pick(0, 2));
    const int l = static_cast<int>(rng.pick(1, 3));
    const auto fr = (done % 2 == 0) ? FamilyRealization::Continuous
                                    : FamilyRealization::Discrete;
    Poly R = rng.poly_of_degree(d, 5, 3);
    Poly q = rng.poly_of_degree(l, 5, 3);
    q -= Poly{q.coeff(0)};
    if (q.degree() != l) continue;
    // keep R away from integer roots in the index range
    bool degenerate = false;
    for (long k = -1; k <= 22; ++k)
      if (R(Rational(k)).is_zero()) degenerate = true;
    // the one resonance where the top offsets of the two parts can cancel
    if (l == 1 && d == 1 && q.coeff(1) * R.leading() == Rational(1)) degenerate = true;
    if (degenerate) continue;
    Family fam = generate(spec(fr, R, q, 20));
    // the top-offset coefficients can have degree ~ m(d+1) in n, beyond what
    // 20 samples can fit, so the law is asserted on the exact table
    RecurrenceTable table = extract(fam);
    const int max_offset = check_bandwidth_law(table, fam.spec);
    if (fr == FamilyRealization::Continuous) {
      CHECK(max_offset + 2 <= l * (d + 1) + 1);
    } else {
      CHECK(max_offset == ((d > 0) ? l * d + l - 1 : l));
    }
    CHECK(van_iseghem_table_check(table));
    ++done;
  }
}

TEST_CASE("extraction preconditions and parallel equivalence") {
  Family tiny = generate(catalog::instantiate("hermite"));
  tiny.polys.resize(2);  // max_n = 1
  CHECK_THROWS_AS(extract(tiny), InvalidSpec);

  Family fam = generate(catalog::instantiate("m2"));
  RecurrenceTable serial = extract(fam, 1);
  RecurrenceTable parallel = extract(fam, 4);
  CHECK(serial.gamma == parallel.gamma);
  CHECK(serial.max_offset == parallel.max_offset);
}

TEST_CASE("bandwidth violations are loud") {
  // a fabricated form wider than any l = 1, d = 0 recurrence can be
  RecurrenceForm fat;
  fat.gamma_polys.assign(4, Poly::variable());
  fat.d_inferred = 3;
  fat.bandwidth = 5;
  FamilySpec s = spec(FamilyRealization::Continuous, Poly{Rational(1)}, kQx, 10);
  CHECK_THROWS_AS(infer_d(fat, s), BandwidthExceeded);
  s.realization = FamilyRealization::Discrete;
  CHECK_THROWS_AS(infer_d(fat, s), BandwidthExceeded);
}

TEST_CASE("exactness of reconstruction for mixed specs") {
  std::vector<std::string> names = {"hermite", "laguerre", "ex3_1", "charlier",
                                    "m2", "discrete_hermite", "shifted_monomials"};
  for (const auto& name : names) {
    FamilySpec s = catalog::instantiate(name);
    s.max_n = std::min(s.max_n, 14);
    Family fam = generate(s);
    CHECK(reconstructs(fam, extract(fam)));
  }
}
