#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vop/catalog.hpp"
#include "vop/mellin.hpp"
#include "vop/recurrence.hpp"

using namespace vop;
using namespace vop::testutil;

TEST_CASE("t^n maps to (x)_n") {
  MellinMap mellin(12);
  CHECK(mellin(Poly::monomial(2)) == poly({"0", "-1", "1"}));  // (x)_2 = x^2 - x
  CHECK(mellin(Poly{rat("1")}) == Poly{rat("1")});
  // linearity: t^2 + 3t -> (x)_2 + 3x = x^2 + 2x
  CHECK(mellin(poly({"0", "3", "1"})) == poly({"0", "2", "1"}));
  for (int n = 0; n <= 12; ++n)
    CHECK(mellin(Poly::monomial(n)) == falling_factorial_poly(static_cast<unsigned>(n)));
  CHECK_THROWS_AS(mellin(Poly::monomial(13)), TableTooSmall);
}

TEST_CASE("invertibility up to max degree") {
  MellinMap mellin(10);
  Rng rng(71);
  for (int i = 0; i < 30; ++i) {
    Poly p = rng.poly_of_degree(static_cast<int>(rng.pick(0, 10)));
    CHECK(mellin.inverse(mellin(p)) == p);
    CHECK(mellin(mellin.inverse(p)) == p);
  }
}

TEST_CASE("intertwining with G in both realizations") {
  CHECK(intertwine_check(Poly{rat("1")}, 20));
  CHECK(intertwine_check(poly({"1", "1"}), 15));       // H + 1
  CHECK(intertwine_check(poly({"1", "0", "1"}), 15));  // H^2 + 1
  CHECK(intertwine_check(poly({"-2", "3", "1"}), 10));
  CHECK(intertwine_check(poly({"5"}), 0));             // constants only
}

TEST_CASE("map_family: hermite image is the discrete hermite family") {
  Family cont = generate(catalog::instantiate("hermite"));
  MellinCorrespondence corr = map_family(cont);
  for (bool m : corr.matches) CHECK(m);
  // the image IS the discrete_hermite preset at a = 1
  Family disc = generate(catalog::instantiate("discrete_hermite"));
  CHECK(corr.discrete.polys == disc.polys);
  // spot value: M*(x^3 - 3x) = (x)_3 - 3(x)_1
  MellinMap mellin(cont.max_n());
  CHECK(mellin(cont.polys[3]) ==
        falling_factorial_poly(3) - Rational(3) * falling_factorial_poly(1));
}

TEST_CASE("eigenvalue preservation and the d increment for Appell pairs") {
  for (const char* name : {"hermite", "appell"}) {
    Family cont = generate(catalog::instantiate(name));
    MellinCorrespondence corr = map_family(cont);
    CHECK(check_eigen(corr.discrete).passed);
    RecurrenceForm cform = fit(extract(cont));
    RecurrenceForm dform = fit(extract(corr.discrete));
    // d-orthogonal Appell families map to (d+1)-orthogonal discrete ones
    CHECK(dform.d_inferred == cform.d_inferred + 1);
  }
}

TEST_CASE("g-recurrence transport: same gamma as the continuous x-recurrence") {
  for (const char* name : {"hermite", "laguerre", "ex2_2"}) {
    FamilySpec s = catalog::instantiate(name);
    s.max_n = 15;
    Family cont = generate(s);
    RecurrenceTable table = extract(cont);
    MellinCorrespondence corr = map_family(cont);
    const OperatorExpr g = OperatorExpr::weyl_y(Realization::Shift);
    for (int n = 0; n < cont.max_n(); ++n) {
      Poly lhs = g.apply(corr.discrete.polys[static_cast<size_t>(n)]);
      Poly rhs = corr.discrete.polys[static_cast<size_t>(n) + 1];
      for (const auto& [key, value] : table.gamma)
        if (key.second == n)
          rhs += value * corr.discrete.polys[static_cast<size_t>(n - key.first)];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("map_family rejects discrete input") {
  CHECK_THROWS_AS(map_family(generate(catalog::instantiate("charlier"))), InvalidSpec);
}

TEST_CASE("correspondence mismatch is loud") {
  Family cont = generate(catalog::instantiate("hermite"));
  cont.polys[4] += Poly::variable();  // no longer the generated family
  CHECK_THROWS_AS(map_family(cont), CorrespondenceMismatch);
}
