#include "vop/catalog.hpp"

#include <algorithm>

namespace vop {
namespace catalog {

namespace {

Poly nvar() { return Poly::variable(); }
Poly ff(unsigned k) { return falling_factorial_poly(k); }
// (n+s)(n+s-1)...(n+s-k+1)
Poly ff_at(unsigned k, const Rational& s) { return taylor_shift(ff(k), s); }

Rational param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw MissingParam("parameter '" + key + "' not supplied");
  return it->second;
}

long int_param(const Params& p, const std::string& key, long lo, long hi) {
  Rational v = param(p, key);
  if (!v.is_integer())
    throw InvalidParam("parameter '" + key + "' must be an integer, got " + v.str());
  long n = v.to_long();
  if (n < lo || n > hi)
    throw InvalidParam("parameter '" + key + "' out of range [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "]");
  return n;
}

void require_nonzero(const Rational& v, const std::string& key) {
  if (v.is_zero()) throw InvalidParam("parameter '" + key + "' must be nonzero");
}

// gamma table of an Appell-type family (R = 1, continuous):
// gamma_{k-1}(n) = -k q_k (n)_{k-1}
std::vector<Poly> appell_gammas(const Poly& q) {
  std::vector<Poly> out(static_cast<size_t>(std::max(q.degree(), 1)), Poly());
  for (int k = 1; k <= q.degree(); ++k)
    if (!q.coeff(k).is_zero())
      out[static_cast<size_t>(k - 1)] =
          (Rational(-k) * q.coeff(k)) * ff(static_cast<unsigned>(k - 1));
  return out;
}

// Shared table of the (R = H + beta, q = X^2/2) families; the discrete
// variant adds the offset-0 and offset-2 contributions.
std::vector<Poly> quadratic_deg1_gammas(const Rational& beta, bool discrete) {
  const Poly g1 = -(nvar() * ff_at(1, beta - 1) *
                    Poly{beta - 1, Rational(2)});           // -n(n+b-1)(2n+b-1)
  const Poly g3 = ff(3) * ff_at(3, beta - 1);               // (n)_3 (n+b-1)_3
  std::vector<Poly> out{Poly(), g1, Poly(), g3};
  if (discrete) {
    out[0] = nvar();
    out[2] = -(ff(2) * ff_at(2, beta - 1));                 // -(n)_2 (n+b-1)_2
  }
  return out;
}

FamilySpec make_spec(FamilyRealization r, Poly R, Poly q, int max_n, std::string name) {
  FamilySpec spec;
  spec.realization = r;
  spec.R = std::move(R);
  spec.q = std::move(q);
  spec.max_n = max_n;
  spec.name = std::move(name);
  spec.validate();
  return spec;
}

std::vector<Preset> build_presets() {
  std::vector<Preset> out;
  const Poly qX{Rational(0), Rational(1)};
  const Poly qX2half{Rational(0), Rational(0), Rational(1, 2)};

  {
    Preset p;
    p.name = "hermite";
    p.realization = FamilyRealization::Continuous;
    p.summary = "Probabilists' Hermite polynomials: R = 1, q = -X^2/2.";
    p.build = [](const Params&) {
      return make_spec(FamilyRealization::Continuous, Poly{Rational(1)},
                       Poly{Rational(0), Rational(0), Rational(-1, 2)}, 20, "hermite");
    };
    p.classical_gammas = [](const Params&) {
      return std::vector<Poly>{Poly(), nvar()};
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "gould_hopper";
    p.realization = FamilyRealization::Continuous;
    p.params = {{"rho", Rational(-1, 3), "coefficient of the single generator term"},
                {"l", Rational(3), "generator exponent, integer >= 1"}};
    p.summary =
        "Gould-Hopper type Appell family: R = 1, q = rho X^l. The default "
        "rho = -1/l gives the normalized lowering convention.";
    p.build = [](const Params& prm) {
      long l = int_param(prm, "l", 1, 16);
      Rational rho = param(prm, "rho");
      require_nonzero(rho, "rho");
      return make_spec(FamilyRealization::Continuous, Poly{Rational(1)},
                       Poly::monomial(static_cast<int>(l), rho), 20, "gould_hopper");
    };
    p.classical_gammas = [](const Params& prm) {
      return appell_gammas(Poly::monomial(static_cast<int>(int_param(prm, "l", 1, 16)),
                                          param(prm, "rho")));
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "appell";
    p.realization = FamilyRealization::Continuous;
    p.params = {{"q1", Rational(0), "coefficient of X"},
                {"q2", Rational(-1, 2), "coefficient of X^2"},
                {"q3", Rational(0), "coefficient of X^3"},
                {"q4", Rational(0), "coefficient of X^4"},
                {"q5", Rational(0), "coefficient of X^5"},
                {"q6", Rational(0), "coefficient of X^6"}};
    p.summary =
        "General Appell family: R = 1, q = sum q_k X^k. Unset coefficients "
        "keep their defaults (q2 = -1/2), so override every q_k you need.";
    p.build = [](const Params& prm) {
      std::vector<Rational> cs{Rational(0)};
      for (int k = 1; k <= 6; ++k) cs.push_back(param(prm, "q" + std::to_string(k)));
      Poly q = Poly::from_coeffs(std::move(cs));
      if (q.is_zero()) throw InvalidParam("appell needs at least one nonzero q_k");
      return make_spec(FamilyRealization::Continuous, Poly{Rational(1)}, std::move(q),
                       20, "appell");
    };
    p.classical_gammas = [](const Params& prm) {
      std::vector<Rational> cs{Rational(0)};
      for (int k = 1; k <= 6; ++k) cs.push_back(param(prm, "q" + std::to_string(k)));
      return appell_gammas(Poly::from_coeffs(std::move(cs)));
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "laguerre";
    p.realization = FamilyRealization::Continuous;
    p.params = {{"alpha", Rational(0), "generalized Laguerre parameter"}};
    p.summary = "Monic generalized Laguerre polynomials: R = -(H + alpha + 1), q = X.";
    p.build = [qX](const Params& prm) {
      Rational a = param(prm, "alpha");
      return make_spec(FamilyRealization::Continuous, Poly{-(a + 1), Rational(-1)}, qX,
                       20, "laguerre");
    };
    p.classical_gammas = [](const Params& prm) {
      Rational a = param(prm, "alpha");
      return std::vector<Poly>{Poly{a + 1, Rational(2)}, Poly{Rational(0), a, Rational(1)}};
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "ex2_2";
    p.realization = FamilyRealization::Continuous;
    p.params = {{"beta", Rational(1), "shift in R"}};
    p.summary =
        "Laguerre-type R with a squared generator: R = H + beta, q = X^2/2. "
        "Polynomials have the parity of their index; even/odd halves are "
        "generalized-Laguerre-like in x^2.";
    p.build = [qX2half](const Params& prm) {
      return make_spec(FamilyRealization::Continuous, Poly{param(prm, "beta"), Rational(1)},
                       qX2half, 20, "ex2_2");
    };
    p.classical_gammas = [](const Params& prm) {
      return quadratic_deg1_gammas(param(prm, "beta"), false);
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "ex3_1";
    p.realization = FamilyRealization::Continuous;
    p.params = {{"alpha", Rational(0), "linear coefficient of R"},
                {"beta", Rational(0), "constant coefficient of R"}};
    p.summary = "Four-term family: R = H^2 + alpha H + beta, q = X (third-order operator).";
    p.build = [qX](const Params& prm) {
      return make_spec(FamilyRealization::Continuous,
                       Poly{param(prm, "beta"), param(prm, "alpha"), Rational(1)}, qX, 20,
                       "ex3_1");
    };
    p.classical_gammas = [](const Params& prm) {
      const Rational a = param(prm, "alpha");
      const Rational b = param(prm, "beta");
      const Poly R{b, a, Rational(1)};
      const Poly Rm1 = taylor_shift(R, Rational(-1));
      const Poly Rm2 = taylor_shift(R, Rational(-2));
      return std::vector<Poly>{
          Poly{-b, -(a * 2 - 1), Rational(-3)},          // -(3n^2 + (2a-1)n + b)
          nvar() * Rm1 * Poly{a - 2, Rational(3)},       // n R(n-1) (3n + a - 2)
          -(ff(2) * Rm1 * Rm2)};                         // -n(n-1) R(n-1) R(n-2)
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "ex3_2";
    p.realization = FamilyRealization::Continuous;
    p.summary = "Seven-term family: R = (H+1)^2, q = X^2/2.";
    // gamma_5(n) = -(n)_5^3 has degree 15; the fit needs the larger sample range
    p.default_max_n = 30;
    p.build = [qX2half](const Params&) {
      return make_spec(FamilyRealization::Continuous,
                       Poly{Rational(1), Rational(2), Rational(1)}, qX2half, 20, "ex3_2");
    };
    p.classical_gammas = [](const Params&) {
      const Poly f3 = ff(3);
      const Poly f5 = ff(5);
      return std::vector<Poly>{
          Poly(),
          -(nvar().pow(3) * Poly{Rational(1), Rational(0), Rational(3)}),  // -n^3(3n^2+1)
          Poly(),
          Rational(3) * (Poly{Rational(-1), Rational(1)} * f3 * f3 * f3),  // 3(n-1)(n)_3^3
          Poly(),
          -(f5 * f5 * f5)};                                                // -(n)_5^3
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "charlier";
    p.realization = FamilyRealization::Discrete;
    p.params = {{"a", Rational(1), "Charlier parameter, nonzero"}};
    p.summary =
        "Monic Charlier polynomials from the (x)_n ladder: R = -a, q = X. "
        "The opposite sign convention ships as charlier_neg; the two differ "
        "only in the sign carried by a.";
    p.build = [qX](const Params& prm) {
      Rational a = param(prm, "a");
      require_nonzero(a, "a");
      return make_spec(FamilyRealization::Discrete, Poly{-a}, qX, 20, "charlier");
    };
    p.classical_gammas = [](const Params& prm) {
      Rational a = param(prm, "a");
      return std::vector<Poly>{Poly{a, Rational(1)}, Poly{Rational(0), a}};
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "charlier_neg";
    p.realization = FamilyRealization::Discrete;
    p.params = {{"a", Rational(1), "Charlier parameter, nonzero"}};
    p.summary =
        "Charlier ladder with the reflected sign convention: R = +a, q = X. "
        "Equivalent to charlier with a -> -a; recurrence x P_n = P_{n+1} + "
        "(n - a) P_n - a n P_{n-1}.";
    p.build = [qX](const Params& prm) {
      Rational a = param(prm, "a");
      require_nonzero(a, "a");
      return make_spec(FamilyRealization::Discrete, Poly{a}, qX, 20, "charlier_neg");
    };
    p.classical_gammas = [](const Params& prm) {
      Rational a = param(prm, "a");
      return std::vector<Poly>{Poly{-a, Rational(1)}, Poly{Rational(0), -a}};
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "meixner";
    p.realization = FamilyRealization::Discrete;
    p.params = {{"beta", Rational(2), "Meixner beta"},
                {"c", Rational(1, 2), "Meixner c, c not in {0, 1}"}};
    p.summary =
        "Meixner-type family: R = mu (H + beta) with mu = c/(1-c), q = X. "
        "Exact extraction identifies it with the classical monic Meixner "
        "M(beta, c/(2c-1)); the textbook M(beta, c) corresponds to mu = "
        "c/(c-1). Both conventions are recorded here; at c = 1/2 the lower "
        "band collapses (mu = 1).";
    p.build = [qX](const Params& prm) {
      Rational beta = param(prm, "beta");
      Rational c = param(prm, "c");
      if (c.is_zero() || c.is_one())
        throw InvalidParam("meixner needs c outside {0, 1}");
      Rational mu = c / (Rational(1) - c);
      return make_spec(FamilyRealization::Discrete, Poly{mu * beta, mu}, qX, 20,
                       "meixner");
    };
    p.classical_gammas = [](const Params& prm) {
      Rational beta = param(prm, "beta");
      Rational c = param(prm, "c");
      Rational mu = c / (Rational(1) - c);
      return std::vector<Poly>{
          Poly{-(mu * beta), Rational(1) - mu * 2},
          (mu * (mu - 1)) * Poly{Rational(0), beta - 1, Rational(1)}};
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "kravchuk";
    p.realization = FamilyRealization::Discrete;
    p.params = {{"N", Rational(6), "lattice size, positive integer"},
                {"p", Rational(-1), "Kravchuk parameter, p not in {0, 1}"}};
    p.summary =
        "Kravchuk polynomials as the beta = -N Meixner degeneration with "
        "p = c/(c-1); the family degenerates beyond n = N, so generation is "
        "capped there.";
    p.build = [qX](const Params& prm) {
      long N = int_param(prm, "N", 1, 1000);
      Rational pv = param(prm, "p");
      if (pv.is_zero() || pv.is_one())
        throw InvalidParam("kravchuk needs p outside {0, 1}");
      Rational c = pv / (pv - 1);
      Rational mu = c / (Rational(1) - c);
      return make_spec(FamilyRealization::Discrete, Poly{mu * Rational(-N), mu}, qX,
                       static_cast<int>(N), "kravchuk");
    };
    p.max_n_cap = [](const Params& prm) {
      return static_cast<int>(int_param(prm, "N", 1, 1000));
    };
    p.classical_gammas = [](const Params& prm) {
      Rational beta = Rational(-int_param(prm, "N", 1, 1000));
      Rational pv = param(prm, "p");
      Rational c = pv / (pv - 1);
      Rational mu = c / (Rational(1) - c);
      return std::vector<Poly>{
          Poly{-(mu * beta), Rational(1) - mu * 2},
          (mu * (mu - 1)) * Poly{Rational(0), beta - 1, Rational(1)}};
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "m2";
    p.realization = FamilyRealization::Discrete;
    p.params = {{"beta", Rational(1), "shift in R"}};
    p.summary = "Discrete counterpart of ex2_2: R = H + beta, q = X^2/2.";
    p.build = [qX2half](const Params& prm) {
      return make_spec(FamilyRealization::Discrete, Poly{param(prm, "beta"), Rational(1)},
                       qX2half, 20, "m2");
    };
    p.classical_gammas = [](const Params& prm) {
      return quadratic_deg1_gammas(param(prm, "beta"), true);
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "discrete_hermite";
    p.realization = FamilyRealization::Discrete;
    p.params = {{"a", Rational(1), "scale of the quadratic generator, nonzero"}};
    p.summary =
        "Discrete Hermite family: R = 1, q = -a X^2/2, the transform image "
        "of hermite at a = 1. Two-orthogonal: x P_n = P_{n+1} + n P_n + "
        "a n P_{n-1} + a n(n-1) P_{n-2}.";
    p.build = [](const Params& prm) {
      Rational a = param(prm, "a");
      require_nonzero(a, "a");
      return make_spec(FamilyRealization::Discrete, Poly{Rational(1)},
                       Poly{Rational(0), Rational(0), -a / 2}, 20, "discrete_hermite");
    };
    p.classical_gammas = [](const Params& prm) {
      Rational a = param(prm, "a");
      return std::vector<Poly>{nvar(), a * nvar(), a * ff(2)};
    };
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "shifted_monomials";
    p.realization = FamilyRealization::Continuous;
    p.params = {{"a", Rational(1), "shift, nonzero"}};
    p.summary = "Degenerate Appell family P_n = (x + a)^n: R = 1, q = a X.";
    p.build = [](const Params& prm) {
      Rational a = param(prm, "a");
      require_nonzero(a, "a");
      return make_spec(FamilyRealization::Continuous, Poly{Rational(1)},
                       Poly{Rational(0), a}, 20, "shifted_monomials");
    };
    p.classical_gammas = [](const Params& prm) {
      return std::vector<Poly>{Poly{-param(prm, "a")}};
    };
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build_presets();
  return all;
}

const Preset& find(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  throw UnknownPreset("no preset named '" + name + "'");
}

Params resolve_params(const Preset& preset, const Params& overrides) {
  Params resolved;
  for (const auto& ps : preset.params) resolved[ps.name] = ps.default_value;
  for (const auto& [key, value] : overrides) {
    if (!resolved.count(key))
      throw InvalidParam("preset '" + preset.name + "' has no parameter '" + key + "'");
    resolved[key] = value;
  }
  return resolved;
}

int resolved_cap(const Preset& preset, const Params& params) {
  return preset.max_n_cap ? preset.max_n_cap(params) : -1;
}

FamilySpec instantiate(const std::string& name, const Params& overrides) {
  const Preset& preset = find(name);
  const Params resolved = resolve_params(preset, overrides);
  FamilySpec spec = preset.build(resolved);
  spec.max_n = preset.default_max_n;
  const int cap = resolved_cap(preset, resolved);
  if (cap >= 0) spec.max_n = std::min(spec.max_n, cap);
  return spec;
}

}  // namespace catalog
}  // namespace vop
