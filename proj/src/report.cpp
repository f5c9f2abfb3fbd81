#include "vop/report.hpp"

#include <algorithm>
#include <sstream>

namespace vop {
namespace report {

json poly_to_json(const Poly& p) {
  json arr = json::array();
  if (p.is_zero()) {
    arr.push_back("0");
    return arr;
  }
  for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k).str());
  return arr;
}

Poly poly_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidSpec(what + " must be an array of rational strings");
  std::vector<Rational> cs;
  for (const auto& item : j) {
    if (!item.is_string())
      throw InvalidSpec(what + " coefficients must be strings, got " + item.dump());
    cs.push_back(Rational::parse(item.get<std::string>()));
  }
  return Poly::from_coeffs(std::move(cs));
}

json spec_to_json(const FamilySpec& spec) {
  json j;
  j["realization"] = to_string(spec.realization);
  j["R"] = poly_to_json(spec.R);
  j["q"] = poly_to_json(spec.q);
  j["max_n"] = spec.max_n;
  j["name"] = spec.name;
  return j;
}

FamilySpec spec_from_json(const json& j) {
  FamilySpec spec;
  if (!j.is_object()) throw InvalidSpec("spec must be a JSON object");
  const std::string realization = j.value("realization", "");
  if (realization == "continuous")
    spec.realization = FamilyRealization::Continuous;
  else if (realization == "discrete")
    spec.realization = FamilyRealization::Discrete;
  else
    throw InvalidSpec("realization must be 'continuous' or 'discrete'");
  if (!j.contains("R") || !j.contains("q")) throw InvalidSpec("spec needs R and q");
  spec.R = poly_from_json(j["R"], "R");
  if (j["q"].is_array() && !j["q"].empty() &&
      (!j["q"][0].is_string() || j["q"][0].get<std::string>() != "0"))
    throw InvalidSpec("q must have zero constant term");
  spec.q = poly_from_json(j["q"], "q");
  if (j.contains("max_n")) {
    if (!j["max_n"].is_number_integer()) throw InvalidSpec("max_n must be an integer");
    spec.max_n = j["max_n"].get<int>();
  }
  spec.name = j.value("name", "");
  spec.validate();
  return spec;
}

json operator_to_json(const OperatorExpr& op) {
  json j;
  j["realization"] = to_string(op.realization());
  json terms = json::array();
  for (const auto& [order, coeff] : op.terms()) {
    json t;
    t["order"] = order;
    t["coeff"] = poly_to_json(coeff);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

json family_to_json(const Family& fam) {
  json j;
  j["spec"] = spec_to_json(fam.spec);
  json polys = json::array();
  const bool discrete = fam.spec.realization == FamilyRealization::Discrete;
  for (int n = 0; n <= fam.max_n(); ++n) {
    json entry;
    entry["n"] = n;
    entry["monomial"] = poly_to_json(fam.polys[static_cast<size_t>(n)]);
    if (discrete) entry["falling_factorial"] = poly_to_json(fam.falling_factorial_view(n));
    polys.push_back(std::move(entry));
  }
  j["polynomials"] = std::move(polys);
  return j;
}

json recurrence_to_json(const RecurrenceForm& form) {
  json j;
  j["d"] = form.d_inferred;
  j["bandwidth"] = form.bandwidth;
  j["validated_range"] = json::array({form.validated_range.first, form.validated_range.second});
  json gamma = json::array();
  for (size_t k = 0; k < form.gamma_polys.size(); ++k) {
    json entry;
    entry["j"] = static_cast<int>(k);
    entry["poly_in_n"] = poly_to_json(form.gamma_polys[k]);
    entry["identically_zero"] = form.gamma_polys[k].is_zero();
    gamma.push_back(std::move(entry));
  }
  j["gamma"] = std::move(gamma);
  return j;
}

json verification_to_json(const VerificationReport& rep) {
  auto one = [](const char* name, const CheckResult& r) {
    json j;
    j["name"] = name;
    j["passed"] = r.passed;
    if (r.first_failure)
      j["first_failure"] = *r.first_failure;
    else
      j["first_failure"] = nullptr;
    j["indices_checked"] = r.indices_checked;
    return j;
  };
  json j;
  j["passed"] = rep.passed();
  j["checks"] = json::array({one("eigen", rep.eigen), one("lowering", rep.lowering),
                             one("raising", rep.raising), one("rodrigues", rep.rodrigues)});
  return j;
}

json transform_to_json(const Family& cont, const MellinCorrespondence& corr) {
  json j;
  j["continuous"] = family_to_json(cont);
  j["discrete"] = family_to_json(corr.discrete);
  json verdicts = json::array();
  for (size_t n = 0; n < corr.matches.size(); ++n) {
    json v;
    v["n"] = static_cast<int>(n);
    v["match"] = static_cast<bool>(corr.matches[n]);
    verdicts.push_back(std::move(v));
  }
  j["correspondence"] = std::move(verdicts);
  return j;
}

std::string recurrence_to_csv(const RecurrenceTable& table) {
  std::ostringstream os;
  os << "n,j,gamma\n";
  // table keys are (j, n); emit sorted by n then j
  std::vector<std::pair<std::pair<int, int>, Rational>> rows(table.gamma.begin(),
                                                             table.gamma.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
  });
  for (const auto& [key, value] : rows)
    os << key.second << "," << key.first << "," << value.str() << "\n";
  return os.str();
}

std::string poly_to_latex(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto coeff_tex = [](const Rational& a) {
    if (a.is_integer()) return a.str();
    std::string num = a.numerator_str();
    bool neg = !num.empty() && num[0] == '-';
    if (neg) num = num.substr(1);
    return std::string(neg ? "-" : "") + "\\tfrac{" + num + "}{" + a.denominator_str() + "}";
  };
  for (int k = p.degree(); k >= 0; --k) {
    Rational a = p.coeff(k);
    if (a.is_zero()) continue;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (k == 0 || !a.is_one()) os << coeff_tex(a);
    if (k >= 1) {
      os << var;
      if (k > 1) os << "^{" << k << "}";
    }
    first = false;
  }
  return os.str();
}

namespace {

size_t nonzero_terms(const Poly& p) {
  size_t count = 0;
  for (int k = 0; k <= p.degree(); ++k)
    if (!p.coeff(k).is_zero()) ++count;
  return count;
}

// Falling-factorial display (n)_k where it is the shorter form, e.g.
// n(n-1)(n-2) prints as (n)_{3} rather than n^3 - 3n^2 + 2n.
std::string gamma_to_latex(const Poly& g) {
  if (g.degree() < 2) return poly_to_latex(g, "n");
  auto table = shared_stirling(g.degree());
  const Poly ff = to_basis(g, BasisTag::Monomial, BasisTag::FallingFactorial, *table);
  if (nonzero_terms(ff) >= nonzero_terms(g)) return poly_to_latex(g, "n");
  std::ostringstream os;
  bool first = true;
  for (int k = ff.degree(); k >= 0; --k) {
    Rational a = ff.coeff(k);
    if (a.is_zero()) continue;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (k == 0 || !a.is_one()) os << poly_to_latex(Poly{a}, "n");
    if (k == 1) os << "n";
    if (k >= 2) os << "(n)_{" << k << "}";
    first = false;
  }
  return os.str();
}

}  // namespace

std::string recurrence_to_latex(const RecurrenceForm& form) {
  std::ostringstream os;
  os << "\\[\n  x P_{n} = P_{n+1}";
  for (size_t j = 0; j < form.gamma_polys.size(); ++j) {
    const Poly& g = form.gamma_polys[j];
    if (g.is_zero()) continue;
    os << " + \\left(" << gamma_to_latex(g) << "\\right) P_{n"
       << (j == 0 ? "" : "-" + std::to_string(j)) << "}";
  }
  os << "\n\\]\n";
  return os.str();
}

}  // namespace report
}  // namespace vop
