#ifndef VOP_CATALOG_HPP
#define VOP_CATALOG_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vop/family.hpp"

namespace vop {
namespace catalog {

using Params = std::map<std::string, Rational>;

struct ParamSpec {
  std::string name;
  Rational default_value;
  std::string note;
};

/// Named preset mapping a classical (or classical-flavoured) family onto a
/// FamilySpec with rational parameter slots.
struct Preset {
  std::string name;
  FamilyRealization realization = FamilyRealization::Continuous;
  std::vector<ParamSpec> params;
  std::string summary;  // lineage and validity notes
  int default_max_n = 20;
  std::function<FamilySpec(const Params&)> build;
  /// Hard generation cap as a function of the parameters (e.g. the finite
  /// Kravchuk-type families); unset means uncapped.
  std::function<int(const Params&)> max_n_cap;
  /// Expected recurrence coefficients gamma_j(n) as polynomials in n, when a
  /// closed classical table is known.  Used as an independent oracle.
  std::function<std::vector<Poly>(const Params&)> classical_gammas;
};

const std::vector<Preset>& presets();
const Preset& find(const std::string& name);  // throws UnknownPreset

/// Resolves overrides against the preset's declared parameters and builds
/// the concrete spec.  Unknown keys raise InvalidParam; parameter values
/// violating a preset's validity notes raise InvalidParam as well.
FamilySpec instantiate(const std::string& name, const Params& overrides = {});

/// Resolved parameter map (defaults + overrides) for a preset.
Params resolve_params(const Preset& preset, const Params& overrides);

/// Generation cap for the resolved parameters, or a negative value if none.
int resolved_cap(const Preset& preset, const Params& params);

}  // namespace catalog
}  // namespace vop

#endif
