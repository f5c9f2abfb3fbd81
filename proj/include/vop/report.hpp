#ifndef VOP_REPORT_HPP
#define VOP_REPORT_HPP

#include <json.hpp>

#include <string>

#include "vop/family.hpp"
#include "vop/mellin.hpp"
#include "vop/recurrence.hpp"

namespace vop {
namespace report {

using json = nlohmann::ordered_json;

// All rationals serialize as exact strings ("p/q" or "p"), never as floats.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j, const std::string& what);

json spec_to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const json& j);

json operator_to_json(const OperatorExpr& op);
json family_to_json(const Family& fam);
json recurrence_to_json(const RecurrenceForm& form);
json verification_to_json(const VerificationReport& rep);
json transform_to_json(const Family& cont, const MellinCorrespondence& corr);

std::string recurrence_to_csv(const RecurrenceTable& table);
std::string recurrence_to_latex(const RecurrenceForm& form);

std::string poly_to_latex(const Poly& p, const std::string& var);

}  // namespace report
}  // namespace vop

#endif
