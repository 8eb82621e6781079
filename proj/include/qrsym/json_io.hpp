#ifndef QRSYM_JSON_IO_HPP
#define QRSYM_JSON_IO_HPP

#include <json.hpp>

#include "qrsym/asymptotics.hpp"
#include "qrsym/verma.hpp"
#include "qrsym/witt.hpp"

namespace qrsym {

// All reports use ordered JSON with exact rational strings; identical inputs
// produce byte-identical output. Floating point appears only in fields whose
// names carry the approx_ prefix.
using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json ratq_json(const RatQ& f);  // {"num": [...], "den": [...]}, exact strings

// Canonical serialization of an operator at a concrete weight:
// one object per component, [{"degree": d, "num": [...], "den": [...]}],
// coefficients ascending, degrees ascending.
Json op_json(const GradedOp<Rational>& op);
// Symbolic weight: coefficients are rational functions of the parameter,
// rendered as canonical strings.
Json op_json(const GradedOp<RatQ>& op, const std::string& param_name);

GradedOp<Rational> op_from_json(const Json& j);

Json matrix_json(const BandedMatrix& m);
Json hs_report_json(const HSReport& rep);
Json rank_report_json(const RankReport& rep);
Json expansion_json(const ExpansionSeries& s);
Json central_report_json(const CentralReport& rep, const RatQ& order_swap,
                         const ExpansionSeries& series);
Json membership_json(const MembershipReport& rep);
Json table_comparison_json(const TableComparison& cmp);

template <class K>
Json identity_report_json(const IdentityReport<K>& rep) {
    Json j;
    j["name"] = rep.name;
    j["pass"] = rep.pass;
    if (!rep.pass) j["residual_grades"] = rep.residual.grades();
    return j;
}

} // namespace qrsym

#endif
