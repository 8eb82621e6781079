#include "qrsym/json_io.hpp"

namespace qrsym {

Json rational_json(const Rational& r) { return r.str(); }

Json ratq_json(const RatQ& f) {
    Json j;
    Json num = Json::array(), den = Json::array();
    for (int k = 0; k <= f.num().degree(); ++k) num.push_back(f.num().coeff(k).str());
    for (int k = 0; k <= f.den().degree(); ++k) den.push_back(f.den().coeff(k).str());
    j["num"] = std::move(num);
    j["den"] = std::move(den);
    return j;
}

Json op_json(const GradedOp<Rational>& op) {
    Json arr = Json::array();
    for (const auto& [d, s] : op.comp) {
        Json c;
        c["degree"] = d;
        Json num = Json::array(), den = Json::array();
        for (int k = 0; k <= s.num().degree(); ++k) num.push_back(s.num().coeff(k).str());
        for (int k = 0; k <= s.den().degree(); ++k) den.push_back(s.den().coeff(k).str());
        c["num"] = std::move(num);
        c["den"] = std::move(den);
        arr.push_back(std::move(c));
    }
    return arr;
}

Json op_json(const GradedOp<RatQ>& op, const std::string& param_name) {
    Json arr = Json::array();
    for (const auto& [d, s] : op.comp) {
        Json c;
        c["degree"] = d;
        Json num = Json::array(), den = Json::array();
        for (int k = 0; k <= s.num().degree(); ++k)
            num.push_back(s.num().coeff(k).str(param_name));
        for (int k = 0; k <= s.den().degree(); ++k)
            den.push_back(s.den().coeff(k).str(param_name));
        c["num"] = std::move(num);
        c["den"] = std::move(den);
        arr.push_back(std::move(c));
    }
    return arr;
}

GradedOp<Rational> op_from_json(const Json& j) {
    GradedOp<Rational> op;
    for (const auto& c : j) {
        std::vector<Rational> num, den;
        for (const auto& v : c.at("num")) num.push_back(Rational::from_string(v.get<std::string>()));
        for (const auto& v : c.at("den")) den.push_back(Rational::from_string(v.get<std::string>()));
        op.set(c.at("degree").get<int>(), RatQ(PolyQ(std::move(num)), PolyQ(std::move(den))));
    }
    return op;
}

Json matrix_json(const BandedMatrix& m) {
    Json j;
    j["start"] = m.start();
    j["size"] = m.size();
    j["bandwidth"] = m.bandwidth();
    Json entries = Json::array();
    for (const auto& [row, col, v] : m.nonzeros()) {
        Json e = Json::array();
        e.push_back(row);
        e.push_back(col);
        e.push_back(v.str());
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json hs_report_json(const HSReport& rep) {
    Json j;
    Json partial = Json::array();
    for (const auto& [n, s] : rep.partial) {
        Json e;
        e["N"] = n;
        e["sum"] = s.str();
        partial.push_back(std::move(e));
    }
    j["partial_sums"] = std::move(partial);
    j["approx_tail_slope"] = rep.slope;
    j["approx_tail_estimate"] = rep.tail_estimate;
    j["converged"] = rep.converged;
    return j;
}

Json rank_report_json(const RankReport& rep) {
    Json j;
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        Json e;
        e["N"] = r.truncation;
        e["rank"] = r.rank;
        e["support_bound"] = r.support_bound;
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    j["stable"] = rep.stable;
    return j;
}

Json expansion_json(const ExpansionSeries& s) {
    Json j;
    j["h0"] = s.h0.str();
    j["order"] = s.order;
    Json coeffs = Json::array();
    for (const auto& c : s.coeff) coeffs.push_back(op_json(c));
    j["coefficients"] = std::move(coeffs);
    Json poles = Json::array();
    for (const auto& per_order : s.pole_log) {
        Json arr = Json::array();
        for (const auto& [d, p] : per_order) {
            Json e = Json::array();
            e.push_back(d);
            e.push_back(p);
            arr.push_back(std::move(e));
        }
        poles.push_back(std::move(arr));
    }
    j["pole_log"] = std::move(poles);
    return j;
}

Json central_report_json(const CentralReport& rep, const RatQ& order_swap,
                         const ExpansionSeries& series) {
    Json j;
    j["i"] = rep.index;
    j["j"] = -rep.index;
    j["h0"] = rep.h0.str();
    j["order"] = series.order;
    Json coeffs = Json::array();
    for (const auto& c : series.coeff) coeffs.push_back(op_json(c));
    j["coefficients"] = std::move(coeffs);
    j["g1"] = ratq_json(rep.g1);
    j["g1_defect"] = ratq_json(rep.g1_defect);
    j["kappa"] = rep.kappa ? Json(rep.kappa->str()) : Json("divergent");
    j["hs_residual"] = rep.hs_residual;
    j["central_charge"] = rep.kappa ? Json(rep.central_charge_slope.str() + "*hbar")
                                    : Json("undefined");
    j["order_swap"] = order_swap.is_zero() ? Json("0") : ratq_json(order_swap);
    return j;
}

Json membership_json(const MembershipReport& rep) {
    Json j;
    j["valid"] = rep.valid;
    Json off = Json::array();
    for (const auto& [d, n] : rep.offending) {
        Json e = Json::array();
        e.push_back(d);
        e.push_back(n);
        off.push_back(std::move(e));
    }
    j["offending"] = std::move(off);
    j["valid_strict"] = rep.valid_strict;
    return j;
}

Json table_comparison_json(const TableComparison& cmp) {
    Json j;
    j["mismatches"] = cmp.mismatches;
    Json lines = Json::array();
    for (const auto& line : cmp.lines) {
        Json e;
        e["bracket"] = line.lhs;
        e["convention"] = line.convention;
        e["match"] = line.match;
        e["oracle"] = line.oracle;
        e["table"] = line.table;
        lines.push_back(std::move(e));
    }
    j["lines"] = std::move(lines);
    return j;
}

} // namespace qrsym
