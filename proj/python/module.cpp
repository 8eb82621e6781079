#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qrsym/json_io.hpp"

namespace py = pybind11;
using namespace qrsym;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null:
            return py::none();
        case Json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case Json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float:
            return py::float_(j.get<double>());
        case Json::value_t::string:
            return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

Rational parse_weight(const std::string& s) { return Rational::from_string(s); }

py::dict verify_exact_py(int max_index, const std::string& h) {
    Json checks = Json::array();
    bool all = true;
    auto record = [&](const std::string& name, bool pass) {
        Json c;
        c["name"] = name;
        c["pass"] = pass;
        checks.push_back(std::move(c));
        all = all && pass;
    };
    auto run = [&](auto cat, bool with_q) {
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j) {
                auto rep = verify_sl2(cat, i, j);
                record(rep.name, rep.pass);
            }
        if (with_q) {
            auto [diag, rel] = verify_berezin(cat);
            record(diag.name, diag.pass);
            record(rel.name, rel.pass);
        }
        for (int i = -1; i <= 1; ++i)
            for (int n = -max_index; n <= max_index; ++n) {
                auto repL = verify_tensor_relation(cat, i, n, Family::L);
                record(repL.name, repL.pass);
                auto repJ = verify_tensor_relation(cat, i, n, Family::J);
                record(repJ.name, repJ.pass);
            }
    };
    if (h.empty()) {
        run(Catalog<RatQ>(RatQ::var()), true);
    } else {
        Rational w = parse_weight(h);
        run(Catalog<Rational>(w), !(w == Rational(1, 2)));
    }
    Json out;
    out["pass"] = all;
    out["checks"] = std::move(checks);
    return json_to_py(out);
}

py::dict defect_report_py(int i, int j, const std::string& h, std::vector<int> cutoffs,
                          int start) {
    Rational w = parse_weight(h);
    Catalog<Rational> cat(w);
    if (w == Rational(0) && start == 0) start = 1;
    std::sort(cutoffs.begin(), cutoffs.end());
    if (cutoffs.empty()) throw BadInput("need at least one truncation");
    int top = cutoffs.back();
    BandedMatrix m = defect_matrix(cat, i, j, top, start);
    Json out;
    out["i"] = i;
    out["j"] = j;
    out["h"] = w.str();
    out["start"] = start;
    out["symbol"] = op_json(cat.defect(i, j));
    out["trace"] = m.trace().str();
    RankReport rank = finite_rank_scan(
        [&](int n) { return defect_matrix(cat, i, j, n, start); }, cutoffs);
    out["rank"] = rank_report_json(rank);
    if (w > Rational(0)) {
        VermaBasis basis = verma_norms(w, top + start, start);
        out["hs"] = hs_report_json(hs_partial_norm(m, basis, cutoffs));
    }
    out["matrix_vs_symbol_mismatch"] =
        matrix_vs_symbol_mismatch(cat, i, j, std::min(top, 64), start);
    return json_to_py(out);
}

py::dict central_charge_report_py(int i, const std::string& h0, int order) {
    Rational base = parse_weight(h0);
    Json out;
    ExpansionSeries series = expand_defect(i, -i, base, order);
    out["expansion"] = expansion_json(series);
    CentralReport rep = central_coefficient(i, base);
    out["central"] = central_report_json(rep, order_swap_experiment(i, base), series);
    return json_to_py(out);
}

py::dict cocycle_report_py(int max_index, bool table_compare) {
    Json out;
    bool identity_ok = true, antisym_ok = true;
    for (int a = -max_index; a <= max_index; ++a)
        for (int b = -max_index; b <= max_index; ++b) {
            antisym_ok = antisym_ok &&
                         (gelfand_fuchs_over_pi(TrigField::e_n(a), TrigField::e_n(b)) +
                          gelfand_fuchs_over_pi(TrigField::e_n(b), TrigField::e_n(a)))
                             .is_zero();
            for (int c = -max_index; c <= max_index; ++c)
                identity_ok = identity_ok &&
                              cocycle_residual_over_pi(TrigField::e_n(a),
                                                       TrigField::e_n(b),
                                                       TrigField::e_n(c))
                                  .is_zero();
        }
    out["cocycle_identity"] = identity_ok;
    out["antisymmetry"] = antisym_ok;
    GaussianRational alpha = gelfand_fuchs_over_pi(TrigField::e_n(1), TrigField::e_n(-1));
    out["alpha_pi_units"] = alpha.str();
    VirasoroNormalization norm = normalize_to_virasoro(alpha);
    out["lambda_over_pi"] = norm.lambda_over_inv_pi.str();
    out["mu"] = norm.mu.str();
    if (table_compare) {
        out["table_index0_to_zero"] = table_comparison_json(
            compare_reference_table(max_index, ZeroModeConvention::drop));
        out["table_c0_as_h"] = table_comparison_json(
            compare_reference_table(max_index, ZeroModeConvention::c0_as_h));
    }
    return json_to_py(out);
}

py::list ladder_symbol_py(int k, const std::string& h) {
    if (h.empty()) {
        Catalog<RatQ> cat(RatQ::var());
        return json_to_py(op_json(cat.L(k), "h"));
    }
    Catalog<Rational> cat(parse_weight(h));
    return json_to_py(op_json(cat.L(k)));
}

py::list commutator_symbol_py(int i, int j, const std::string& h) {
    if (h.empty()) {
        Catalog<RatQ> cat(RatQ::var());
        return json_to_py(op_json(op_commutator(cat.L(i), cat.L(j)), "h"));
    }
    Catalog<Rational> cat(parse_weight(h));
    return json_to_py(op_json(op_commutator(cat.L(i), cat.L(j))));
}

py::list defect_matrix_entries_py(int i, int j, const std::string& h, int n, int start) {
    Catalog<Rational> cat(parse_weight(h));
    py::list out;
    for (const auto& [row, col, v] : defect_matrix(cat, i, j, n, start).nonzeros())
        out.append(py::make_tuple(row, col, v.str()));
    return out;
}

py::list verma_norms_py(const std::string& h, int n) {
    VermaBasis b = verma_norms(parse_weight(h), n);
    py::list out;
    for (const auto& g : b.norms) out.append(py::str(g.str()));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact operator calculus in lowest-weight modules";
    m.attr("__version__") = "0.1.0";

    m.def("verify_exact", &verify_exact_py, py::arg("max_index") = 8,
          py::arg("h") = std::string(),
          "Run the exact identity suites; empty weight means symbolic.");
    m.def("defect_report", &defect_report_py, py::arg("i"), py::arg("j"), py::arg("h"),
          py::arg("truncations") = std::vector<int>{100, 200, 400},
          py::arg("start") = 0,
          "Bracket-defect matrix analysis: rank scan, Hilbert-Schmidt sums, "
          "symbol mismatches.");
    m.def("central_charge_report", &central_charge_report_py, py::arg("i"),
          py::arg("h0"), py::arg("order") = 1,
          "Small-parameter expansion, central term and order-swap result.");
    m.def("cocycle_report", &cocycle_report_py, py::arg("max_index") = 4,
          py::arg("table_compare") = false,
          "Gelfand-Fuchs cocycle checks and Virasoro normalization.");
    m.def("ladder_symbol", &ladder_symbol_py, py::arg("k"),
          py::arg("h") = std::string(),
          "Graded symbol of L_k; empty weight means symbolic.");
    m.def("commutator_symbol", &commutator_symbol_py, py::arg("i"), py::arg("j"),
          py::arg("h") = std::string());
    m.def("defect_matrix_entries", &defect_matrix_entries_py, py::arg("i"), py::arg("j"),
          py::arg("h"), py::arg("n") = 16, py::arg("start") = 0,
          "Nonzero entries (row, col, value) of the exact defect matrix.");
    m.def("verma_norms", &verma_norms_py, py::arg("h"), py::arg("n") = 16,
          "Squared norms of the monomial basis, exact strings.");
}
