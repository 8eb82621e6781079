#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "qrsym/json_io.hpp"

using namespace qrsym;

namespace {

constexpr const char* kVersion = "0.1.0";

struct OutputSink {
    std::string path;    // empty: stdout
    std::string format;  // json | table | csv

    void write(const Json& report) const {
        std::string text;
        if (format == "table") {
            for (const auto& check : report.at("checks"))
                text += (check.at("pass").get<bool>() ? "PASS " : "FAIL ") +
                        check.at("name").get<std::string>() + "\n";
        } else {
            text = report.dump(2) + "\n";
        }
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path, std::ios::binary);
            out << text;
        }
    }
};

Json make_envelope(const std::string& command, Json config) {
    Json j;
    j["command"] = command;
    j["version"] = kVersion;
    j["config"] = std::move(config);
    j["checks"] = Json::array();
    j["payload"] = Json::object();
    return j;
}

void add_check(Json& envelope, const std::string& name, bool pass) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    envelope["checks"].push_back(std::move(c));
}

bool all_pass(const Json& envelope) {
    for (const auto& c : envelope.at("checks"))
        if (!c.at("pass").get<bool>()) return false;
    return true;
}

std::vector<int> parse_truncations(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int v = std::stoi(item);
        if (v <= 0 || (!out.empty() && v <= out.back()))
            throw BadInput("truncations must be strictly increasing positive integers");
        out.push_back(v);
    }
    if (out.empty()) throw BadInput("no truncations given");
    return out;
}

// ---- verify-exact ----------------------------------------------------------

template <class K>
int run_exact_suite(Json& envelope, const Catalog<K>& cat, int max_index, bool skip_q,
                    const std::string& skip_reason) {
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
            auto rep = verify_sl2(cat, i, j);
            add_check(envelope, rep.name, rep.pass);
        }
    if (skip_q) {
        envelope["payload"]["berezin_skipped"] = skip_reason;
    } else {
        auto [diag, rel] = verify_berezin(cat);
        add_check(envelope, diag.name, diag.pass);
        add_check(envelope, rel.name, rel.pass);
    }
    for (int i = -1; i <= 1; ++i) {
        for (int n = -max_index; n <= max_index; ++n) {
            auto repL = verify_tensor_relation(cat, i, n, Family::L);
            add_check(envelope, repL.name, repL.pass);
            auto repJ = verify_tensor_relation(cat, i, n, Family::J);
            add_check(envelope, repJ.name, repJ.pass);
        }
    }
    for (int n = -1; n <= 5; ++n)
        for (int m = -1; m <= 5; ++m) {
            auto rep = verify_witt_halfplane(cat, n, m);
            add_check(envelope, rep.name + "+", rep.pass);
        }
    for (int n = -5; n <= 1; ++n)
        for (int m = -5; m <= 1; ++m) {
            auto rep = verify_witt_halfplane(cat, n, m);
            add_check(envelope, rep.name + "-", rep.pass);
        }
    PolyQ t(std::vector<Rational>{Rational(0), Rational(1)});
    for (int n = -1; n <= 3; ++n) {
        for (int p = 1; p <= 3; ++p) {
            PolyQ f = t.pow(p);
            auto repD = verify_fD_commutation(cat, n, f);
            add_check(envelope, repD.name + ".t^" + std::to_string(p), repD.pass);
            auto repF = verify_fF_commutation(cat, n, f);
            add_check(envelope, repF.name + ".t^" + std::to_string(p), repF.pass);
        }
    }
    return 0;
}

int cmd_verify_exact(const std::string& h_str, int max_index, const OutputSink& sink) {
    Json config;
    config["h"] = h_str.empty() ? "symbolic" : h_str;
    config["max_index"] = max_index;
    Json envelope = make_envelope("verify-exact", config);
    if (h_str.empty()) {
        Catalog<RatQ> cat(RatQ::var());
        run_exact_suite(envelope, cat, max_index, false, "");
    } else {
        Rational h = Rational::from_string(h_str);
        Catalog<Rational> cat(h);
        bool skip_q = h == Rational(1, 2);
        run_exact_suite(envelope, cat, max_index, skip_q,
                        "q undefined at h = 1/2 (2h - 1 = 0)");
    }
    bool ok = all_pass(envelope);
    envelope["pass"] = ok;
    sink.write(envelope);
    return ok ? 0 : 1;
}

// ---- defect ----------------------------------------------------------------

int cmd_defect(int i, int j, const std::string& h_str, const std::string& truncs,
               const std::string& family, int start, bool emit_entries,
               const OutputSink& sink) {
    Json config;
    config["i"] = i;
    config["j"] = j;
    config["h"] = h_str;
    config["truncations"] = truncs;
    config["family"] = family;
    config["start"] = start;
    Json envelope = make_envelope("defect", config);
    Rational h = Rational::from_string(h_str);
    std::vector<int> cutoffs = parse_truncations(truncs);
    int top = cutoffs.back();

    Catalog<Rational> cat(h);
    Family fam = family == "J" ? Family::J : Family::L;
    if (h == Rational(0) && start == 0 && fam == Family::L) {
        // degenerate weight: work on the invariant window above the lowest
        // index (the quotient behavior)
        start = 1;
        envelope["payload"]["window_start"] = 1;
        envelope["payload"]["note"] = "degenerate weight; using the quotient window";
    }

    GradedOp<Rational> sym =
        fam == Family::L ? cat.defect(i, j) : cat.defect_J(i, j);
    envelope["payload"]["symbol"] = op_json(sym);
    envelope["payload"]["membership"] = membership_json(validate_membership(sym));

    if (sym.is_zero() && fam == Family::L) {
        // Short-circuit only when the matrix agrees (no removable corners).
        BandedMatrix probe = defect_matrix(cat, i, j, std::min(top, 64), start);
        if (probe.is_zero()) {
            envelope["payload"]["zero_defect"] = true;
            add_check(envelope, "defect_zero", true);
            envelope["pass"] = true;
            sink.write(envelope);
            return 0;
        }
    }

    auto build = [&](int n) {
        return fam == Family::L ? defect_matrix(cat, i, j, n, start)
                                : defect_matrix_J(cat, i, j, n, start);
    };
    BandedMatrix m = build(top);
    Json stats;
    stats["size"] = m.size();
    stats["bandwidth"] = m.bandwidth();
    stats["nonzeros"] = m.nonzeros().size();
    stats["trace"] = m.trace().str();
    envelope["payload"]["matrix_stats"] = std::move(stats);
    if (emit_entries) envelope["payload"]["matrix"] = matrix_json(m);

    add_check(envelope, "defect_homogeneous",
              sym.is_zero() || sym.grades() == std::vector<int>{i + j});

    RankReport rank = finite_rank_scan(build, cutoffs);
    envelope["payload"]["rank"] = rank_report_json(rank);

    if (h > Rational(0)) {
        VermaBasis basis = verma_norms(h, top + start, start);
        HSReport hs = hs_partial_norm(m, basis, cutoffs);
        envelope["payload"]["hs"] = hs_report_json(hs);
        bool monotone = true;
        for (size_t t = 1; t < hs.partial.size(); ++t)
            monotone = monotone && hs.partial[t].second >= hs.partial[t - 1].second;
        add_check(envelope, "hs_monotone", monotone);
    } else {
        envelope["payload"]["hs"] = "skipped: norms not positive";
    }

    if (fam == Family::L)
        envelope["payload"]["matrix_vs_symbol_mismatch"] =
            matrix_vs_symbol_mismatch(cat, i, j, std::min(top, 64), start);

    bool ok = all_pass(envelope);
    envelope["pass"] = ok;
    sink.write(envelope);
    return ok ? 0 : 1;
}

// ---- central-charge --------------------------------------------------------

int cmd_central_charge(int i, const std::string& h0_str, int order,
                       const OutputSink& sink) {
    Json config;
    config["i"] = i;
    config["h0"] = h0_str;
    config["order"] = order;
    Json envelope = make_envelope("central-charge", config);
    Rational h0 = Rational::from_string(h0_str);

    ExpansionSeries series = expand_defect(i, -i, h0, order);
    envelope["payload"]["expansion"] = expansion_json(series);
    CentralReport rep = central_coefficient(i, h0);
    RatQ swap = order_swap_experiment(i, h0);
    envelope["payload"]["central"] = central_report_json(rep, swap, series);

    add_check(envelope, "order0_empty", series.coeff[0].is_zero());
    add_check(envelope, "order_swap_zero", swap.is_zero());
    add_check(envelope, "kappa_finite", rep.kappa.has_value());
    add_check(envelope, "hs_residual", rep.hs_residual);
    bool ok = all_pass(envelope);
    envelope["pass"] = ok;
    sink.write(envelope);
    return ok ? 0 : 1;
}

// ---- cocycle ---------------------------------------------------------------

int cmd_cocycle(int max_index, long triples, bool table_compare, unsigned seed,
                const OutputSink& sink) {
    Json config;
    config["max_index"] = max_index;
    config["triples"] = triples;
    config["table_compare"] = table_compare;
    config["seed"] = seed;
    Json envelope = make_envelope("cocycle", config);

    if (triples != 0) {
        bool jacobi_ok = true, cocycle_ok = true, antisym_ok = true;
        auto run_triple = [&](int a, int b, int c) {
            jacobi_ok = jacobi_ok &&
                        witt_jacobi_residual_zero(witt_e(a), witt_e(b), witt_e(c));
            VirasoroElement va{witt_e(a), {}}, vb{witt_e(b), {}}, vc{witt_e(c), {}};
            jacobi_ok = jacobi_ok && virasoro_jacobi_residual_zero(va, vb, vc);
            cocycle_ok = cocycle_ok &&
                         cocycle_residual_over_pi(TrigField::e_n(a), TrigField::e_n(b),
                                                  TrigField::e_n(c))
                             .is_zero();
            antisym_ok = antisym_ok &&
                         (gelfand_fuchs_over_pi(TrigField::e_n(a), TrigField::e_n(b)) +
                          gelfand_fuchs_over_pi(TrigField::e_n(b), TrigField::e_n(a)))
                             .is_zero();
        };
        if (triples < 0) {
            for (int a = -max_index; a <= max_index; ++a)
                for (int b = -max_index; b <= max_index; ++b)
                    for (int c = -max_index; c <= max_index; ++c) run_triple(a, b, c);
        } else {
            std::mt19937 rng(seed);
            std::uniform_int_distribution<int> idx(-max_index, max_index);
            for (long t = 0; t < triples; ++t) run_triple(idx(rng), idx(rng), idx(rng));
        }
        add_check(envelope, "witt_virasoro_jacobi", jacobi_ok);
        add_check(envelope, "cocycle_identity", cocycle_ok);
        add_check(envelope, "gf_antisymmetry", antisym_ok);
        GaussianRational alpha = gelfand_fuchs_over_pi(TrigField::e_n(1), TrigField::e_n(-1));
        Json gf;
        gf["alpha_pi_units"] = alpha.str();  // value on (e_1, e_-1)
        bool norm_ok = true;
        try {
            VirasoroNormalization norm = normalize_to_virasoro(alpha);
            gf["lambda_over_pi"] = norm.lambda_over_inv_pi.str();
            gf["mu"] = norm.mu.str();
        } catch (const TrivialCocycleClass&) {
            norm_ok = false;
        }
        envelope["payload"]["normalization"] = std::move(gf);
        add_check(envelope, "virasoro_normalization", norm_ok);
    }

    if (table_compare) {
        Json tables;
        tables["index0_to_zero"] =
            table_comparison_json(compare_reference_table(max_index, ZeroModeConvention::drop));
        tables["c0_as_h"] =
            table_comparison_json(compare_reference_table(max_index, ZeroModeConvention::c0_as_h));
        envelope["payload"]["table_comparison"] = std::move(tables);
    }

    bool ok = all_pass(envelope);
    envelope["pass"] = ok;
    sink.write(envelope);
    return ok ? 0 : 1;
}

// ---- export-matrix ---------------------------------------------------------

int cmd_export_matrix(const std::string& op_spec, const std::string& h_str, int n,
                      int start, const OutputSink& sink) {
    Rational h = Rational::from_string(h_str);
    Catalog<Rational> cat(h);
    BandedMatrix m(start, n);
    auto colon = op_spec.find(':');
    if (colon == std::string::npos) throw BadInput("op spec must be L:k, J:k or defect:i,j");
    std::string kind = op_spec.substr(0, colon);
    std::string args = op_spec.substr(colon + 1);
    if (kind == "L") {
        m = matrix_of(cat.L(std::stoi(args)), n, start);
    } else if (kind == "J") {
        m = matrix_of(cat.J(std::stoi(args)), n, start);
    } else if (kind == "defect") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw BadInput("defect spec needs i,j");
        m = defect_matrix(cat, std::stoi(args.substr(0, comma)),
                          std::stoi(args.substr(comma + 1)), n, start);
    } else {
        throw BadInput("unknown op kind: " + kind);
    }
    if (sink.format == "csv") {
        std::string text = matrix_to_csv(m);
        if (sink.path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(sink.path, std::ios::binary);
            out << text;
        }
    } else {
        Json envelope = make_envelope("export-matrix", Json{{"op", op_spec},
                                                            {"h", h_str},
                                                            {"n", n},
                                                            {"start", start}});
        envelope["payload"]["matrix"] = matrix_json(m);
        envelope["pass"] = true;
        sink.write(envelope);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact operator calculus in lowest-weight modules: identity "
                 "verification, bracket-defect analysis, central-term asymptotics"};
    app.require_subcommand(1);
    // --h is a weight flag here, so help lives on --help only
    app.set_help_flag("--help", "print help");

    std::string h_str, h0_str = "1/2", truncs = "100,200,400,800";
    std::string family = "L", format = "json", out_path, op_spec = "L:2";
    int i = 2, j = -2, max_index = 8, order = 1, n = 16, start = 0;
    long triples = -1;
    bool table_compare = false, emit_entries = false;
    unsigned seed = 0;

    auto* verify = app.add_subcommand("verify-exact", "run the exact identity suites");
    verify->set_help_flag("--help", "print help");
    verify->add_option("--h", h_str, "weight as an exact rational p/q (default: symbolic)");
    verify->add_option("--max-index", max_index, "tensor-relation index range");
    verify->add_option("--format", format, "json|table");
    verify->add_option("--out", out_path, "output path (default stdout)");

    auto* defect = app.add_subcommand("defect", "bracket-defect matrix, HS and rank analysis");
    defect->set_help_flag("--help", "print help");
    defect->add_option("--i", i)->required();
    defect->add_option("--j", j)->required();
    defect->add_option("--h", h_str, "weight as an exact rational p/q")->required();
    defect->add_option("--truncations", truncs, "increasing cutoffs, comma separated");
    defect->add_option("--family", family, "L|J");
    defect->add_option("--start", start, "first basis index of the window");
    defect->add_flag("--entries", emit_entries, "include all matrix entries");
    defect->add_option("--format", format, "json|table");
    defect->add_option("--out", out_path);

    auto* central = app.add_subcommand("central-charge",
                                       "small-parameter expansion and central term");
    central->set_help_flag("--help", "print help");
    central->add_option("--i", i)->required();
    central->add_option("--h0", h0_str, "base weight (1/2 or 1 reproduce the classical values)");
    central->add_option("--order", order, "expansion order (<= 4)");
    central->add_option("--format", format, "json|table");
    central->add_option("--out", out_path);

    auto* cocycle = app.add_subcommand("cocycle", "circle-field cocycle suite");
    cocycle->set_help_flag("--help", "print help");
    cocycle->add_option("--max-index", max_index, "basis index bound");
    cocycle->add_option("--triples", triples, "-1: exhaustive, 0: empty run, n: random");
    cocycle->add_flag("--table-compare", table_compare, "emit the reference-table comparison");
    cocycle->add_option("--seed", seed, "seed for randomized triples");
    cocycle->add_option("--format", format, "json|table");
    cocycle->add_option("--out", out_path);

    auto* exportm = app.add_subcommand("export-matrix", "write one exact matrix");
    exportm->set_help_flag("--help", "print help");
    exportm->add_option("--op", op_spec, "L:k | J:k | defect:i,j")->required();
    exportm->add_option("--h", h_str, "weight as an exact rational p/q")->required();
    exportm->add_option("--n", n, "truncation size");
    exportm->add_option("--start", start, "first basis index");
    exportm->add_option("--format", format, "csv|json");
    exportm->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OutputSink sink{out_path, format};
    auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (verify->parsed()) {
            rc = cmd_verify_exact(h_str, max_index, sink);
        } else if (defect->parsed()) {
            rc = cmd_defect(i, j, h_str, truncs, family, start, emit_entries, sink);
        } else if (central->parsed()) {
            if (i < 2 || order < 0 || order > 4) {
                std::cerr << "central-charge requires --i >= 2 and 0 <= order <= 4\n";
                return 2;
            }
            rc = cmd_central_charge(i, h0_str, order, sink);
        } else if (cocycle->parsed()) {
            rc = cmd_cocycle(max_index, triples, table_compare, seed, sink);
        } else if (exportm->parsed()) {
            rc = cmd_export_matrix(op_spec, h_str, n, start, sink);
        }
    } catch (const ModuleUndefined& e) {
        Json err;
        err["error"] = "module-undefined";
        err["detail"] = e.what();
        std::cerr << err.dump() << "\n";
        return 3;
    } catch (const BadInput& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "elapsed: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms\n";
    return rc;
}
