// cycseq: exact quadratic-cyclic-sequence toolkit.
//
// JSON in, JSON out; every argument that expects JSON accepts either an
// inline literal or a path to a file containing one. Exit codes: 0 success,
// 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cycseq/digraph.hpp"
#include "cycseq/json_io.hpp"
#include "cycseq/lattice.hpp"
#include "cycseq/legitimacy.hpp"
#include "cycseq/qcs.hpp"
#include "cycseq/svg.hpp"
#include "cycseq/walks.hpp"

using namespace cycseq;

namespace {

json load_json_arg(const std::string& arg) {
    std::string text = arg;
    auto first = text.find_first_not_of(" \t\r\n");
    bool inline_json = first != std::string::npos &&
                       (text[first] == '[' || text[first] == '{' ||
                        text[first] == '"');
    if (!inline_json) {
        std::ifstream in(arg);
        if (!in)
            throw Error("cannot open input file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return json::parse(text);
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw Error("cannot write output file: " + out_path);
    out << j.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw Error("cannot write output file: " + out_path);
    out << text;
}

Regime parse_regime(const std::string& spec, std::optional<unsigned>& n) {
    if (spec == "path") {
        n.reset();
        return Regime::path;
    }
    if (spec.rfind("cycle:", 0) == 0) {
        n = static_cast<unsigned>(std::stoul(spec.substr(6)));
        return Regime::cycle;
    }
    throw CLI::ValidationError("--regime", "expected 'path' or 'cycle:<n>'");
}

json search_result_json(const SearchResult& res) {
    json j;
    if (!res.best) {
        j["found"] = false;
        return j;
    }
    j["found"] = true;
    j["total"] = res.best->total;
    j["coefficients"] = res.best->coeffs;
    json all = json::array();
    for (const auto& hit : res.minimal_hits)
        all.push_back(hit);
    j["minimal_hits"] = all;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quadratic cyclic sequences, legitimacy decisions and "
                 "fixed-turning-angle walks"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("-o,--output", out_path, "write output to a file instead of stdout");

    // ---- build-real ----------------------------------------------------
    auto* build = app.add_subcommand(
        "build-real", "build a real QCS from q (all coefficients positive)");
    std::string build_q, build_ordering;
    bool build_min_zero = false;
    build->add_option("-q,--q", build_q, "coefficients of q, ascending (JSON)")
        ->required();
    build->add_option("--ordering", build_ordering,
                      "explicit exponent ordering (JSON array)");
    build->add_flag("--min-zero", build_min_zero,
                    "normalize so the minimum is 0 and comes first");

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check the quadratic difference relation");
    std::string verify_values;
    double verify_tol = 1e-9;
    verify->add_option("values", verify_values, "sequence values (JSON array)")
        ->required();
    verify->add_option("--tol", verify_tol, "numeric tolerance");

    // ---- legit ----------------------------------------------------------
    auto* legit = app.add_subcommand("legit", "decide legitimacy of a count vector");
    std::string legit_poly, legit_regime = "path";
    bool legit_witness = false;
    legit->add_option("poly", legit_poly, "coefficient vector (JSON)")->required();
    legit->add_option("--regime", legit_regime, "path | cycle:<n>");
    legit->add_flag("--witness", legit_witness, "include an explicit ordering");

    // ---- cyclotomic -----------------------------------------------------
    auto* cyclo = app.add_subcommand("cyclotomic", "print the n-th cyclotomic polynomial");
    unsigned cyclo_n = 0;
    cyclo->add_option("n", cyclo_n, "index")->required();

    // ---- walk-render ----------------------------------------------------
    auto* render = app.add_subcommand("walk-render", "render a walk to SVG");
    std::string render_spec;
    render->add_option("spec", render_spec,
                       "walk spec JSON: {exponents|coeffs, n, m?} or "
                       "{exponents, root_poly}")
        ->required();

    // ---- symmetry --------------------------------------------------------
    auto* symmetry = app.add_subcommand("symmetry", "edge usage and antipodal balance");
    std::string sym_poly;
    unsigned sym_n = 0;
    symmetry->add_option("poly", sym_poly, "coefficient vector (JSON)")->required();
    symmetry->add_option("--n", sym_n, "even modulus")->required();

    // ---- search-asym ------------------------------------------------------
    auto* asym = app.add_subcommand("search-asym",
                                    "smallest closed legitimate antipodal-unbalanced vector");
    unsigned asym_n = 12;
    long long asym_total = 30;
    unsigned asym_threads = 1;
    asym->add_option("--n", asym_n, "even modulus")->required();
    asym->add_option("--max-total", asym_total, "total budget")->required();
    asym->add_option("--threads", asym_threads, "worker threads");

    // ---- search-omit -------------------------------------------------------
    auto* omit = app.add_subcommand("search-omit",
                                    "smallest closed legitimate vector omitting edges");
    unsigned omit_n = 12, omit_count = 1;
    long long omit_total = 28;
    unsigned omit_threads = 1;
    omit->add_option("--n", omit_n, "modulus")->required();
    omit->add_option("--omit", omit_count, "minimum number of omitted edges");
    omit->add_option("--max-total", omit_total, "total budget")->required();
    omit->add_option("--threads", omit_threads, "worker threads");

    // ---- verify-paper -------------------------------------------------------
    auto* vp = app.add_subcommand(
        "verify-paper", "run the built-in reproduction checklist and print a table");

    // ---- lattice-poly ---------------------------------------------------------
    auto* lpoly = app.add_subcommand("lattice-poly",
                                     "defining polynomial of a 2-step lattice walk");
    unsigned lp_n = 4;
    long long lp_len = 0, lp_a = 0, lp_b = 0;
    std::string lp_end;
    lpoly->add_option("--n", lp_n, "4 or 6")->required();
    lpoly->add_option("--len", lp_len, "walk length (even)")->required();
    lpoly->add_option("--end", lp_end, "endpoint k,l")->required();
    auto* lp_opt_a = lpoly->add_option("--a", lp_a, "coefficient b5 (n = 6)");
    auto* lp_opt_b = lpoly->add_option("--b", lp_b, "coefficient b4 (n = 6)");

    // ---- lattice-count -----------------------------------------------------------
    auto* lcount = app.add_subcommand("lattice-count",
                                      "path count and probability for a square-lattice walk");
    long long lc_len = 0;
    std::string lc_end;
    lcount->add_option("--len", lc_len, "walk length (even)")->required();
    lcount->add_option("--end", lc_end, "endpoint k,l")->required();

    // ---- concat ----------------------------------------------------------------
    auto* concat = app.add_subcommand("concat", "splice two sequences: p1 + x^k p2");
    std::string concat_p1, concat_p2;
    unsigned concat_k = 0;
    concat->add_option("--p1", concat_p1, "first polynomial (JSON)")->required();
    concat->add_option("--p2", concat_p2, "second polynomial (JSON)")->required();
    concat->add_option("-k,--k", concat_k, "shift exponent");

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto parse_endpoint = [](const std::string& s) {
        auto comma = s.find(',');
        if (comma == std::string::npos)
            throw Error("endpoint must be given as k,l");
        Endpoint e;
        e.k = std::stol(s.substr(0, comma));
        e.l = std::stol(s.substr(comma + 1));
        return e;
    };

    try {
        if (build->parsed()) {
            IntPoly q = poly_from_json(load_json_arg(build_q));
            std::optional<IncrementSeq> ordering;
            if (!build_ordering.empty()) {
                IncrementSeq s;
                s.exponents =
                    load_json_arg(build_ordering).get<std::vector<long>>();
                s.cyclic = true;
                ordering = s;
            }
            auto built = build_real_qcs(q, ordering);
            json j;
            j["p"] = poly_to_json(built.p);
            j["increments"] = increments_to_json(built.increments);
            j["order"] = built.values.size();
            if (built.root_rational) {
                j["y"] = rat_to_string(built.root_rat);
                j["gamma"] = rat_to_string(built.gamma_rat);
                j["values"] = values_to_json(built.values_rat);
                j["normalized"] =
                    values_to_json(normalize_integer(built.values_rat, build_min_zero));
            } else {
                j["y"] = built.root;
                j["y_interval"] = {rat_to_string(built.root_iv.lo),
                                   rat_to_string(built.root_iv.hi)};
                j["gamma"] = built.gamma;
                j["values"] = built.values;
            }
            emit(j, out_path);
        } else if (verify->parsed()) {
            json input = load_json_arg(verify_values);
            json vals = input.is_object() ? input.at("values") : input;
            json j;
            if (values_all_rational(vals)) {
                auto r = verify_qcs(values_rat_from_json(vals));
                j["is_qcs"] = r.is_qcs;
                if (r.gamma)
                    j["gamma"] = rat_to_string(*r.gamma);
                json per = json::array();
                for (const auto& g : r.vertex_gamma)
                    per.push_back(g ? json(rat_to_string(*g)) : json(nullptr));
                j["vertex_gamma"] = per;
            } else {
                auto r = verify_qcs(values_complex_from_json(vals), verify_tol);
                j["is_qcs"] = r.is_qcs;
                if (r.gamma)
                    j["gamma"] = *r.gamma;
                json per = json::array();
                for (const auto& g : r.vertex_gamma)
                    per.push_back(g ? json({g->real(), g->imag()}) : json(nullptr));
                j["vertex_gamma"] = per;
            }
            emit(j, out_path);
        } else if (legit->parsed()) {
            std::optional<unsigned> n;
            Regime regime = parse_regime(legit_regime, n);
            IntPoly p = poly_from_json(load_json_arg(legit_poly));
            CoeffVector v = CoeffVector::from_poly(p, regime, n);
            auto d = is_legitimate(v);
            json j;
            j["legitimate"] = d.legitimate;
            j["reason"] = d.reason;
            if (auto k = violates_necessary(v))
                j["necessary_violation"] = *k;
            if (legit_witness && d.witness)
                j["witness"] = increments_to_json(*d.witness);
            emit(j, out_path);
        } else if (cyclo->parsed()) {
            json j;
            j["n"] = cyclo_n;
            j["coefficients"] = poly_to_json(cyclotomic(cyclo_n));
            j["text"] = cyclotomic(cyclo_n).to_string();
            emit(j, out_path);
        } else if (render->parsed()) {
            json spec = load_json_arg(render_spec);
            TurningWalk w;
            if (spec.contains("exponents")) {
                w.increments.exponents =
                    spec.at("exponents").get<std::vector<long>>();
                w.increments.cyclic = spec.value("cyclic", true);
            }
            if (spec.contains("n")) {
                unsigned n = spec.at("n").get<unsigned>();
                long m = spec.value("m", 1);
                w.unity = {n, m};
                w.increments.modulus = n;
                if (!spec.contains("exponents")) {
                    IntPoly p = poly_from_json(spec.at("coeffs"));
                    auto d = is_legitimate(CoeffVector::from_poly(p, Regime::cycle, n));
                    if (!d.legitimate)
                        throw IllegitimateInput("coefficients admit no ordering");
                    w.increments = *d.witness;
                }
            } else if (spec.contains("root_poly")) {
                IntPoly rp = poly_from_json(spec.at("root_poly"));
                auto roots = aberth_roots(rp);
                std::complex<double> pick{0, 0};
                double best = 1e18;
                for (auto r : roots) {
                    if (r.imag() <= 0)
                        continue;
                    double d = std::abs(std::abs(r) - 1.0);
                    if (d < best) {
                        best = d;
                        pick = r;
                    }
                }
                if (best > 1e-6)
                    throw NoUnitModulusRoot("root_poly has no unit-modulus root");
                w.root = pick;
                w.root_poly = rp;
            } else {
                throw Error("walk spec needs either n/m or root_poly");
            }
            emit_text(render_svg(realize(w)), out_path);
        } else if (symmetry->parsed()) {
            IntPoly p = poly_from_json(load_json_arg(sym_poly));
            auto rep = symmetry_report(p, sym_n);
            json j;
            j["all_edges_used"] = rep.all_edges_used;
            j["antipodal_balanced"] = rep.antipodal_balanced;
            j["missing_edges"] = rep.missing_edges;
            j["unbalanced_pairs"] = rep.unbalanced_pairs;
            j["closed"] = closed_exact(p, sym_n);
            emit(j, out_path);
        } else if (asym->parsed()) {
            emit(search_result_json(search_min_asymmetric(asym_n, asym_total,
                                                          asym_threads)),
                 out_path);
        } else if (omit->parsed()) {
            emit(search_result_json(search_min_omitting(omit_n, omit_count,
                                                        omit_total, omit_threads)),
                 out_path);
        } else if (vp->parsed()) {
            auto checks = reference_checks();

            // Concatenation identities.
            {
                auto c1 = concatenate(IntPoly{2, 7, 7, 2}, IntPoly{2, 3, 1}, 1);
                bool ok1 = c1.p == IntPoly{2, 9, 10, 3} &&
                           c1.ordering.exponents.size() == 24;
                checks.push_back({"concatenation p1 + x p2", ok1,
                                  ok1 ? "3x^3+10x^2+9x+2 with a length-24 ordering"
                                      : "mismatch"});
                auto c0 = concatenate(IntPoly{2, 7, 7, 2}, IntPoly{2, 3, 1}, 0);
                bool ok0 = c0.p == IntPoly{4, 10, 8, 2};
                checks.push_back({"concatenation p1 + p2", ok0,
                                  ok0 ? "(x+1)(x+2)(2x+2)" : "mismatch"});
                auto cc = concatenate(IntPoly{2, 5, 3}, IntPoly{2, 5, 3}, 2);
                bool okc = cc.p == IntPoly{2, 5, 5, 5, 3} &&
                           cc.ordering.exponents.size() == 20;
                checks.push_back({"self-concatenation two exponents up", okc,
                                  okc ? "(x^2+1)(3x^2+5x+2), order 20"
                                      : "mismatch"});
            }
            // Square-lattice probabilities.
            {
                bool ok = probability_n4(IntPoly{1, 1, 1, 1}) == make_rat(1, 4) &&
                          probability_n4(IntPoly{1, 1}) == make_rat(1, 4);
                checks.push_back({"square-lattice probabilities", ok,
                                  ok ? "both worked examples give 1/4" : "mismatch"});
            }
            // Triangular-lattice pair.
            {
                bool ok =
                    poly_n6(12, {3, 5}, 1, 0) == IntPoly{4, 4, 2, 1, 0, 1} &&
                    poly_n6(12, {3, 5}, 0, 1) == IntPoly{4, 5, 1, 1, 1} &&
                    !is_legitimate(CoeffVector::from_poly(poly_n6(10, {3, 5}, 0, 1),
                                                          Regime::cycle, 6))
                         .legitimate;
                checks.push_back({"triangular-lattice length-12 pair", ok,
                                  ok ? "two length-12 paths; length-10 rejected"
                                     : "mismatch"});
            }

            bool all = true;
            std::size_t width = 0;
            for (const auto& c : checks)
                width = std::max(width, c.name.size());
            for (const auto& c : checks) {
                all = all && c.pass;
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                          << std::string(width - c.name.size() + 2, ' ')
                          << c.detail << "\n";
            }
            std::cout << (all ? "all checks passed" : "some checks FAILED")
                      << "\n";
            return all ? 0 : 1;
        } else if (lpoly->parsed()) {
            Endpoint e = parse_endpoint(lp_end);
            IntPoly p;
            if (lp_n == 4) {
                p = poly_n4(lp_len, e);
            } else if (lp_n == 6) {
                if (lp_opt_a->count() == 0 || lp_opt_b->count() == 0)
                    throw Error("n = 6 needs --a and --b");
                p = poly_n6(lp_len, e, lp_a, lp_b);
            } else {
                throw Error("supported lattices: --n 4 or --n 6");
            }
            json j;
            j["coefficients"] = poly_to_json(p);
            j["text"] = p.to_string();
            j["legitimate"] = is_legitimate(CoeffVector::from_poly(
                                                p, Regime::cycle, lp_n))
                                  .legitimate;
            emit(j, out_path);
        } else if (lcount->parsed()) {
            Endpoint e = parse_endpoint(lc_end);
            IntPoly p = poly_n4(lc_len, e);
            json j;
            j["coefficients"] = poly_to_json(p);
            j["count"] = count_paths_n4(p).get_str();
            j["probability"] = rat_to_string(probability_n4(p));
            emit(j, out_path);
        } else if (concat->parsed()) {
            IntPoly p1 = poly_from_json(load_json_arg(concat_p1));
            IntPoly p2 = poly_from_json(load_json_arg(concat_p2));
            auto c = concatenate(p1, p2, concat_k);
            json j;
            j["p"] = poly_to_json(c.p);
            j["text"] = c.p.to_string();
            j["ordering"] = increments_to_json(c.ordering);
            emit(j, out_path);
        }
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
