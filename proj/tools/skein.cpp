#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "skein/diagram.hpp"
#include "skein/knotgraph.hpp"
#include "skein/suites.hpp"

namespace {

using namespace skein;

int run_invariant(const std::string& spec, const std::string& format, int oracle_bound) {
    Family f = Family::parse(spec);
    InvariantReport r = make_report(f, oracle_bound);
    if (format == "json") {
        std::cout << report_json(r) << "\n";
    } else {
        std::cout << report_text(r);
    }
    return r.flags.empty() ? 0 : 2;
}

const char* status_name(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "FAIL";
        case CaseStatus::flag: return "flag";
    }
    return "?";
}

int run_verify(const std::string& suite, const SuiteOptions& opt, const std::string& format) {
    SuiteResult res = run_suite(suite, opt);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["suite"] = res.suite;
        auto rows = nlohmann::ordered_json::array();
        for (const SuiteCase& c : res.cases) {
            nlohmann::ordered_json row;
            row["case"] = c.label;
            row["status"] = c.status == CaseStatus::pass ? "pass"
                            : c.status == CaseStatus::fail ? "fail"
                                                           : "flag";
            if (!c.detail.empty()) row["detail"] = c.detail;
            rows.push_back(row);
        }
        j["cases"] = rows;
        j["pass"] = res.count(CaseStatus::pass);
        j["fail"] = res.count(CaseStatus::fail);
        j["flag"] = res.count(CaseStatus::flag);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "case,status,detail\n";
        for (const SuiteCase& c : res.cases) {
            std::cout << c.label << "," << status_name(c.status) << ",\"" << c.detail << "\"\n";
        }
    } else {
        for (const SuiteCase& c : res.cases) {
            std::cout << status_name(c.status) << "  " << c.label;
            if (!c.detail.empty()) std::cout << "  -- " << c.detail;
            std::cout << "\n";
        }
        std::cout << res.suite << ": " << res.count(CaseStatus::pass) << " pass, "
                  << res.count(CaseStatus::fail) << " fail, " << res.count(CaseStatus::flag)
                  << " flag\n";
    }
    return res.any_fail() ? 1 : 0;
}

std::vector<long long> default_window(WindowInvariant inv, Category cat, long long max) {
    std::vector<long long> w;
    switch (inv) {
        case WindowInvariant::beta:
            for (long long v = 1; v <= max; ++v) w.push_back(v);
            break;
        case WindowInvariant::det:
            for (long long v = 1; v <= max; v += 2) w.push_back(v);
            break;
        case WindowInvariant::span:
            w.push_back(0);
            for (long long v = cat == Category::knots ? 3 : 1; v <= max; ++v) w.push_back(v);
            break;
    }
    return w;
}

int run_graph(const std::string& move_str, const std::string& inv_str,
              const std::string& cat_str, long long max, std::vector<long long> window,
              const std::string& json_file, const std::string& dot_file,
              const std::string& csv_file, size_t thin_bound, int oracle_bound) {
    Move move;
    if (move_str == "crossing") {
        move = Move::crossing_change;
    } else if (move_str == "h2") {
        move = Move::h2;
    } else if (move_str == "h2-links") {
        move = Move::h2_links;
    } else {
        throw Error("unknown move '" + move_str + "' (crossing, h2, h2-links)");
    }
    WindowInvariant inv;
    if (inv_str == "beta") {
        inv = WindowInvariant::beta;
    } else if (inv_str == "det") {
        inv = WindowInvariant::det;
    } else if (inv_str == "span") {
        inv = WindowInvariant::span;
    } else {
        throw Error("unknown invariant '" + inv_str + "' (beta, det, span)");
    }
    Category cat = move == Move::h2_links ? Category::links
                   : cat_str == "links"   ? Category::links
                                          : Category::knots;

    QuotientSpec spec;
    spec.move = move;
    spec.invariant = inv;
    spec.category = cat;
    spec.window = window.empty() ? default_window(inv, cat, max) : std::move(window);

    Window w = build_window(spec, oracle_bound);

    std::cout << "window: " << invariant_name(inv) << " / " << move_name(move) << " / "
              << category_name(cat) << ", " << w.graph.vertices.size() << " vertices\n";
    std::cout << "edges: " << w.graph.edge_count() << ", certificates: " << w.certificates.size()
              << ", flagged: " << w.failed.size() << "\n";
    StructureReport sr = structure_predicates(w.graph);
    std::cout << "is_path: " << (sr.is_path ? "yes" : "no")
              << ", is_complete: " << (sr.is_complete ? "yes" : "no")
              << ", is_tree: " << (sr.is_tree ? "yes" : "no") << "\n";
    if (sr.diameter) {
        std::cout << "diameter: " << *sr.diameter << "\n";
        std::cout << "four-point delta: " << hyperbolicity_four_point(w.graph).str() << "\n";
        if (w.graph.vertices.size() <= thin_bound) {
            std::cout << "thin-triangle delta: "
                      << hyperbolicity_thin_triangle(w.graph, thin_bound).str()
                      << "  (vertex-sampled; interior points add at most 1/2)\n";
        } else {
            std::cout << "thin-triangle delta: skipped (" << w.graph.vertices.size()
                      << " vertices exceed the bound of " << thin_bound << ")\n";
        }
    } else {
        std::cout << "diameter: infinite (window is disconnected)\n";
    }
    for (const auto& c : w.failed) {
        std::cout << "flagged: " << c.cert.construction << " [" << c.cert.left.str() << " | "
                  << c.cert.right.str() << "]: " << c.note << "\n";
    }

    if (!json_file.empty()) std::ofstream(json_file) << window_json(w);
    if (!dot_file.empty()) std::ofstream(dot_file) << window_dot(w);
    if (!csv_file.empty()) std::ofstream(csv_file) << window_csv(w);
    return 0;
}

int run_tangle(const std::string& expr, int) {
    if (expr.find('^') != std::string::npos) {
        auto [t, cl] = parse_closed_tangle(expr);
        Laurent b = closure_bracket(t, cl);
        std::cout << "tangle:  " << format_tangle(t)
                  << (cl == Closure::numerator ? "^N" : "^D") << "\n";
        std::cout << "bracket: " << b.str() << "\n";
        if (!b.is_zero()) std::cout << "span_a:  " << b.span() << "\n";
        return 0;
    }
    TangleRef t = parse_tangle(expr);
    BracketVector v = bracket_vector(t);
    std::cout << "tangle: " << format_tangle(t) << "\n";
    std::cout << "f: " << v.f.str() << "\n";
    std::cout << "g: " << v.g.str() << "\n";
    return 0;
}

int run_export_pd(const std::string& spec, const std::string& out_file, int oracle_bound) {
    Family f = Family::parse(spec);
    PDCode d = f.synthesize(oracle_bound);
    std::string text = "# " + f.str() + "\n" + render_pd(d);
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream(out_file) << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skein: exact Kauffman bracket engine and quotient knot-graph windows"};
    app.require_subcommand(1);

    int oracle_bound = 24;
    app.add_option("--oracle-bound", oracle_bound, "state-sum crossing bound")->capture_default_str();

    auto* inv = app.add_subcommand("invariant", "invariant report for a family spec");
    std::string inv_spec, inv_format = "text";
    inv->add_option("spec", inv_spec, "family spec, e.g. torus:7 or pd:fixtures/8_20.pd")
        ->required();
    inv->add_option("--format", inv_format, "json|text")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "run a named regression suite");
    std::string ver_suite, ver_format = "text", ver_q;
    SuiteOptions opt;
    ver->add_option("suite", ver_suite, "suite name (see --list)")->required();
    ver->add_option("--max-n", opt.max_n, "torus-jones polynomial range")->capture_default_str();
    ver->add_option("--max-crossings", opt.max_crossings, "oracle-equivalence grid bound")
        ->capture_default_str();
    ver->add_option("--q", ver_q, "comma-separated twist parameters for tq-bracket");
    ver->add_option("--pairs", opt.pair_count, "tri-multiplicativity sample size")
        ->capture_default_str();
    ver->add_option("--format", ver_format, "json|csv|text")->capture_default_str();

    auto* lst = app.add_subcommand("suites", "list the verify suites");

    auto* gr = app.add_subcommand("graph", "build a quotient-graph window");
    std::string gr_move, gr_inv, gr_cat = "knots", gr_json, gr_dot, gr_csv;
    long long gr_max = 8;
    std::vector<long long> gr_window;
    size_t thin_bound = 12;
    gr->add_option("--move", gr_move, "crossing|h2|h2-links")->required();
    gr->add_option("--invariant", gr_inv, "beta|det|span")->required();
    gr->add_option("--category", gr_cat, "knots|links")->capture_default_str();
    gr->add_option("--max", gr_max, "largest invariant value in the window")
        ->capture_default_str();
    gr->add_option("--window", gr_window, "explicit window values (overrides --max)");
    gr->add_option("--json", gr_json, "write the window JSON here");
    gr->add_option("--dot", gr_dot, "write a DOT rendering here");
    gr->add_option("--csv", gr_csv, "write the certificate table here");
    gr->add_option("--thin-bound", thin_bound, "thin-triangle vertex bound")
        ->capture_default_str();

    auto* tg = app.add_subcommand("tangle", "evaluate a tangle expression");
    std::string tg_expr;
    tg->add_option("expr", tg_expr, "e.g. \"((-[1/3] + [1/5]) * [1])^D\"")->required();

    auto* ex = app.add_subcommand("export-pd", "synthesize the standard diagram as a PD file");
    std::string ex_spec, ex_out;
    ex->add_option("spec", ex_spec, "family spec")->required();
    ex->add_option("-o,--out", ex_out, "output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*inv) return run_invariant(inv_spec, inv_format, oracle_bound);
        if (*ver) {
            if (!ver_q.empty()) {
                std::stringstream ss(ver_q);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    try {
                        opt.q_list.push_back(std::stoi(tok));
                    } catch (const std::exception&) {
                        throw skein::Error("--q entry '" + tok + "' is not an integer");
                    }
                }
            }
            opt.oracle_bound = oracle_bound;
            return run_verify(ver_suite, opt, ver_format);
        }
        if (*lst) {
            for (const auto& def : skein::suite_manifest()) {
                std::cout << def.name << ": " << def.description << "\n";
            }
            return 0;
        }
        if (*gr) {
            return run_graph(gr_move, gr_inv, gr_cat, gr_max, gr_window, gr_json, gr_dot, gr_csv,
                             thin_bound, oracle_bound);
        }
        if (*tg) return run_tangle(tg_expr, oracle_bound);
        if (*ex) return run_export_pd(ex_spec, ex_out, oracle_bound);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
