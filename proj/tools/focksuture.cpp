// Command-line front end: word-order queries, operator application, duality,
// chord diagrams, suture elements, the verification suites, and the full-rank
// pairing demo. All subcommands accept --json for machine-readable output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "focksuture/duality.hpp"
#include "focksuture/json_io.hpp"
#include "focksuture/suture.hpp"
#include "focksuture/verify.hpp"
#include "focksuture/word.hpp"

using namespace focksuture;
using nlohmann::json;

namespace {

bool g_json = false;

void emit(const json& j, const std::string& text) {
    if (g_json) std::cout << j.dump(2) << "\n";
    else std::cout << text << "\n";
}

std::string describe(const FockElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        int64_t a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << (w.empty() ? "1" : to_string(w));
        first = false;
    }
    return os.str();
}

// Accepts a word ("xy", "1" or "" for the vacuum) or a JSON FockElement.
FockElement parse_element(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{')
        return json::parse(arg).get<FockElement>();
    if (arg == "1" || arg.empty()) return FockElement::vacuum();
    return FockElement::single(parse_word(arg), 1);
}

// Accepts a word (its basis diagram) or a JSON ChordDiagram.
ChordDiagram parse_diagram(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{')
        return json::parse(arg).get<ChordDiagram>();
    if (arg == "1" || arg.empty()) return vacuum_diagram();
    return basis_diagram(parse_word(arg));
}

int default_max_n() {
    if (const char* env = std::getenv("FOCKSUTURE_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 6;
}

std::string vec_str(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s + "]";
}

int run_verify(const std::string& which, const VerifyOptions& opts) {
    std::vector<VerificationReport> reports;
    if (which == "all") {
        reports = run_all(opts);
    } else {
        reports.push_back(run_suite(which, opts));
    }
    bool all_pass = true;
    if (g_json) {
        std::cout << json(reports).dump(2) << "\n";
        for (const auto& r : reports) all_pass = all_pass && r.passed();
        return all_pass ? 0 : 1;
    }
    for (const auto& r : reports) {
        std::cout << r.suite << "\n";
        for (const auto& c : r.checks) {
            std::ostringstream line;
            line << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << " (" << c.params
                 << ", " << static_cast<long>(c.millis) << " ms)";
            if (!c.pass) line << "\n        counterexample: " << c.counterexample;
            std::cout << line.str() << "\n";
            all_pass = all_pass && c.pass;
        }
    }
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fock space of two-letter words: duality, chord diagrams, suture elements"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "machine-readable JSON output");
    int exit_code = 0;

    // ---- word ----
    auto* word = app.add_subcommand("word", "word order and profiles");
    word->require_subcommand(1);
    std::string w_a, w_b;
    auto* w_profile = word->add_subcommand("profile", "block profile of a word");
    w_profile->add_option("word", w_a)->required();
    w_profile->callback([&]() {
        Word w = parse_word(w_a);
        WordProfile p = profile(w);
        json j{{"word", to_string(w)}, {"f_x", p.f_x}, {"f_y", p.f_y},
               {"g_x", p.g_x},        {"g_y", p.g_y}, {"h_x", p.h_x}, {"h_y", p.h_y}};
        emit(j, "f_x " + vec_str(p.f_x) + "  f_y " + vec_str(p.f_y) + "\ng_x " +
                    vec_str(p.g_x) + "  g_y " + vec_str(p.g_y) + "\nh_x " + vec_str(p.h_x) +
                    "  h_y " + vec_str(p.h_y));
    });
    auto* w_leq = word->add_subcommand("leq", "compare two words in the partial order");
    w_leq->add_option("w0", w_a)->required();
    w_leq->add_option("w1", w_b)->required();
    w_leq->callback([&]() {
        bool r = leq(parse_word(w_a), parse_word(w_b));
        emit(json{{"leq", r}}, r ? "true" : "false");
    });
    auto* w_minmax = word->add_subcommand("minmax", "minimum and maximum of a pair");
    w_minmax->add_option("w0", w_a)->required();
    w_minmax->add_option("w1", w_b)->required();
    w_minmax->callback([&]() {
        auto [lo, hi] = min_max(parse_word(w_a), parse_word(w_b));
        emit(json{{"min", to_string(lo)}, {"max", to_string(hi)}},
             "min " + to_string(lo) + "\nmax " + to_string(hi));
    });

    // ---- fock ----
    auto* fock = app.add_subcommand("fock", "elements, operators and bilinear forms");
    fock->require_subcommand(1);
    std::string f_spec, f_u, f_v;
    auto* f_apply = fock->add_subcommand("apply", "apply an operator spec to an element");
    f_apply->add_option("spec", f_spec, "e.g. \"a*(y,0) a(x,1) H\"")->required();
    f_apply->add_option("element", f_u, "word or JSON element")->required();
    f_apply->callback([&]() {
        FockElement r = apply(parse_operator_spec(f_spec), parse_element(f_u));
        emit(json(r), describe(r));
    });
    auto* f_pairing = fock->add_subcommand("pairing", "the partial-order bilinear form");
    f_pairing->add_option("u", f_u)->required();
    f_pairing->add_option("v", f_v)->required();
    f_pairing->callback([&]() {
        int64_t p = pairing(parse_element(f_u), parse_element(f_v));
        emit(json{{"pairing", p}}, std::to_string(p));
    });
    auto* f_dot = fock->add_subcommand("dot", "the orthonormal bilinear form");
    f_dot->add_option("u", f_u)->required();
    f_dot->add_option("v", f_v)->required();
    f_dot->callback([&]() {
        int64_t p = dot(parse_element(f_u), parse_element(f_v));
        emit(json{{"dot", p}}, std::to_string(p));
    });

    // ---- duality ----
    auto* duality = app.add_subcommand("duality", "the duality operator H and Q±");
    duality->require_subcommand(1);
    std::string d_u;
    int d_nx = 0, d_ny = 0;
    auto* d_h = duality->add_subcommand("h", "apply H");
    d_h->add_option("element", d_u)->required();
    d_h->callback([&]() {
        FockElement r = H_apply(parse_element(d_u));
        emit(json(r), describe(r));
    });
    auto* d_hinv = duality->add_subcommand("hinv", "apply H^-1");
    d_hinv->add_option("element", d_u)->required();
    d_hinv->callback([&]() {
        FockElement r = H_inv(parse_element(d_u));
        emit(json(r), describe(r));
    });
    auto* d_qp = duality->add_subcommand("qplus", "apply Q+");
    d_qp->add_option("element", d_u)->required();
    d_qp->callback([&]() {
        FockElement r = Q_plus(parse_element(d_u));
        emit(json(r), describe(r));
    });
    auto* d_qm = duality->add_subcommand("qminus", "apply Q-");
    d_qm->add_option("element", d_u)->required();
    d_qm->callback([&]() {
        FockElement r = Q_minus(parse_element(d_u));
        emit(json(r), describe(r));
    });
    auto* d_period = duality->add_subcommand("period", "periodicity on a grading");
    d_period->add_option("n_x", d_nx)->required();
    d_period->add_option("n_y", d_ny)->required();
    d_period->callback([&]() {
        int n = d_nx + d_ny;
        int sign = H_power_sign(d_nx, d_ny);
        int order = H_order(d_nx, d_ny);
        std::ostringstream os;
        os << "H^" << (n + 1) << " = " << (sign < 0 ? "-1" : "1") << ", order " << order;
        emit(json{{"n_x", d_nx}, {"n_y", d_ny}, {"power", n + 1},
                  {"sign", sign},  {"order", order}},
             os.str());
    });

    // ---- diagram ----
    auto* diagram = app.add_subcommand("diagram", "chord diagrams");
    diagram->require_subcommand(1);
    std::string g_a, g_b, g_out;
    int g_m = 1;
    std::optional<int> g_euler;
    auto* g_enum = diagram->add_subcommand("enumerate", "all diagrams with m chords");
    g_enum->add_option("m", g_m)->required()->check(CLI::Range(1, 12));
    g_enum->add_option("--euler", g_euler, "restrict to one Euler class");
    g_enum->callback([&]() {
        json list = json::array();
        std::ostringstream os;
        int count = 0;
        for (const ChordDiagram& d : enumerate_diagrams(g_m)) {
            if (g_euler && euler_class(d) != *g_euler) continue;
            ++count;
            list.push_back(d);
            os << render_ascii(d) << "   e = " << euler_class(d)
               << "   " << describe(decompose(d)) << "\n";
        }
        os << count << " diagrams";
        emit(json{{"m", g_m}, {"count", count}, {"diagrams", list}}, os.str());
    });
    auto* g_dec = diagram->add_subcommand("decompose", "signed word sum of a diagram");
    g_dec->add_option("diagram", g_a, "word or JSON diagram")->required();
    g_dec->callback([&]() {
        FockElement e = decompose(parse_diagram(g_a));
        emit(json(e), describe(e));
    });
    auto* g_stack = diagram->add_subcommand("stack", "stackability of an ordered pair");
    g_stack->add_option("d0", g_a)->required();
    g_stack->add_option("d1", g_b)->required();
    g_stack->callback([&]() {
        bool r = stackable(parse_diagram(g_a), parse_diagram(g_b));
        emit(json{{"stackable", r}}, r ? "true" : "false");
    });
    auto* g_render = diagram->add_subcommand("render", "draw a diagram");
    g_render->add_option("diagram", g_a)->required();
    g_render->add_option("--out", g_out, "write SVG to this file");
    g_render->callback([&]() {
        ChordDiagram d = parse_diagram(g_a);
        if (!g_out.empty()) {
            std::ofstream f(g_out);
            if (!f) throw CLI::RuntimeError("cannot open " + g_out, 1);
            f << render_svg(d);
            emit(json{{"out", g_out}}, "wrote " + g_out);
        } else {
            emit(json{{"ascii", render_ascii(d)}, {"diagram", d}}, render_ascii(d));
        }
    });
    auto* g_bypass = diagram->add_subcommand("bypass", "bypass triples of a diagram");
    g_bypass->add_option("diagram", g_a)->required();
    g_bypass->callback([&]() {
        ChordDiagram d = parse_diagram(g_a);
        json list = json::array();
        std::ostringstream os;
        os << render_ascii(d) << "\n";
        for (const BypassArc& arc : enumerate_bypass_arcs(d)) {
            ChordDiagram up = bypass_surgery(d, arc, BypassDirection::up);
            ChordDiagram down = bypass_surgery(d, arc, BypassDirection::down);
            list.push_back({{"chords", {arc.c1, arc.c2, arc.c3}}, {"up", up}, {"down", down}});
            os << "arc (" << arc.c1 << "," << arc.c2 << "," << arc.c3
               << "): up " << render_ascii(up) << "  down " << render_ascii(down) << "\n";
        }
        os << list.size() << " arcs";
        emit(json{{"diagram", d}, {"arcs", list}}, os.str());
    });

    // ---- suture ----
    auto* suture = app.add_subcommand("suture", "suture elements and their closure");
    suture->require_subcommand(1);
    std::string s_u, s_v, s_family = "C1";
    int s_n = 2;
    auto* s_gen = suture->add_subcommand("generate", "closure of 1 under a generator family");
    s_gen->add_option("n", s_n)->required()->check(CLI::Range(0, 8));
    s_gen->add_option("--family", s_family)->check(CLI::IsMember({"C1", "C2", "C3"}));
    s_gen->callback([&]() {
        GeneratorFamily fam = s_family == "C2"   ? GeneratorFamily::C2
                              : s_family == "C3" ? GeneratorFamily::C3
                                                 : GeneratorFamily::C1;
        auto cl = generate_C(s_n, fam);
        json list = json::array();
        std::ostringstream os;
        for (const FockElement& e : cl) {
            list.push_back(e);
            os << describe(e) << "\n";
        }
        os << cl.size() << " elements";
        emit(json{{"n", s_n}, {"family", s_family}, {"count", cl.size()}, {"elements", list}},
             os.str());
    });
    auto* s_check = suture->add_subcommand("check", "is the element a suture element?");
    s_check->add_option("element", s_u)->required();
    s_check->callback([&]() {
        bool r = is_suture_element(parse_element(s_u));
        emit(json{{"suture", r}}, r ? "true" : "false");
        if (!r) exit_code = 1;
    });
    auto* s_chain = suture->add_subcommand("chain", "connecting chain between two elements");
    s_chain->add_option("u", s_u)->required();
    s_chain->add_option("v", s_v)->required();
    s_chain->callback([&]() {
        auto ch = connecting_chain(as_suture(parse_element(s_u)), as_suture(parse_element(s_v)));
        json list = json::array();
        std::ostringstream os;
        for (const SutureElement& e : ch) {
            list.push_back(e);
            os << describe(e.element) << "\n";
        }
        os << ch.size() << " elements";
        emit(json{{"chain", list}}, os.str());
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    std::string v_which = "all";
    VerifyOptions v_opts;
    v_opts.max_n = default_max_n();
    verify->add_option("suite", v_which, "suite name, or 'all'");
    verify->add_option("--max-n", v_opts.max_n, "word-length cap")->check(CLI::Range(0, 12));
    verify->add_option("--seed", v_opts.seed, "seed for sampled checks");
    verify->add_option("--jobs", v_opts.jobs, "worker threads")->check(CLI::Range(1, 64));
    auto* v_list = verify->add_subcommand("list", "list the suite names");
    v_list->callback([&]() {
        json names = suite_names();
        std::ostringstream os;
        for (const auto& n : suite_names()) os << n << "\n";
        os << suite_names().size() << " suites";
        emit(names, os.str());
    });
    verify->callback([&]() {
        if (*v_list) return;
        exit_code = run_verify(v_which, v_opts);
    });

    // ---- fullrank ----
    auto* fullrank = app.add_subcommand("fullrank", "greedy full-rank signed pairing matrix");
    int r_n = 3;
    fullrank->add_option("n", r_n)->required()->check(CLI::Range(1, 6));
    fullrank->callback([&]() {
        SignedPairingMatrix g = construct_full_rank_pairing(r_n);
        int rank = matrix_rank(g.mat);
        std::ostringstream os;
        for (int i = 0; i < g.mat.rows; ++i) {
            for (int j = 0; j < g.mat.cols; ++j)
                os << (g.mat.at(i, j) < 0 ? "" : " ") << g.mat.at(i, j) << " ";
            os << "\n";
        }
        os << "dimension " << g.mat.rows << ", rank " << rank;
        emit(json{{"pairing", g}, {"rank", rank}}, os.str());
        if (rank != g.mat.rows) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
