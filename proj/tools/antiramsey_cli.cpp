// Command-line front end: formula, construct, detect, verify, oracle, spider.
//
// Exit codes: 0 success / all PASS / found / Exact, 1 FAIL or "none found",
// 2 invalid invocation or input, 3 oracle timeout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "antiramsey/antiramsey.hpp"

using namespace antiramsey;

namespace {

constexpr int kInvalid = 2;

struct Globals {
    bool json = false;
    std::string out;
    int threads = 1;
    double budget_sec = 60.0;
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw Error("cannot write " + g.out);
    f << text;
}

SearchOptions search_options(const Globals& g) {
    SearchOptions opt;
    opt.budget = std::chrono::milliseconds(static_cast<std::int64_t>(g.budget_sec * 1000.0));
    opt.threads = g.threads;
    return opt;
}

std::string opt_text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string formula_text(const FormulaResult& r, bool turan) {
    std::ostringstream os;
    os << (turan ? "ex(" : "ar(K_") << r.n << ", " << r.family << ")";
    if (r.lower && r.upper && *r.lower == *r.upper)
        os << " = " << *r.lower;
    else
        os << " in [" << opt_text(r.lower) << ", " << opt_text(r.upper) << "]";
    os << "  status=" << status_name(r.status) << "  source=" << r.source << '\n';
    if (!r.note.empty()) os << "note: " << r.note << '\n';
    return os.str();
}

std::string embedding_text(const Embedding& emb) {
    std::ostringstream os;
    for (const auto& e : emb.edges) os << e.edge.u << ' ' << e.edge.v << ' ' << e.color << '\n';
    return os.str();
}

EdgeColoring load_coloring(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open " + path);
    return read_coloring(f);
}

std::vector<int> parse_caps(const std::string& text) {
    std::vector<int> caps;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            caps.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("caps: \"" + tok + "\" is not an integer");
        }
    }
    return caps;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Anti-Ramsey numbers of forests: closed forms, extremal colorings, rainbow detection, exact search"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Emit JSON instead of text/CSV");
    app.add_option("--out", g.out, "Write the main output to this file");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1, 256));
    app.add_option("--budget-sec", g.budget_sec, "Time budget for exhaustive searches")->check(CLI::Range(0.0, 1e7));

    // formula
    auto* formula = app.add_subcommand("formula", "Closed-form ar(K_n,F) or ex(n,F) with validity status");
    std::string f_forest;
    std::int64_t f_n = 0;
    bool f_turan = false;
    FormulaConfig f_cfg;
    formula->add_option("--forest", f_forest, "Pattern, e.g. P(4,4), S(3,1), M(3), DS(2,1), SP(2,3,3), OMEGA2")->required();
    formula->add_option("--n", f_n, "Host order")->required();
    formula->add_flag("--ex", f_turan, "Turan number instead of the anti-Ramsey number");
    formula->add_option("--large-n-factor", f_cfg.large_n_factor, "Large-n threshold factor: trusted once n >= factor * v(F)^2");
    formula->add_option("--path-constant", f_cfg.path_constant, "Constant C in n >= 5k/4 + C for paths");

    // construct
    auto* construct = app.add_subcommand("construct", "Extremal coloring without a rainbow copy, plus certificate sidecar");
    std::string c_forest, c_variant = "auto";
    int c_n = 0;
    construct->add_option("--forest", c_forest, "Pattern")->required();
    construct->add_option("--n", c_n, "Host order")->required();
    construct->add_option("--variant", c_variant, "Linear forests: auto, clique or join")->check(CLI::IsMember({"auto", "clique", "join"}));

    // detect
    auto* detect = app.add_subcommand("detect", "Search a coloring file for a rainbow copy");
    std::string d_coloring, d_forest;
    detect->add_option("--coloring", d_coloring, "Coloring file")->required();
    detect->add_option("--forest", d_forest, "Pattern")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Formula vs construction vs certificate/detector/oracle campaign");
    std::vector<std::string> v_forests;
    int v_min = 0, v_max = 0;
    std::string v_mode = "certificate";
    bool v_oracle = false, v_det = false;
    verify->add_option("--forest", v_forests, "Pattern (repeatable)")->required();
    verify->add_option("--n-min", v_min, "Smallest n")->required();
    verify->add_option("--n-max", v_max, "Largest n")->required();
    verify->add_option("--mode", v_mode, "certificate, exhaustive or both")->check(CLI::IsMember({"certificate", "exhaustive", "both"}));
    verify->add_flag("--oracle", v_oracle, "Also run the exact search (n <= 12)");
    verify->add_flag("--deterministic", v_det, "Omit timing so reports compare byte for byte");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact ar(K_n,F) by exhaustive search, or the cap-constrained maximum");
    std::string o_forest, o_caps;
    int o_n = 0;
    std::int64_t o_nodes = 0;
    oracle_cmd->add_option("--forest", o_forest, "Pattern");
    oracle_cmd->add_option("--n", o_n, "Host order")->required();
    oracle_cmd->add_option("--caps", o_caps, "Comma-separated palette caps c1,...,cn (ascending); replaces --forest");
    oracle_cmd->add_option("--max-nodes", o_nodes, "Stop after this many search nodes (0: unlimited)");

    // spider
    auto* spider = app.add_subcommand("spider", "Spider scan: beta, beta over edge pairs, join construction");
    int s_legs = 4, s_len = 5;
    bool s_det = false;
    spider->add_option("--max-legs", s_legs, "Largest number of legs");
    spider->add_option("--max-len", s_len, "Largest leg length");
    spider->add_flag("--deterministic", s_det, "Omit timing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*formula) {
            ForestSpec f = parse_forest_spec(f_forest);
            FormulaResult r = f_turan ? ex_formula(f, f_n, f_cfg) : ar_formula(f, f_n, f_cfg);
            emit(g, g.json ? to_json(r).dump(2) + "\n" : formula_text(r, f_turan));
            return 0;
        }

        if (*construct) {
            ForestSpec f = parse_forest_spec(c_forest);
            LinearVariant variant = c_variant == "clique" ? LinearVariant::Clique : c_variant == "join" ? LinearVariant::Join : LinearVariant::Auto;
            Construction c = construct_for(f, c_n, variant);
            emit(g, to_coloring_text(c.coloring));
            json cert = to_json(c.certificate);
            if (!g.out.empty()) {
                std::ofstream side(g.out + ".cert.json", std::ios::binary);
                if (!side) throw Error("cannot write " + g.out + ".cert.json");
                side << cert.dump(2) << '\n';
                std::cerr << c.coloring.num_colors() << " colors; certificate " << g.out << ".cert.json\n";
            } else {
                std::cerr << c.coloring.num_colors() << " colors; certificate:\n" << cert.dump(2) << '\n';
            }
            return 0;
        }

        if (*detect) {
            ForestSpec f = parse_forest_spec(d_forest);
            EdgeColoring col = load_coloring(d_coloring);
            auto hit = find_rainbow(col, f);
            if (g.json) {
                json j{{"forest", format_forest_spec(f)}, {"found", hit.has_value()}};
                if (hit) {
                    j["vertex_map"] = hit->vertex_map;
                    json edges = json::array();
                    for (const auto& e : hit->edges) edges.push_back({e.edge.u, e.edge.v, e.color});
                    j["edges"] = edges;
                }
                emit(g, j.dump(2) + "\n");
            } else {
                emit(g, hit ? embedding_text(*hit) : "NONE\n");
            }
            return hit ? 0 : 1;
        }

        if (*verify) {
            std::vector<ForestSpec> family;
            for (const auto& s : v_forests) family.push_back(parse_forest_spec(s));
            VerifyOptions opt;
            opt.mode = parse_verify_mode(v_mode);
            opt.oracle = v_oracle;
            opt.search = search_options(g);
            opt.search.threads = 1;
            opt.threads = g.threads;
            opt.deterministic = v_det;
            auto rep = run_verify(family, v_min, v_max, opt);
            emit(g, g.json ? to_json(rep).dump(2) + "\n" : to_csv(rep));
            return exit_code(rep);
        }

        if (*oracle_cmd) {
            SearchOptions opt = search_options(g);
            opt.max_nodes = o_nodes;
            SearchOutcome o;
            json j;
            if (!o_caps.empty()) {
                auto caps = parse_caps(o_caps);
                o = max_colors_with_caps(o_n, caps, opt);
                j = to_json(o);
                j["caps"] = caps;
            } else {
                if (o_forest.empty()) throw ParseError("oracle needs --forest or --caps");
                ForestSpec f = parse_forest_spec(o_forest);
                o = ar_exact(o_n, f, opt);
                j = to_json(o);
                j["forest"] = format_forest_spec(f);
            }
            j["n"] = o_n;
            if (g.json) {
                emit(g, j.dump(2) + "\n");
            } else {
                std::ostringstream os;
                os << "value=" << o.value << " status=" << search_status_name(o.status) << " nodes=" << o.nodes
                   << " elapsed_ms=" << o.elapsed.count() << '\n';
                if (o.witness) os << to_coloring_text(*o.witness);
                emit(g, os.str());
            }
            return o.status == SearchStatus::Exact ? 0 : 3;
        }

        if (*spider) {
            auto rep = run_spider_scan(s_legs, s_len, g.threads, s_det);
            emit(g, g.json ? to_json(rep).dump(2) + "\n" : to_csv(rep));
            return exit_code(rep);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}
