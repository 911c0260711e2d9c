// Command-line front end. Exit codes: 0 success, 1 verification failure or
// internal error, 2 usage or input error, 3 size guard exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gammacone.hpp"

namespace {

using namespace gammacone;

struct GraphSource {
    std::string family;
    std::string file;
};

Graph load_graph(const GraphSource& src) {
    if (!src.family.empty() && !src.file.empty())
        throw input_error("give either --family or a file, not both");
    if (!src.family.empty()) {
        auto pos = src.family.find(':');
        int n = 0;
        if (pos != std::string::npos) {
            try {
                n = std::stoi(src.family.substr(pos + 1));
            } catch (const std::exception&) {
                pos = std::string::npos;
            }
        }
        if (pos == std::string::npos)
            throw input_error("--family wants NAME:N, e.g. path:7");
        return named_family(src.family.substr(0, pos), n);
    }
    if (src.file.empty()) throw input_error("no graph given; use --family or a file");
    std::ifstream in(src.file);
    if (!in) throw input_error("cannot open " + src.file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void add_graph_options(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("--family", src.family,
                    "built-in family NAME:N (path, star, d, e; a = path)");
    cmd->add_option("file", src.file, "edge list file (vertices N, then U V lines)");
}

PrincipalDecomposition pick_side(const Graph& g, int side) {
    auto dec = principal_decomposition(g);
    return side == 1 ? swapped(dec) : dec;
}

std::optional<std::vector<OriBits>> principal_pair(const Graph& g) {
    try {
        auto dec = principal_decomposition(g);
        OriBits a = principal_orientation(g, dec).bits;
        OriBits b = principal_orientation(g, swapped(dec)).bits;
        return std::vector<OriBits>{std::min(a, b), std::max(a, b)};
    } catch (const input_error&) {
        return std::nullopt;  // disconnected or not bipartite
    }
}

int run_info(const Graph& g, bool json) {
    if (json) {
        Json j;
        j["vertices"] = g.n;
        Json edges = Json::array();
        for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
        j["edges"] = std::move(edges);
        j["class"] = to_string(classify(g));
        std::cout << render(j);
    } else {
        std::cout << "vertices " << g.n << "\n"
                  << "edges " << g.edge_count() << "\n"
                  << "class " << to_string(classify(g)) << "\n";
    }
    return 0;
}

int run_gamma_vector(const Graph& g, bool json) {
    auto gv = gamma_vector(g);
    auto pp = principal_pair(g);
    if (json) {
        std::cout << render(gamma_vector_json(g, gv));
        return 0;
    }
    std::cout << "orientations " << gv.entries.size() << "\n"
              << "sigma multiset " << gamma_vector_text(gv) << "\n"
              << "max " << decimal(gv.max) << "\n"
              << "argmax";
    for (OriBits b : gv.argmax) std::cout << " " << to_bitstring(g, Orientation{b});
    std::cout << "\n";
    if (pp) {
        // For trees this is a theorem; elsewhere it is an experimental
        // observation, reported but never asserted.
        bool match = (gv.argmax == *pp);
        std::cout << "argmax equals the principal pair: " << (match ? "yes" : "no");
        if (classify(g) != GraphClass::tree) std::cout << " (experimental)";
        std::cout << "\n";
    }
    return 0;
}

int run_principal(const Graph& g, int side, bool json) {
    auto dec = pick_side(g, side);
    Orientation po = principal_orientation(g, dec);
    BigCount formula = principal_number_formula(g, dec.pi1);
    BigCount induction = principal_number_induction(g, dec.pi1);
    BigCount sweep = count_ideals_dp(g, po);
    if (json) {
        Json j;
        j["pi1"] = vertices_json(dec.pi1);
        j["pi2"] = vertices_json(dec.pi2);
        j["orientation_bits"] = to_bitstring(g, po);
        j["formula"] = decimal(formula);
        j["induction"] = decimal(induction);
        j["sweep"] = decimal(sweep);
        std::cout << render(j);
    } else {
        std::cout << "pi1 " << vertex_set_text(dec.pi1) << "\n"
                  << "pi2 " << vertex_set_text(dec.pi2) << "\n"
                  << "orientation " << to_bitstring(g, po) << "\n"
                  << "sigma formula " << decimal(formula) << "\n"
                  << "sigma induction " << decimal(induction) << "\n"
                  << "sigma sweep " << decimal(sweep) << "\n";
    }
    return 0;
}

int run_blocks(const Graph& g, int side, bool json) {
    auto dec = pick_side(g, side);
    auto rep = block_decomposition(g, dec.pi1);
    if (json)
        std::cout << render(block_report_json(rep));
    else
        std::cout << block_report_text(rep);
    return 0;
}

int run_extensions(const Graph& g, const std::string& bits, bool json) {
    Orientation o = orientation_from_bitstring(g, bits);
    BigCount sigma = count_ideals_dp(g, o);
    Poset p = to_poset(g, o);
    if (json) {
        Json j;
        j["orientation_bits"] = to_bitstring(g, o);
        j["sigma"] = decimal(sigma);
        j["hasse"] = hasse_json(p);
        std::cout << render(j);
    } else {
        std::cout << "orientation " << to_bitstring(g, o) << "\n"
                  << "sigma " << decimal(sigma) << "\n"
                  << "hasse";
        for (auto [lo, hi] : p.hasse) std::cout << " " << lo << "<" << hi;
        std::cout << "\n";
    }
    return 0;
}

int run_series(int max_n, bool json) {
    auto a = check_a_series(max_n);
    auto d = evaluate_sano_series("d", max_n);
    auto e = evaluate_sano_series("e", max_n);
    if (json) {
        Json j;
        j["a"] = series_rows_json(a);
        j["d"] = series_rows_json(d);
        j["e"] = series_rows_json(e);
        std::cout << render(j);
    } else {
        std::cout << series_table_text("family a", a)
                  << series_table_text("family d", d)
                  << series_table_text("family e", e);
    }
    for (const auto& row : a)
        if (!row.match) return 1;
    return 0;
}

int run_verify(std::uint64_t seed) {
    auto results = run_verification(seed);
    return print_verification(results, std::cout) == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* tenv = std::getenv("GAMMACONE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(tenv, &end, 10);
        // Accepted as a cap (0 = auto); the engines here run sequentially,
        // which satisfies any cap.
        if (end == tenv || *end != '\0' || v < 0) {
            std::cerr << "error: GAMMACONE_THREADS must be a nonnegative integer\n";
            return 2;
        }
    }

    CLI::App app{"chamber counts of graph cones via acyclic orientations"};
    app.require_subcommand(1);

    GraphSource src;
    bool json = false;
    int side = 0;
    std::string orientation_bits;
    int max_n = 9;
    std::uint64_t seed = 1;

    auto* info = app.add_subcommand("info", "classify a graph");
    add_graph_options(info, src);
    info->add_flag("--json", json, "machine readable output");

    auto* gamma = app.add_subcommand("gamma-vector", "extension counts of every acyclic orientation");
    add_graph_options(gamma, src);
    gamma->add_flag("--json", json, "machine readable output");

    auto* principal = app.add_subcommand("principal", "principal decomposition and its count, three ways");
    add_graph_options(principal, src);
    principal->add_option("--side", side, "which side is pi1 (0 canonical, 1 swapped)")
        ->check(CLI::Range(0, 1));
    principal->add_flag("--json", json, "machine readable output");

    auto* blocks = app.add_subcommand("blocks", "block decomposition of the principal cone");
    add_graph_options(blocks, src);
    blocks->add_option("--side", side, "which side is pi1 (0 canonical, 1 swapped)")
        ->check(CLI::Range(0, 1));
    blocks->add_flag("--json", json, "machine readable output");

    auto* extensions = app.add_subcommand("extensions", "extension count of one orientation");
    add_graph_options(extensions, src);
    extensions->add_option("--orientation", orientation_bits, "bitstring in canonical edge order, e.g. 0b101")
        ->required();
    extensions->add_flag("--json", json, "machine readable output");

    auto* series = app.add_subcommand("series", "generating function comparison tables");
    series->add_option("--max-n", max_n, "largest member to compare (at most 9)");
    series->add_flag("--json", json, "machine readable output");

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--seed", seed, "seed for the randomized instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (info->parsed()) return run_info(load_graph(src), json);
        if (gamma->parsed()) return run_gamma_vector(load_graph(src), json);
        if (principal->parsed()) return run_principal(load_graph(src), side, json);
        if (blocks->parsed()) return run_blocks(load_graph(src), side, json);
        if (extensions->parsed())
            return run_extensions(load_graph(src), orientation_bits, json);
        if (series->parsed()) return run_series(max_n, json);
        if (verify->parsed()) return run_verify(seed);
    } catch (const guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
