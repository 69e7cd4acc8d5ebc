// Command-line front end: analysis reports, corpus verification, generation,
// and serialization of decompositions, witnesses, and colorings.
//
// Exit codes: 0 success, 1 invariant failure, 2 usage or parse error,
// 3 resource guard refused an exact computation.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treegraph/treegraph.hpp"

namespace {

using namespace tg;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int to_int(const std::string& s) {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

double to_double(const std::string& s) {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

std::vector<int> to_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& part : split(s, ',')) out.push_back(to_int(part));
    return out;
}

Graph make_family(const std::string& family, const std::string& params) {
    auto list = [&] { return to_int_list(params); };
    auto one = [&] {
        auto l = to_int_list(params);
        if (l.size() != 1)
            throw std::invalid_argument("family '" + family + "' takes one parameter");
        return l[0];
    };
    if (family == "path") return path(one());
    if (family == "cycle") return cycle(one());
    if (family == "complete") return complete(one());
    if (family == "complete-bipartite") {
        auto l = list();
        if (l.size() != 2) throw std::invalid_argument("complete-bipartite takes a,b");
        return complete_bipartite(l[0], l[1]);
    }
    if (family == "apex-cliques") return apex_cliques(list());
    if (family == "subdivided-complete") return subdivided_complete(one());
    if (family == "random-connected") {
        auto parts = split(params, ',');
        if (parts.size() != 3)
            throw std::invalid_argument("random-connected takes n,p,seed");
        return random_connected(to_int(parts[0]), to_double(parts[1]),
                                static_cast<uint64_t>(std::stoull(parts[2])));
    }
    if (family == "tree-comparability") {
        auto parts = split(params, ',');
        if (parts.size() != 2)
            throw std::invalid_argument("tree-comparability takes nodes,seed");
        return comparability_graph(
            random_tree(to_int(parts[0]), static_cast<uint64_t>(std::stoull(parts[1]))));
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

// Input is either gen:<family>:<params> or a path to an edge-list file.
Graph load_graph(const std::string& spec) {
    if (spec.rfind("gen:", 0) == 0) {
        auto rest = spec.substr(4);
        auto colon = rest.find(':');
        std::string family = colon == std::string::npos ? rest : rest.substr(0, colon);
        std::string params = colon == std::string::npos ? "" : rest.substr(colon + 1);
        return make_family(family, params);
    }
    std::ifstream in(spec);
    if (!in) throw parse_error("cannot open '" + spec + "'");
    return read_edge_list(in);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

struct Guards {
    int max_exact_chromatic = 20;
    int max_exact_minor = 16;
    int max_minor_k = 8;
};

// ---- analyze -------------------------------------------------------------

struct Quantity {
    bool exact = false;
    int value = 0;  // when exact
    int lower = 0, upper = 0;
};

int max_hadwiger(const Graph& g, SearchLimits limits) {
    int best = 0;
    for (const auto& comp : components(g))
        best = std::max(best, hadwiger_number(induced(g, comp), limits).first);
    return best;
}

int run_analyze(const std::string& input, bool as_json, const Guards& guards) {
    Graph g = load_graph(input);

    auto t0 = std::chrono::steady_clock::now();
    Decomposition d = decompose(g);
    bool valid = verify_decomposition(g, d).all_pass() && check_consumption_trace(d).ok;
    double t_decompose = seconds_since(t0);

    std::vector<int> level_sizes;
    for (const auto& level : levels(d.tree))
        level_sizes.push_back(static_cast<int>(level.size()));
    bool chain = d.tree.node_count() == 0 || width_and_height(d.tree).first == 1;

    t0 = std::chrono::steady_clock::now();
    Quantity chrom;
    try {
        chrom.exact = true;
        chrom.value = chromatic_number(g, guards.max_exact_chromatic).first;
    } catch (const resource_limit_error&) {
        chrom.exact = false;
        chrom.lower = static_cast<int>(
            (g.vertex_count() <= 64 ? max_clique(g) : greedy_clique(g)).size());
        chrom.upper = dsatur_bound(g).count;
    }
    double t_chromatic = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    Quantity had;
    SearchLimits limits{guards.max_exact_minor, guards.max_minor_k};
    try {
        had.exact = true;
        had.value = g.vertex_count() == 0 ? 0 : max_hadwiger(g, limits);
    } catch (const resource_limit_error&) {
        had.exact = false;
        had.lower = static_cast<int>(
            (g.vertex_count() <= 64 ? max_clique(g) : greedy_clique(g)).size());
        had.upper = g.vertex_count();
    }
    double t_hadwiger = seconds_since(t0);

    int height = d.tree.height();
    bool chi_ok = (chrom.exact ? chrom.value : chrom.lower) <= height;
    bool had_ok = (had.exact ? had.value : had.lower) <= height;

    if (as_json) {
        json j = {{"schema", 1},
                  {"graph",
                   {{"n", g.vertex_count()},
                    {"m", g.edge_count()},
                    {"connected", is_connected(g)}}},
                  {"decomposition",
                   {{"height", height},
                    {"levels", level_sizes},
                    {"chain", chain},
                    {"valid", valid}}},
                  {"checks",
                   {{"chromatic_le_height", chi_ok}, {"hadwiger_le_height", had_ok}}},
                  {"timing_seconds",
                   {{"decompose", t_decompose},
                    {"chromatic", t_chromatic},
                    {"hadwiger", t_hadwiger}}}};
        j["chromatic"] = chrom.exact ? json{{"exact", chrom.value}}
                                     : json{{"lower", chrom.lower}, {"upper", chrom.upper}};
        j["hadwiger"] = had.exact ? json{{"exact", had.value}}
                                  : json{{"lower", had.lower}, {"upper", had.upper}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "graph: n=" << g.vertex_count() << " m=" << g.edge_count()
                  << " connected=" << (is_connected(g) ? "yes" : "no") << "\n";
        std::cout << "decomposition: height=" << height << " levels=[";
        for (size_t i = 0; i < level_sizes.size(); ++i)
            std::cout << (i ? "," : "") << level_sizes[i];
        std::cout << "] chain=" << (chain ? "yes" : "no")
                  << " valid=" << (valid ? "yes" : "no") << "\n";
        if (chrom.exact)
            std::cout << "chromatic: " << chrom.value << " (exact)\n";
        else
            std::cout << "chromatic: " << chrom.lower << ".." << chrom.upper << " (bounds)\n";
        if (had.exact)
            std::cout << "hadwiger: " << had.value << " (exact)\n";
        else
            std::cout << "hadwiger: " << had.lower << ".." << had.upper << " (bounds)\n";
        std::cout << "check: chromatic <= height: " << (chi_ok ? "ok" : "VIOLATED") << " ("
                  << (chrom.exact ? chrom.value : chrom.lower) << " <= " << height << ")\n";
        std::cout << "check: hadwiger <= height: " << (had_ok ? "ok" : "VIOLATED") << " ("
                  << (had.exact ? had.value : had.lower) << " <= " << height << ")\n";
        std::cout << "timing: decompose=" << fixed3(t_decompose)
                  << "s chromatic=" << fixed3(t_chromatic)
                  << "s hadwiger=" << fixed3(t_hadwiger) << "s\n";
    }
    return (valid && chi_ok && had_ok) ? 0 : 1;
}

// ---- check ---------------------------------------------------------------

struct SuiteCounts {
    const char* name;
    long pass = 0;
    long total = 0;
};

struct CheckState {
    SuiteCounts suites[7] = {{"decomposition"},          {"chromatic-bound"},
                             {"hadwiger-bound"},         {"chain-extraction"},
                             {"antichain-independent"},  {"comparability-equalities"},
                             {"level-width"}};
    std::vector<std::string> failures;  // "id suite" lines plus dumps
    bool inject_fault = false;
    bool fault_spent = false;
    int kmax = 3;
};

void record(CheckState& st, int suite, const std::string& id, const Graph& g, bool ok) {
    ++st.suites[suite].total;
    if (ok) {
        ++st.suites[suite].pass;
        return;
    }
    std::string dump = "FAIL graph " + id + ": suite " + std::string(st.suites[suite].name) +
                       "\n" + write_edge_list(g);
    st.failures.push_back(dump);
}

void check_one(CheckState& st, const std::string& id, const Graph& g) {
    int n = g.vertex_count();
    Decomposition d = decompose(g);

    bool sound = verify_decomposition(g, d).all_pass() && check_consumption_trace(d).ok;
    if (st.inject_fault && !st.fault_spent) {
        sound = false;  // deliberate corruption to exercise the failure path
        st.fault_spent = true;
    }
    record(st, 0, id, g, sound);

    int height = d.tree.height();
    int chi = chromatic_number(g).first;
    Coloring lc = level_coloring(d);
    record(st, 1, id, g, chi <= height && is_proper(g, lc) && lc.count == height);

    if (n <= 8 && is_connected(g)) {
        auto [h, w] = hadwiger_number(g);
        record(st, 2, id, g, h <= height);
        std::vector<int> chain = chain_from_minor(d, w);
        record(st, 3, id, g,
               static_cast<int>(chain.size()) == h && is_chain(d.tree, chain));
    }

    auto anti = max_antichain(d.tree);
    VertexSet ind = independent_from_antichain(d, anti);
    bool independent = ind.size() == anti.size();
    for (size_t i = 0; i < ind.size() && independent; ++i)
        for (size_t j = i + 1; j < ind.size(); ++j)
            independent &= !g.adjacent(ind[i], ind[j]);
    record(st, 4, id, g, independent);

    {
        Graph comp = comparability_graph(d.tree);
        auto [width, ht] = width_and_height(d.tree);
        bool ok = static_cast<int>(max_clique(comp).size()) == ht &&
                  chromatic_number(comp).first == ht;
        ok = ok && static_cast<int>(max_antichain(d.tree).size()) == width;
        if (n <= 10 && n > 0) ok = ok && hadwiger_number(comp).first == ht;
        record(st, 5, id, g, ok);
    }

    bool width_ok = true;
    for (int k = 1; k <= st.kmax && width_ok; ++k)
        for (int l = 1; l <= n && width_ok; ++l)
            if (is_kl_connected(g, k, l)) width_ok = level_width_ok(d, k, l);
    record(st, 6, id, g, width_ok);
}

int run_check(std::optional<int> exhaustive, const std::string& random_spec, int kmax,
              bool inject_fault) {
    CheckState st;
    st.kmax = kmax;
    st.inject_fault = inject_fault;

    if (exhaustive) {
        int top = *exhaustive;
        if (top < 1 || top > 7)
            throw std::invalid_argument("check: --exhaustive takes a bound in 1..7");
        for (int n = 1; n <= top; ++n) {
            int pairs = n * (n - 1) / 2;
            for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
                std::vector<std::pair<int, int>> edges;
                int bit = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j, ++bit)
                        if ((mask >> bit) & 1) edges.emplace_back(i, j);
                Graph g(n, edges);
                if (!is_connected(g)) continue;
                check_one(st, "g" + std::to_string(n) + "-" + std::to_string(mask), g);
            }
        }
    }
    if (!random_spec.empty()) {
        auto parts = split(random_spec, ',');
        if (parts.size() != 4)
            throw std::invalid_argument("check: --random takes count,n,p,seed");
        int count = to_int(parts[0]);
        int n = to_int(parts[1]);
        double p = to_double(parts[2]);
        uint64_t seed = std::stoull(parts[3]);
        for (int i = 0; i < count; ++i) {
            char id[32];
            std::snprintf(id, sizeof id, "r%06d", i);
            check_one(st, id, random_connected(n, p, seed + i));
        }
    }
    if (!exhaustive && random_spec.empty())
        throw std::invalid_argument("check: need --exhaustive N or --random count,n,p,seed");

    for (const auto& f : st.failures) std::cout << f;
    long total = 0, pass = 0;
    for (const auto& s : st.suites) {
        std::cout << "suite " << s.name << ": " << s.pass << "/" << s.total << " pass\n";
        total += s.total;
        pass += s.pass;
    }
    std::cout << "result: " << (pass == total ? "PASS" : "FAIL") << " (" << pass << "/" << total
              << " checks)\n";
    return pass == total ? 0 : 1;
}

// ---- small commands ------------------------------------------------------

int run_decompose(const std::string& input, bool as_dot) {
    Graph g = load_graph(input);
    Decomposition d = decompose(g);
    if (as_dot) {
        std::vector<std::string> labels;
        for (int t = 0; t < d.tree.node_count(); ++t)
            labels.push_back("v" + std::to_string(d.vertex_of[t]));
        std::cout << dot_tree(d.tree, labels);
    } else {
        std::cout << serialize_decomposition(d);
    }
    return 0;
}

int run_gen(const std::string& family, const std::string& params) {
    std::cout << write_edge_list(make_family(family, params));
    return 0;
}

int run_minor(const std::string& input, int k, const Guards& guards) {
    Graph g = load_graph(input);
    SearchLimits limits{guards.max_exact_minor, guards.max_minor_k};
    auto w = find_clique_minor(g, k, limits);
    if (!w) {
        std::cout << "none\n";
        return 0;
    }
    std::cout << serialize_witness(*w);
    return 0;
}

int run_color(const std::string& input, bool bound_only, const Guards& guards) {
    Graph g = load_graph(input);
    Coloring c = bound_only ? dsatur_bound(g)
                            : chromatic_number(g, guards.max_exact_chromatic).second;
    std::cout << serialize_coloring(c);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite graph/tree decomposition toolkit"};
    app.require_subcommand(1);

    Guards guards;
    std::string input, random_spec, family, params;
    bool as_json = false, as_dot = false, bound_only = false, inject_fault = false;
    int minor_k = 0, kmax = 3;
    std::optional<int> exhaustive;

    auto add_guards = [&](CLI::App* cmd) {
        cmd->add_option("--max-exact-chromatic", guards.max_exact_chromatic,
                        "vertex guard for the exact chromatic solver");
        cmd->add_option("--max-exact-minor", guards.max_exact_minor,
                        "vertex guard for the exact minor search");
        cmd->add_option("--max-minor-k", guards.max_minor_k,
                        "clique-order guard for the exact minor search");
    };

    auto* analyze = app.add_subcommand("analyze", "full report on one graph");
    analyze->add_option("input", input, "edge-list file or gen:<family>:<params>")->required();
    analyze->add_flag("--json", as_json, "emit the report as JSON");
    add_guards(analyze);

    auto* check = app.add_subcommand("check", "run the invariant suites over a corpus");
    check->add_option("--exhaustive", exhaustive, "all connected graphs up to this size");
    check->add_option("--random", random_spec, "count,n,p,seed corpus");
    check->add_option("--kmax", kmax, "largest k for the (k,l) level-width suite");
    check->add_flag("--inject-fault", inject_fault,
                    "corrupt one verdict to exercise the failure path");

    auto* decompose_cmd = app.add_subcommand("decompose", "decomposition of one graph");
    decompose_cmd->add_option("input", input, "edge-list file or gen:<family>:<params>")
        ->required();
    decompose_cmd->add_flag("--dot", as_dot, "emit DOT instead of JSON");

    auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
    gen->add_option("family", family, "family name")->required();
    gen->add_option("params", params, "comma-separated parameters");

    auto* minor = app.add_subcommand("minor", "exact K_k minor search");
    minor->add_option("input", input, "edge-list file or gen:<family>:<params>")->required();
    minor->add_option("--k", minor_k, "clique order to search for")->required();
    add_guards(minor);

    auto* color = app.add_subcommand("color", "proper coloring of one graph");
    color->add_option("input", input, "edge-list file or gen:<family>:<params>")->required();
    color->add_flag("--bound-only", bound_only, "greedy bound instead of the exact solver");
    add_guards(color);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(input, as_json, guards);
        if (check->parsed()) return run_check(exhaustive, random_spec, kmax, inject_fault);
        if (decompose_cmd->parsed()) return run_decompose(input, as_dot);
        if (gen->parsed()) return run_gen(family, params);
        if (minor->parsed()) return run_minor(input, minor_k, guards);
        if (color->parsed()) return run_color(input, bound_only, guards);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
