#pragma once

// Text and JSON serialization: edge lists, tree files, tree partitions,
// DOT exports, and the JSON schemas for decompositions, witnesses, and
// colorings. Parsers report the offending line; all JSON carries
// "schema": 1 and round-trips exactly.

#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "treegraph/color.hpp"
#include "treegraph/decompose.hpp"
#include "treegraph/graph.hpp"
#include "treegraph/minor.hpp"
#include "treegraph/tree.hpp"

namespace tg {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

inline int parse_int(const std::string& tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error("line " + std::to_string(line_no) + ": expected an integer, got '" +
                          tok + "'");
    return value;
}

// Strips '#' comments, yields (line_no, tokens) for non-empty lines.
inline std::vector<std::pair<int, std::vector<std::string>>> content_lines(std::istream& in) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto tokens = tokenize(line);
        if (!tokens.empty()) out.emplace_back(line_no, std::move(tokens));
    }
    return out;
}

}  // namespace detail

// Edge list: optional first content line "n <count>" fixing the vertex
// count, then one "u v" pair per line; '#' comments. Without the header the
// vertex count is the largest index + 1.
inline Graph read_edge_list(std::istream& in) {
    auto lines = detail::content_lines(in);
    int n = -1;
    int max_vertex = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_lines;
    for (size_t i = 0; i < lines.size(); ++i) {
        auto& [line_no, tokens] = lines[i];
        if (tokens[0] == "n") {
            if (i != 0)
                throw parse_error("line " + std::to_string(line_no) +
                                  ": header allowed only before the edges");
            if (tokens.size() != 2)
                throw parse_error("line " + std::to_string(line_no) +
                                  ": header must be 'n <count>'");
            n = detail::parse_int(tokens[1], line_no);
            if (n < 0)
                throw parse_error("line " + std::to_string(line_no) + ": negative vertex count");
            continue;
        }
        if (tokens.size() != 2)
            throw parse_error("line " + std::to_string(line_no) +
                              ": expected exactly two endpoints");
        int u = detail::parse_int(tokens[0], line_no);
        int v = detail::parse_int(tokens[1], line_no);
        if (u < 0 || v < 0)
            throw parse_error("line " + std::to_string(line_no) + ": negative vertex id");
        if (u == v)
            throw parse_error("line " + std::to_string(line_no) + ": self-loop at vertex " +
                              std::to_string(u));
        edges.emplace_back(u, v);
        edge_lines.push_back(line_no);
        max_vertex = std::max({max_vertex, u, v});
    }
    if (n == -1) n = max_vertex + 1;
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].first >= n || edges[i].second >= n)
            throw parse_error("line " + std::to_string(edge_lines[i]) +
                              ": vertex id exceeds the declared count");
    return Graph(n, edges);
}

inline Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline std::string write_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// Tree file: one line per node, "node parent height", nodes in id order,
// roots with parent -1. Heights are redundant and verified on read.
inline Tree read_tree(std::istream& in) {
    auto lines = detail::content_lines(in);
    std::vector<int> parent;
    std::vector<std::pair<int, int>> given_heights;  // (line_no, height)
    for (size_t i = 0; i < lines.size(); ++i) {
        auto& [line_no, tokens] = lines[i];
        if (tokens.size() != 3)
            throw parse_error("line " + std::to_string(line_no) +
                              ": expected 'node parent height'");
        int node = detail::parse_int(tokens[0], line_no);
        if (node != static_cast<int>(i))
            throw parse_error("line " + std::to_string(line_no) + ": nodes must appear in order, expected " +
                              std::to_string(i));
        int par = detail::parse_int(tokens[1], line_no);
        if (par < -1 || par >= static_cast<int>(lines.size()))
            throw parse_error("line " + std::to_string(line_no) + ": parent out of range");
        parent.push_back(par);
        given_heights.emplace_back(line_no, detail::parse_int(tokens[2], line_no));
    }
    Tree t;
    try {
        t = Tree(parent);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("tree file invalid: ") + e.what());
    }
    for (int x = 0; x < t.node_count(); ++x)
        if (t.height(x) != given_heights[x].second)
            throw parse_error("line " + std::to_string(given_heights[x].first) +
                              ": stated height " + std::to_string(given_heights[x].second) +
                              " does not match the parent chain");
    return t;
}

inline Tree read_tree(const std::string& text) {
    std::istringstream in(text);
    return read_tree(in);
}

inline std::string write_tree(const Tree& t) {
    std::string out;
    for (int x = 0; x < t.node_count(); ++x)
        out += std::to_string(x) + " " + std::to_string(t.parent(x)) + " " +
               std::to_string(t.height(x)) + "\n";
    return out;
}

// Tree partition file: one line per node, "node parent v1 v2 ...".
inline TreePartition read_tree_partition(std::istream& in) {
    auto lines = detail::content_lines(in);
    std::vector<int> parent;
    std::vector<VertexSet> blocks;
    for (size_t i = 0; i < lines.size(); ++i) {
        auto& [line_no, tokens] = lines[i];
        if (tokens.size() < 2)
            throw parse_error("line " + std::to_string(line_no) +
                              ": expected 'node parent v1 v2 ...'");
        int node = detail::parse_int(tokens[0], line_no);
        if (node != static_cast<int>(i))
            throw parse_error("line " + std::to_string(line_no) + ": nodes must appear in order, expected " +
                              std::to_string(i));
        int par = detail::parse_int(tokens[1], line_no);
        if (par < -1 || par >= static_cast<int>(lines.size()))
            throw parse_error("line " + std::to_string(line_no) + ": parent out of range");
        parent.push_back(par);
        VertexSet block;
        for (size_t j = 2; j < tokens.size(); ++j) {
            int v = detail::parse_int(tokens[j], line_no);
            if (v < 0)
                throw parse_error("line " + std::to_string(line_no) + ": negative vertex id");
            block.push_back(v);
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    TreePartition p;
    try {
        p.tree = Tree(parent);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("partition file invalid: ") + e.what());
    }
    p.blocks = std::move(blocks);
    return p;
}

inline TreePartition read_tree_partition(const std::string& text) {
    std::istringstream in(text);
    return read_tree_partition(in);
}

inline std::string write_tree_partition(const TreePartition& p) {
    std::string out;
    for (int x = 0; x < p.tree.node_count(); ++x) {
        out += std::to_string(x) + " " + std::to_string(p.tree.parent(x));
        for (int v : p.blocks[x]) out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

inline std::string dot_graph(const Graph& g) {
    std::string out = "graph g {\n";
    std::vector<char> touched(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
        touched[u] = touched[v] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!touched[v]) out += "  " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

// Tree as a digraph, edges parent -> child; optional per-node labels.
inline std::string dot_tree(const Tree& t, const std::vector<std::string>& labels = {}) {
    std::string out = "digraph t {\n";
    for (int x = 0; x < t.node_count(); ++x)
        if (x < static_cast<int>(labels.size()))
            out += "  " + std::to_string(x) + " [label=\"" + labels[x] + "\"];\n";
    for (int x = 0; x < t.node_count(); ++x)
        if (!t.is_root(x))
            out += "  " + std::to_string(t.parent(x)) + " -> " + std::to_string(x) + ";\n";
    out += "}\n";
    return out;
}

// --- JSON ---------------------------------------------------------------
// All objects carry "schema": 1; serialization is dump(2) with a trailing
// newline and alphabetically ordered keys, so outputs are byte-stable.

using json = nlohmann::json;

namespace detail {

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json parse_checked(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON");
    if (!j.is_object() || !j.contains("schema") || j["schema"] != 1)
        throw parse_error("JSON must be an object with \"schema\": 1");
    return j;
}

}  // namespace detail

inline json decomposition_json(const Decomposition& d) {
    json nodes = json::array();
    for (int t = 0; t < d.tree.node_count(); ++t)
        nodes.push_back({{"id", t},
                         {"parent", d.tree.parent(t)},
                         {"vertex", d.vertex_of[t]},
                         {"cone", d.cone[t]}});
    json f_edges = json::array();
    for (auto [a, b] : d.f_edges) f_edges.push_back({a, b});
    return {{"schema", 1}, {"nodes", nodes}, {"f_edges", f_edges}};
}

inline std::string serialize_decomposition(const Decomposition& d) {
    return detail::dump(decomposition_json(d));
}

// Rebuilds a decomposition over a known graph; bijectivity and the deeper
// structural claims are verify_decomposition's business, the parser only
// enforces shape.
inline Decomposition parse_decomposition(const std::string& text, const Graph& g) {
    json j = detail::parse_checked(text);
    if (!j.contains("nodes") || !j["nodes"].is_array())
        throw parse_error("decomposition JSON needs a \"nodes\" array");
    int m = static_cast<int>(j["nodes"].size());
    if (m != g.vertex_count())
        throw parse_error("decomposition has " + std::to_string(m) + " nodes but the graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
    Decomposition d;
    d.graph = g;
    std::vector<int> parent(m, -1);
    d.vertex_of.assign(m, -1);
    d.cone.assign(m, {});
    std::vector<char> seen(m, 0);
    for (const auto& node : j["nodes"]) {
        if (!node.is_object() || !node.contains("id") || !node["id"].is_number_integer())
            throw parse_error("decomposition node without an integer id");
        int id = node["id"];
        if (id < 0 || id >= m || seen[id])
            throw parse_error("decomposition node id " + std::to_string(id) +
                              " out of range or repeated");
        seen[id] = 1;
        parent[id] = node.at("parent");
        d.vertex_of[id] = node.at("vertex");
        d.cone[id] = node.at("cone").get<VertexSet>();
        if (d.vertex_of[id] < 0 || d.vertex_of[id] >= g.vertex_count())
            throw parse_error("decomposition node " + std::to_string(id) +
                              " carries an out-of-range vertex");
    }
    try {
        d.tree = Tree(parent);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("decomposition tree invalid: ") + e.what());
    }
    d.node_of.assign(g.vertex_count(), -1);
    for (int t = 0; t < m; ++t)
        if (d.vertex_of[t] >= 0) d.node_of[d.vertex_of[t]] = t;
    for (const auto& e : j.value("f_edges", json::array())) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("decomposition f_edge must be a pair");
        d.f_edges.emplace_back(int(e[0]), int(e[1]));
    }
    return d;
}

inline json witness_json(const MinorWitness& w) {
    return {{"schema", 1}, {"k", w.k}, {"branch_sets", w.branch_sets}};
}

inline std::string serialize_witness(const MinorWitness& w) {
    return detail::dump(witness_json(w));
}

inline MinorWitness parse_witness(const std::string& text) {
    json j = detail::parse_checked(text);
    MinorWitness w;
    if (!j.contains("k") || !j["k"].is_number_integer() || !j.contains("branch_sets") ||
        !j["branch_sets"].is_array())
        throw parse_error("witness JSON needs \"k\" and \"branch_sets\"");
    w.k = j["k"];
    for (const auto& s : j["branch_sets"]) w.branch_sets.push_back(s.get<VertexSet>());
    return w;
}

inline json subdivision_json(const SubdivisionWitness& w) {
    json paths = json::object();
    for (const auto& [key, interior] : w.paths)
        paths[std::to_string(key.first) + "-" + std::to_string(key.second)] = interior;
    return {{"schema", 1}, {"branch_vertices", w.branch_vertices}, {"paths", paths}};
}

inline std::string serialize_subdivision(const SubdivisionWitness& w) {
    return detail::dump(subdivision_json(w));
}

inline SubdivisionWitness parse_subdivision(const std::string& text) {
    json j = detail::parse_checked(text);
    SubdivisionWitness w;
    if (!j.contains("branch_vertices") || !j["branch_vertices"].is_array() ||
        !j.contains("paths") || !j["paths"].is_object())
        throw parse_error("subdivision JSON needs \"branch_vertices\" and \"paths\"");
    w.branch_vertices = j["branch_vertices"].get<std::vector<int>>();
    for (const auto& [key, interior] : j["paths"].items()) {
        auto dash = key.find('-');
        auto num = [&](const std::string& part) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
            if (ec != std::errc{} || ptr != part.data() + part.size())
                throw parse_error("subdivision path key '" + key + "' is not 'a-b'");
            return value;
        };
        if (dash == std::string::npos)
            throw parse_error("subdivision path key '" + key + "' is not 'a-b'");
        int a = num(key.substr(0, dash));
        int b = num(key.substr(dash + 1));
        w.paths[{a, b}] = interior.get<std::vector<int>>();
    }
    return w;
}

inline json coloring_json(const Coloring& c) {
    return {{"schema", 1}, {"colors", c.colors}, {"count", c.count}};
}

inline std::string serialize_coloring(const Coloring& c) { return detail::dump(coloring_json(c)); }

inline Coloring parse_coloring(const std::string& text) {
    json j = detail::parse_checked(text);
    if (!j.contains("colors") || !j["colors"].is_array() || !j.contains("count") ||
        !j["count"].is_number_integer())
        throw parse_error("coloring JSON needs \"colors\" and \"count\"");
    Coloring c;
    c.colors = j["colors"].get<std::vector<int>>();
    c.count = j["count"];
    return c;
}

}  // namespace tg
