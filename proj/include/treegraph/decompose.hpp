#pragma once

// The Brochet-Diestel decomposition of a finite graph: build the tree T_G
// whose nodes each carry one graph vertex and one cone, verify all of its
// structural guarantees, and run the constructions it supports (level
// coloring, partition colorings, chain extraction, antichain extraction).

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treegraph/color.hpp"
#include "treegraph/graph.hpp"
#include "treegraph/minor.hpp"
#include "treegraph/tree.hpp"

namespace tg {

// Result of decompose: node ids follow construction order (parents before
// children), vertex_of is a bijection onto the graph's vertices, cone[t] is
// the vertex set the construction recursed into at t, and f_edges relates
// nodes whose vertices are adjacent in the graph.
struct Decomposition {
    Graph graph;
    Tree tree;
    std::vector<int> vertex_of;              // node -> vertex
    std::vector<int> node_of;                // vertex -> node
    std::vector<VertexSet> cone;             // node -> C_t
    std::vector<std::pair<int, int>> f_edges;  // node pairs (a, b), a < b, sorted
};

// General vertex partition indexed by a tree; decompose only ever produces
// singleton blocks, so non-trivial partitions come from files.
struct TreePartition {
    Tree tree;
    std::vector<VertexSet> blocks;
};

// One root per component seeded by its least vertex; at each node the cone
// splits into components of cone minus the node's vertex, and each child
// picks the vertex adjacent to its parent's vertex that is closest (inside
// the child cone) to the cone's least vertex, ties to the least id.
// Children are created in order of their cone's least vertex, so node ids
// are the construction order.
inline Decomposition decompose(const Graph& g) {
    Decomposition d;
    d.graph = g;
    std::vector<int> parent_of;

    struct Job {
        VertexSet cone;
        int parent;
    };
    std::vector<Job> queue;
    for (auto& comp : components(g)) queue.push_back({comp, -1});

    for (size_t head = 0; head < queue.size(); ++head) {
        VertexSet cone = queue[head].cone;
        int parent = queue[head].parent;
        int x;
        if (parent == -1) {
            x = cone[0];
        } else {
            int px = d.vertex_of[parent];
            int y = cone[0];
            std::vector<int> dist = distances_within(g, cone, y);
            x = -1;
            for (int v : cone)
                if (g.adjacent(px, v) && (x == -1 || dist[v] < dist[x])) x = v;
        }
        int node = static_cast<int>(parent_of.size());
        parent_of.push_back(parent);
        d.vertex_of.push_back(x);
        d.cone.push_back(cone);
        VertexSet rest;
        for (int v : cone)
            if (v != x) rest.push_back(v);
        for (auto& comp : components_within(g, rest)) queue.push_back({std::move(comp), node});
    }

    d.tree = Tree(parent_of);
    int n = g.vertex_count();
    d.node_of.assign(n, -1);
    for (int t = 0; t < n; ++t) d.node_of[d.vertex_of[t]] = t;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (g.adjacent(d.vertex_of[s], d.vertex_of[t])) d.f_edges.emplace_back(s, t);
    return d;
}

// Per-check verification report; every clause of the construction's
// guarantees is tested independently so fault injection can point at the
// exact break.
struct DecompositionReport {
    VerifyResult partition_bijection;    // vertex_of bijective, vertex inside its own cone
    VerifyResult cones_connected;        // every cone non-empty, in range, connected
    VerifyResult cones_are_components;   // root cones = components; child cones = pieces of cone minus vertex
    VerifyResult nesting_matches_order;  // s ancestor of t  iff  cone(t) strictly inside cone(s)
    VerifyResult f_edges_match_adjacency;
    VerifyResult f_edges_comparable;     // every f_edge joins comparable nodes
    VerifyResult t_graph;                // the f_edge graph is a T-graph of the tree
    VerifyResult quotient_isomorphic;    // contracting singleton blocks reproduces the graph

    bool all_pass() const {
        return partition_bijection.ok && cones_connected.ok && cones_are_components.ok &&
               nesting_matches_order.ok && f_edges_match_adjacency.ok && f_edges_comparable.ok &&
               t_graph.ok && quotient_isomorphic.ok;
    }

    std::string first_failure() const {
        const std::pair<const char*, const VerifyResult*> named[] = {
            {"partition_bijection", &partition_bijection},
            {"cones_connected", &cones_connected},
            {"cones_are_components", &cones_are_components},
            {"nesting_matches_order", &nesting_matches_order},
            {"f_edges_match_adjacency", &f_edges_match_adjacency},
            {"f_edges_comparable", &f_edges_comparable},
            {"t_graph", &t_graph},
            {"quotient_isomorphic", &quotient_isomorphic}};
        for (auto [name, check] : named)
            if (!check->ok) return std::string(name) + ": " + check->detail;
        return {};
    }
};

namespace detail {

inline bool valid_vertex_set(const Graph& g, const VertexSet& s) {
    int prev = -1;
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count() || v <= prev) return false;
        prev = v;
    }
    return true;
}

}  // namespace detail

inline DecompositionReport verify_decomposition(const Graph& g, const Decomposition& d) {
    int n = g.vertex_count();
    int m = d.tree.node_count();
    if (m != n || static_cast<int>(d.vertex_of.size()) != m ||
        static_cast<int>(d.node_of.size()) != n || static_cast<int>(d.cone.size()) != m)
        throw std::invalid_argument("verify_decomposition: node/vertex universe mismatch");

    DecompositionReport r;

    std::vector<int> hits(n, 0);
    for (int t = 0; t < m && r.partition_bijection.ok; ++t) {
        int v = d.vertex_of[t];
        if (v < 0 || v >= n)
            r.partition_bijection = {false, "node " + std::to_string(t) + " carries no valid vertex"};
        else if (++hits[v] > 1)
            r.partition_bijection = {false, "vertex " + std::to_string(v) + " carried twice"};
        else if (d.node_of[v] != t)
            r.partition_bijection = {false, "node_of does not invert vertex_of at node " +
                                                std::to_string(t)};
        else if (!std::binary_search(d.cone[t].begin(), d.cone[t].end(), v))
            r.partition_bijection = {false, "vertex of node " + std::to_string(t) +
                                                " lies outside its cone"};
    }

    for (int t = 0; t < m && r.cones_connected.ok; ++t) {
        if (d.cone[t].empty() || !detail::valid_vertex_set(g, d.cone[t]))
            r.cones_connected = {false, "cone of node " + std::to_string(t) + " is malformed"};
        else if (components_within(g, d.cone[t]).size() != 1)
            r.cones_connected = {false, "cone of node " + std::to_string(t) + " is disconnected"};
    }

    if (r.cones_connected.ok) {
        auto mismatch = [&](const std::vector<VertexSet>& expected,
                            std::vector<VertexSet> actual) {
            std::sort(actual.begin(), actual.end());
            return expected != actual;  // components come sorted by least member
        };
        std::vector<VertexSet> root_cones;
        for (int t : d.tree.roots()) root_cones.push_back(d.cone[t]);
        if (mismatch(components(g), std::move(root_cones)))
            r.cones_are_components = {false, "root cones are not the graph's components"};
        for (int t = 0; t < m && r.cones_are_components.ok; ++t) {
            VertexSet rest;
            for (int v : d.cone[t])
                if (v != d.vertex_of[t]) rest.push_back(v);
            std::vector<VertexSet> child_cones;
            for (int c : d.tree.children(t)) child_cones.push_back(d.cone[c]);
            if (mismatch(components_within(g, rest), std::move(child_cones)))
                r.cones_are_components = {false, "children of node " + std::to_string(t) +
                                                     " do not carry the components of its cone"};
        }
    } else {
        r.cones_are_components = {false, "skipped: cones malformed"};
    }

    for (int s = 0; s < m && r.nesting_matches_order.ok; ++s)
        for (int t = 0; t < m; ++t) {
            if (s == t) continue;
            bool strict_subset =
                d.cone[t].size() < d.cone[s].size() &&
                std::includes(d.cone[s].begin(), d.cone[s].end(), d.cone[t].begin(),
                              d.cone[t].end());
            if (d.tree.is_ancestor(s, t) != strict_subset) {
                r.nesting_matches_order = {false, "nesting and tree order disagree on nodes " +
                                                      std::to_string(s) + ", " + std::to_string(t)};
                break;
            }
        }

    if (r.partition_bijection.ok) {
        std::vector<std::pair<int, int>> expected;
        for (int s = 0; s < m; ++s)
            for (int t = s + 1; t < m; ++t)
                if (g.adjacent(d.vertex_of[s], d.vertex_of[t])) expected.emplace_back(s, t);
        std::vector<std::pair<int, int>> actual = d.f_edges;
        std::sort(actual.begin(), actual.end());
        actual.erase(std::unique(actual.begin(), actual.end()), actual.end());
        if (expected != actual)
            r.f_edges_match_adjacency = {false, "f_edges differ from the transported adjacency"};
    } else {
        r.f_edges_match_adjacency = {false, "skipped: vertex map not bijective"};
    }

    for (auto [s, t] : d.f_edges)
        if (s < 0 || t < 0 || s >= m || t >= m || !d.tree.comparable(s, t)) {
            r.f_edges_comparable = {false, "f_edge " + std::to_string(s) + "-" +
                                               std::to_string(t) + " joins incomparable nodes"};
            break;
        }

    if (r.f_edges_comparable.ok) {
        std::vector<std::pair<int, int>> fe;
        for (auto [s, t] : d.f_edges)
            if (s != t) fe.emplace_back(s, t);
        Graph f_graph(m, fe);
        if (!is_t_graph(d.tree, f_graph))
            r.t_graph = {false, "a non-root node is not f-adjacent to its parent"};
    } else {
        r.t_graph = {false, "skipped: f_edges malformed"};
    }

    if (r.partition_bijection.ok) {
        std::vector<VertexSet> parts;
        for (int t = 0; t < m; ++t) parts.push_back({d.vertex_of[t]});
        Graph q = quotient(g, parts);
        bool same = true;
        for (int s = 0; s < m && same; ++s)
            for (int t = s + 1; t < m && same; ++t)
                same = q.adjacent(s, t) == g.adjacent(d.vertex_of[s], d.vertex_of[t]);
        if (!same)
            r.quotient_isomorphic = {false, "singleton-block quotient does not match the graph"};
    } else {
        r.quotient_isomorphic = {false, "skipped: vertex map not bijective"};
    }

    return r;
}

// Color every vertex by the height of its node. Proper because vertices of
// incomparable nodes are never adjacent and comparable nodes differ in
// height; uses exactly height-many colors.
inline Coloring level_coloring(const Decomposition& d) {
    Coloring c;
    c.colors.resize(d.vertex_of.size());
    for (size_t v = 0; v < c.colors.size(); ++v)
        c.colors[v] = d.tree.height(d.node_of[v]);
    c.count = d.tree.height();
    return c;
}

// Structural validity of a tree-indexed partition. Returns rather than
// throws so it can double as a test oracle for injected faults.
inline VerifyResult check_tree_partition(const Graph& g, const TreePartition& p) {
    int m = p.tree.node_count();
    if (static_cast<int>(p.blocks.size()) != m)
        return {false, "one block per tree node required"};
    std::vector<int> owner(g.vertex_count(), -1);
    for (int t = 0; t < m; ++t) {
        if (p.blocks[t].empty()) return {false, "block " + std::to_string(t) + " is empty"};
        if (!detail::valid_vertex_set(g, p.blocks[t]))
            return {false, "block " + std::to_string(t) + " is malformed"};
        for (int v : p.blocks[t]) {
            if (owner[v] != -1)
                return {false, "blocks " + std::to_string(owner[v]) + " and " +
                                   std::to_string(t) + " overlap at vertex " + std::to_string(v)};
            owner[v] = t;
        }
        if (components_within(g, p.blocks[t]).size() != 1)
            return {false, "block " + std::to_string(t) + " induces a disconnected subgraph"};
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (owner[v] == -1)
            return {false, "vertex " + std::to_string(v) + " lies in no block"};
    for (auto [u, v] : g.edges())
        if (owner[u] != owner[v] && !p.tree.comparable(owner[u], owner[v]))
            return {false, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " joins blocks of incomparable nodes"};
    for (int t = 0; t < m; ++t) {
        if (p.tree.is_root(t)) continue;
        bool touches = false;
        for (int u : p.blocks[t])
            for (int v : p.blocks[p.tree.parent(t)]) touches |= g.adjacent(u, v);
        if (!touches)
            return {false, "block " + std::to_string(t) +
                               " has no edge to its parent's block"};
    }
    return {};
}

// The partition-plus-specializing-function coloring: vertex v in the block
// of node t gets f(t)*B + rank of v inside its block, B = largest block.
// Cross-block edges join comparable nodes, whose labels differ; intra-block
// edges differ in rank. Proper by construction, at most k*B colors.
inline Coloring coloring_from_specializing(const Graph& g, const TreePartition& p,
                                           const SpecializingFunction& f) {
    auto part_check = check_tree_partition(g, p);
    if (!part_check.ok)
        throw std::invalid_argument("coloring_from_specializing: " + part_check.detail);
    if (!is_specializing(p.tree, f))
        throw std::invalid_argument(
            "coloring_from_specializing: labels repeat along a chain of the tree");
    size_t block_max = 0;
    for (const auto& b : p.blocks) block_max = std::max(block_max, b.size());
    Coloring c;
    c.colors.assign(g.vertex_count(), 0);
    for (int t = 0; t < p.tree.node_count(); ++t)
        for (size_t r = 0; r < p.blocks[t].size(); ++r)
            c.colors[p.blocks[t][r]] = f.labels[t] * static_cast<int>(block_max) +
                                       static_cast<int>(r);
    c.count = detail::distinct_count(c.colors);
    return c;
}

// For each branch set, the least tree node (minimum height) whose vertex
// lies in it. For a valid witness these nodes are pairwise comparable and
// distinct, so the result is a chain; returned sorted by height.
inline std::vector<int> chain_from_minor(const Decomposition& d, const MinorWitness& w) {
    auto check = verify_minor(d.graph, w);
    if (!check.ok) throw std::invalid_argument("chain_from_minor: " + check.detail);
    std::vector<int> out;
    for (const auto& branch : w.branch_sets) {
        int best = -1;
        for (int v : branch) {
            int t = d.node_of[v];
            if (best == -1 || d.tree.height(t) < d.tree.height(best) ||
                (d.tree.height(t) == d.tree.height(best) && t < best))
                best = t;
        }
        out.push_back(best);
    }
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        return d.tree.height(a) != d.tree.height(b) ? d.tree.height(a) < d.tree.height(b)
                                                    : a < b;
    });
    return out;
}

// Vertices carried by an antichain are pairwise non-adjacent: any edge
// between carried vertices is an f_edge, and f_edges join comparable nodes.
inline VertexSet independent_from_antichain(const Decomposition& d, const std::vector<int>& a) {
    if (!is_antichain(d.tree, a))
        throw std::invalid_argument("independent_from_antichain: nodes are not an antichain");
    VertexSet out;
    for (int t : a) out.push_back(d.vertex_of[t]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Construction-order sanity. Node ids are creation order and each step
// consumes one vertex. Once v is the least unconsumed vertex overall, every
// later step whose cone contains v takes a vertex strictly closer to v
// (distance inside that step's cone), ending with v itself at distance 0;
// this bounds how long v can stay unconsumed. Verifies the strict decrease
// for every vertex.
inline VerifyResult check_consumption_trace(const Decomposition& d) {
    int n = d.tree.node_count();
    for (int v = 0; v < n; ++v) {
        int own = d.node_of[v];
        int least_from = 0;  // first step at which all vertices below v are consumed
        for (int u = 0; u < v; ++u) least_from = std::max(least_from, d.node_of[u] + 1);
        // steps whose cone contains v = ancestors of v's node, ids ascending
        std::vector<int> anc;
        for (int t = own; t != -1; t = d.tree.parent(t)) anc.push_back(t);
        std::reverse(anc.begin(), anc.end());
        int prev = std::numeric_limits<int>::max();
        for (int t : anc) {
            if (t < least_from) continue;
            auto dist = distance_within(d.graph, d.cone[t], d.vertex_of[t], v);
            if (!dist || *dist >= prev)
                return {false, "vertex " + std::to_string(v) +
                                   ": consumed vertices stop approaching it at step " +
                                   std::to_string(t)};
            prev = *dist;
        }
        if (own >= least_from && prev != 0)
            return {false, "vertex " + std::to_string(v) + " not consumed at its own node"};
    }
    return {};
}

// Level-width consequence of generalized connectivity: when the graph is
// (k,l)-connected, any tree level with fewer than k vertices on the levels
// below it must itself have fewer than l nodes, because the cones at that
// level are exactly the components left after deleting the consumed part.
inline bool level_width_ok(const Decomposition& d, int k, int l) {
    int below = 0;
    for (const auto& level : levels(d.tree)) {
        if (below < k && static_cast<int>(level.size()) >= l) return false;
        below += static_cast<int>(level.size());
    }
    return true;
}

}  // namespace tg
