#pragma once

// Deterministic graph and tree families used throughout the tests and the
// CLI, plus seeded random corpora. Every generator is a pure function of
// its parameters; random ones are pure functions of the seed.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treegraph/graph.hpp"
#include "treegraph/tree.hpp"

namespace tg {

// 64-bit linear congruential generator (Knuth's MMIX multiplier/increment).
// The exact update and the derived draws below are part of the reproducibility
// contract: corpora regenerate byte-identically from the same seed anywhere.
class Lcg64 {
public:
    explicit Lcg64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // uniform in [0, 1), 53 significant bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform-enough draw from 0..n-1 by plain modulo (documented contract)
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

private:
    uint64_t state_;
};

inline Graph path(int n) {
    if (n < 0) throw std::invalid_argument("path: negative length");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: at least 3 vertices required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

inline Graph complete(int n) {
    if (n < 0) throw std::invalid_argument("complete: negative size");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

// Parts {0..a-1} and {a..a+b-1}, all cross edges.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: parts must be non-empty");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

// Vertex 0 adjacent to everything; behind it, consecutive blocks forming
// cliques of the given sizes. sizes must be strictly increasing.
inline Graph apex_cliques(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("apex_cliques: at least one clique required");
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw std::invalid_argument("apex_cliques: sizes must be positive");
        if (i > 0 && sizes[i] <= sizes[i - 1])
            throw std::invalid_argument("apex_cliques: sizes must be strictly increasing");
    }
    int n = 1;
    for (int s : sizes) n += s;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    int base = 1;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) edges.emplace_back(base + i, base + j);
        base += s;
    }
    return Graph(n, edges);
}

// K_k with every edge subdivided once: branch vertices 0..k-1, then one
// vertex per pair (i,j), i < j, in lexicographic order. Bipartite.
inline Graph subdivided_complete(int k) {
    if (k < 2) throw std::invalid_argument("subdivided_complete: k must be at least 2");
    std::vector<std::pair<int, int>> edges;
    int next = k;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            edges.emplace_back(i, next);
            edges.emplace_back(j, next);
            ++next;
        }
    return Graph(next, edges);
}

// Random rooted tree: node 0 is the root, node i attaches to a uniform
// earlier node. Fully determined by the seed.
inline Tree random_tree(int nodes, uint64_t seed) {
    if (nodes < 0) throw std::invalid_argument("random_tree: negative size");
    Lcg64 rng(seed);
    std::vector<int> parent(nodes, -1);
    for (int i = 1; i < nodes; ++i) parent[i] = rng.below(i);
    return Tree(parent);
}

// Erdos-Renyi with probability p over the lexicographic pair order, then
// made connected by joining each later component to the part already
// connected, through uniformly drawn endpoints. Determined by the seed.
inline Graph random_connected(int n, double p, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_connected: negative size");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_connected: p outside [0,1]");
    Lcg64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) edges.emplace_back(i, j);
    Graph g(n, edges);
    auto comps = components(g);
    if (comps.size() <= 1) return g;
    VertexSet joined = comps[0];
    for (size_t c = 1; c < comps.size(); ++c) {
        int u = joined[rng.below(static_cast<int>(joined.size()))];
        int v = comps[c][rng.below(static_cast<int>(comps[c].size()))];
        edges.emplace_back(u, v);
        joined.insert(joined.end(), comps[c].begin(), comps[c].end());
    }
    return Graph(n, edges);
}

}  // namespace tg
