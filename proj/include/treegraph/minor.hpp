#pragma once

// Clique minors and subdivisions: witness types, verification with
// diagnostics, exact backtracking search for K_k minors, the Hadwiger
// number, and the greedy subdivision builder.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treegraph/graph.hpp"

namespace tg {

// K_k minor: k disjoint non-empty connected branch sets, every pair joined
// by at least one edge. Branch sets need not cover the graph.
struct MinorWitness {
    int k = 0;
    std::vector<VertexSet> branch_sets;
};

// Subdivision of K_m: m branch vertices plus one path per pair; paths[{a,b}]
// with a < b stores only the interior vertices, ordered from the a-side to
// the b-side (empty when the pair is a direct edge).
struct SubdivisionWitness {
    std::vector<int> branch_vertices;
    std::map<std::pair<int, int>, std::vector<int>> paths;
};

// Guards for the exact searches; exceeding one raises resource_limit_error
// rather than returning an approximate answer.
struct SearchLimits {
    int max_vertices = 16;
    int max_clique = 8;
};

struct VerifyResult {
    bool ok = true;
    std::string detail;  // first violated clause when !ok
    explicit operator bool() const { return ok; }
};

// Branch sets sorted by least member; within sets the order is already
// canonical. Makes witnesses comparable with ==.
inline MinorWitness normalize(MinorWitness w) {
    for (auto& s : w.branch_sets) std::sort(s.begin(), s.end());
    std::sort(w.branch_sets.begin(), w.branch_sets.end());
    return w;
}

inline VerifyResult verify_minor(const Graph& g, const MinorWitness& w) {
    if (w.k != static_cast<int>(w.branch_sets.size()))
        return {false, "witness claims k=" + std::to_string(w.k) + " but carries " +
                           std::to_string(w.branch_sets.size()) + " branch sets"};
    std::vector<int> owner(g.vertex_count(), -1);
    for (size_t i = 0; i < w.branch_sets.size(); ++i) {
        const auto& s = w.branch_sets[i];
        if (s.empty()) return {false, "branch set " + std::to_string(i) + " is empty"};
        for (int v : s) {
            if (v < 0 || v >= g.vertex_count())
                return {false, "branch set " + std::to_string(i) + " leaves the vertex range"};
            if (owner[v] != -1)
                return {false, "branch sets " + std::to_string(owner[v]) + " and " +
                                   std::to_string(i) + " overlap at vertex " + std::to_string(v)};
            owner[v] = static_cast<int>(i);
        }
        VertexSet sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (components_within(g, sorted).size() != 1)
            return {false, "branch set " + std::to_string(i) + " induces a disconnected subgraph"};
    }
    for (size_t i = 0; i < w.branch_sets.size(); ++i)
        for (size_t j = i + 1; j < w.branch_sets.size(); ++j) {
            bool joined = false;
            for (int u : w.branch_sets[i])
                for (int v : w.branch_sets[j]) joined |= g.adjacent(u, v);
            if (!joined)
                return {false, "no edge joins branch sets " + std::to_string(i) + " and " +
                                   std::to_string(j)};
        }
    return {};
}

namespace detail {

// Exact K_k minor search over one graph, bitmask state. Vertices are
// considered in BFS order from the highest-degree vertex; each is assigned
// to an existing branch set, the first empty branch set, or left unused.
// Prunes: every partial branch set must stay connectable through future
// vertices, every pair must stay joinable, and empty sets must not outnumber
// the future supply.
class MinorSearch {
public:
    MinorSearch(const Graph& g, int k) : g_(g), k_(k), n_(g.vertex_count()) {
        adj_.assign(n_, 0);
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u)) adj_[u] |= uint64_t{1} << v;
        order_ = bfs_order();
        future_.assign(n_ + 1, 0);
        for (int p = n_ - 1; p >= 0; --p)
            future_[p] = future_[p + 1] | (uint64_t{1} << order_[p]);
        sets_.assign(k_, 0);
    }

    std::optional<MinorWitness> run() {
        if (k_ > n_) return std::nullopt;
        if (static_cast<long long>(k_) * (k_ - 1) / 2 > g_.edge_count()) return std::nullopt;
        if (!place(0, 0)) return std::nullopt;
        MinorWitness w;
        w.k = k_;
        w.branch_sets.resize(k_);
        for (int i = 0; i < k_; ++i)
            for (int v = 0; v < n_; ++v)
                if ((sets_[i] >> v) & 1) w.branch_sets[i].push_back(v);
        return normalize(w);
    }

private:
    std::vector<int> bfs_order() {
        std::vector<int> order;
        std::vector<char> seen(n_, 0);
        while (static_cast<int>(order.size()) < n_) {
            int src = -1;
            for (int v = 0; v < n_; ++v)
                if (!seen[v] && (src == -1 || g_.degree(v) > g_.degree(src))) src = v;
            seen[src] = 1;
            order.push_back(src);
            for (size_t head = order.size() - 1; head < order.size(); ++head)
                for (int w : g_.neighbors(order[head]))
                    if (!seen[w]) {
                        seen[w] = 1;
                        order.push_back(w);
                    }
        }
        return order;
    }

    bool mask_connected(uint64_t mask) const {
        if (!mask) return false;
        uint64_t seen = mask & (~mask + 1);  // lowest bit
        while (true) {
            uint64_t grow = seen;
            uint64_t frontier = seen;
            while (frontier) {
                int v = __builtin_ctzll(frontier);
                frontier &= frontier - 1;
                grow |= adj_[v] & mask;
            }
            if (grow == seen) break;
            seen = grow;
        }
        return seen == mask;
    }

    uint64_t neighborhood(uint64_t mask) const {
        uint64_t out = 0;
        while (mask) {
            int v = __builtin_ctzll(mask);
            mask &= mask - 1;
            out |= adj_[v];
        }
        return out;
    }

    bool feasible(int next_pos) const {
        uint64_t future = future_[next_pos];
        int empty = 0;
        for (int i = 0; i < k_; ++i) empty += sets_[i] == 0;
        if (empty > __builtin_popcountll(future)) return false;
        for (int i = 0; i < k_; ++i) {
            if (!sets_[i]) continue;
            // the set plus all future vertices must hold the set in one piece
            uint64_t closure = sets_[i] & (~sets_[i] + 1);
            uint64_t within = sets_[i] | future;
            while (true) {
                uint64_t grow = closure;
                uint64_t frontier = closure;
                while (frontier) {
                    int v = __builtin_ctzll(frontier);
                    frontier &= frontier - 1;
                    grow |= adj_[v] & within;
                }
                if (grow == closure) break;
                closure = grow;
            }
            if ((closure & sets_[i]) != sets_[i]) return false;
        }
        for (int i = 0; i < k_; ++i)
            for (int j = i + 1; j < k_; ++j) {
                uint64_t a = sets_[i] | future, b = sets_[j] | future;
                if (!(neighborhood(a) & b)) return false;
            }
        return true;
    }

    bool complete() const {
        for (int i = 0; i < k_; ++i)
            if (!sets_[i] || !mask_connected(sets_[i])) return false;
        for (int i = 0; i < k_; ++i)
            for (int j = i + 1; j < k_; ++j)
                if (!(neighborhood(sets_[i]) & sets_[j])) return false;
        return true;
    }

    bool place(int pos, int opened) {
        if (pos == n_) return complete();
        uint64_t bit = uint64_t{1} << order_[pos];
        int top = std::min(opened, k_ - 1);  // sets 0..opened-1 exist, one may open
        for (int i = 0; i <= top; ++i) {
            sets_[i] |= bit;
            if (feasible(pos + 1) && place(pos + 1, std::max(opened, i + 1))) return true;
            sets_[i] &= ~bit;
        }
        if (feasible(pos + 1) && place(pos + 1, opened)) return true;  // leave unused
        return false;
    }

    const Graph& g_;
    int k_, n_;
    std::vector<uint64_t> adj_;
    std::vector<int> order_;
    std::vector<uint64_t> future_;  // future_[p] = vertices at positions >= p
    std::vector<uint64_t> sets_;
};

}  // namespace detail

// Exact: a valid witness iff g has a K_k minor, none otherwise. The guard
// refuses oversized instances instead of ever answering wrong.
inline std::optional<MinorWitness> find_clique_minor(const Graph& g, int k,
                                                     SearchLimits limits = {}) {
    if (k < 1) throw std::invalid_argument("find_clique_minor: k must be positive");
    if (g.vertex_count() > limits.max_vertices || g.vertex_count() > 64)
        throw resource_limit_error("find_clique_minor: vertex count exceeds search guard");
    if (k > limits.max_clique)
        throw resource_limit_error("find_clique_minor: k exceeds search guard");
    return detail::MinorSearch(g, k).run();
}

// Largest k with a K_k minor, with witness. Starts from the clique number
// (singleton branch sets) and grows k until the exact search fails; K_{k+1}
// minors contain K_k minors, so the first failure is conclusive. The clique
// guard is lifted to n internally since k never exceeds the vertex count.
inline std::pair<int, MinorWitness> hadwiger_number(const Graph& g, SearchLimits limits = {}) {
    if (!is_connected(g))
        throw std::invalid_argument("hadwiger_number: graph must be connected");
    if (g.vertex_count() > limits.max_vertices || g.vertex_count() > 64)
        throw resource_limit_error("hadwiger_number: vertex count exceeds search guard");
    int n = g.vertex_count();
    VertexSet clique = max_clique(g);
    MinorWitness best;
    best.k = static_cast<int>(clique.size());
    for (int v : clique) best.branch_sets.push_back({v});
    best = normalize(best);
    for (int k = best.k + 1; k <= n; ++k) {
        auto w = detail::MinorSearch(g, k).run();
        if (!w) break;
        best = *w;
    }
    return {best.k, best};
}

inline VerifyResult verify_subdivision(const Graph& g, const SubdivisionWitness& w);

// Contract each subdivision path into the branch set of its lower endpoint:
// branch set a holds v_a plus the interiors of every path keyed (a, b) with
// a < b. Sets stay connected and every pair stays joined.
inline MinorWitness subdivision_to_minor(const Graph& g, const SubdivisionWitness& w) {
    auto check = verify_subdivision(g, w);
    if (!check.ok)
        throw std::invalid_argument("subdivision_to_minor: " + check.detail);
    int m = static_cast<int>(w.branch_vertices.size());
    MinorWitness out;
    out.k = m;
    out.branch_sets.resize(m);
    for (int a = 0; a < m; ++a) out.branch_sets[a].push_back(w.branch_vertices[a]);
    for (const auto& [key, interior] : w.paths)
        for (int v : interior) out.branch_sets[key.first].push_back(v);
    return normalize(out);
}

inline VerifyResult verify_subdivision(const Graph& g, const SubdivisionWitness& w) {
    int m = static_cast<int>(w.branch_vertices.size());
    std::vector<char> taken(g.vertex_count(), 0);
    for (int v : w.branch_vertices) {
        if (v < 0 || v >= g.vertex_count())
            return {false, "branch vertex " + std::to_string(v) + " out of range"};
        if (taken[v]) return {false, "branch vertex " + std::to_string(v) + " repeats"};
        taken[v] = 1;
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (!w.paths.count({a, b}))
                return {false, "missing path for pair " + std::to_string(a) + "-" +
                                   std::to_string(b)};
    if (w.paths.size() != static_cast<size_t>(m) * (m - 1) / 2)
        return {false, "paths keyed outside the branch-vertex pairs"};
    for (const auto& [key, interior] : w.paths) {
        auto [a, b] = key;
        if (a < 0 || b <= a || b >= m)
            return {false, "invalid path key " + std::to_string(a) + "-" + std::to_string(b)};
        std::string name = std::to_string(a) + "-" + std::to_string(b);
        int prev = w.branch_vertices[a];
        for (int v : interior) {
            if (v < 0 || v >= g.vertex_count())
                return {false, "path " + name + " leaves the vertex range"};
            if (taken[v])
                return {false, "path " + name + " reuses vertex " + std::to_string(v)};
            taken[v] = 1;
            if (!g.adjacent(prev, v))
                return {false, "path " + name + " skips the non-edge " + std::to_string(prev) +
                                   "-" + std::to_string(v)};
            prev = v;
        }
        if (!g.adjacent(prev, w.branch_vertices[b]))
            return {false, "path " + name + " skips the non-edge " + std::to_string(prev) + "-" +
                               std::to_string(w.branch_vertices[b])};
    }
    return {};
}

// Greedy topological-clique builder: seed with the highest-degree vertex,
// then repeatedly take the highest-degree untouched vertex and join it to
// every earlier branch vertex by shortest paths through untouched vertices
// (lexicographically least among shortest). Stops at the first vertex that
// cannot be fully joined; the result always verifies, m is a lower bound.
inline SubdivisionWitness greedy_subdivision(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g))
        throw std::invalid_argument("greedy_subdivision: graph must be connected and non-empty");
    int n = g.vertex_count();
    auto best_unused = [&](const std::vector<char>& used) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!used[v] && (pick == -1 || g.degree(v) > g.degree(pick))) pick = v;
        return pick;
    };

    SubdivisionWitness w;
    std::vector<char> used(n, 0);  // branch vertices and committed interiors
    int first = best_unused(used);
    w.branch_vertices.push_back(first);
    used[first] = 1;

    while (true) {
        int v = best_unused(used);
        if (v == -1) break;
        int idx = static_cast<int>(w.branch_vertices.size());
        std::vector<char> round_used = used;
        round_used[v] = 1;
        std::map<std::pair<int, int>, std::vector<int>> round_paths;
        bool all_joined = true;
        for (int b = 0; b < idx && all_joined; ++b) {
            int target = w.branch_vertices[b];
            // BFS distances to the target through free vertices only
            std::vector<int> dist(n, -1);
            std::vector<int> queue{target};
            dist[target] = 0;
            for (size_t head = 0; head < queue.size(); ++head) {
                int x = queue[head];
                for (int y : g.neighbors(x)) {
                    if (dist[y] != -1) continue;
                    if (round_used[y] && y != v) continue;  // interiors must be fresh
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
            if (dist[v] == -1) {
                all_joined = false;
                break;
            }
            // walk from v toward the target, always through the least id
            std::vector<int> interior;
            int cur = v;
            while (dist[cur] > 1) {
                int next = -1;
                for (int y : g.neighbors(cur))
                    if (dist[y] == dist[cur] - 1 && !(round_used[y] && y != v) &&
                        (next == -1 || y < next))
                        next = y;
                interior.push_back(next);
                round_used[next] = 1;
                cur = next;
            }
            // paths are stored lower-endpoint first and b < idx here
            std::reverse(interior.begin(), interior.end());
            round_paths[{b, idx}] = std::move(interior);
        }
        if (!all_joined) break;
        w.branch_vertices.push_back(v);
        for (auto& [key, interior] : round_paths) w.paths[key] = std::move(interior);
        used = round_used;
    }
    return w;
}

}  // namespace tg
