#pragma once

// Finite simple undirected graphs and the connectivity primitives the rest
// of the library is built on: components, restricted distances, exact
// k- and (k,l)-connectivity, minimum vertex separators, and contraction.
//
// Graphs are immutable after construction and all operations here are pure,
// so values can be shared freely across threads.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tg {

// Sorted ascending, no duplicates, members in [0, n) of the ambient graph.
using VertexSet = std::vector<int>;

// Thrown when an exact computation would exceed its configured size guard.
// Guards exist so exact solvers refuse instead of silently degrading.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Graph {
public:
    Graph() = default;

    // Self-loops are rejected; duplicate edges collapse (set semantics).
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        words_ = (n + 63) / 64;
        bits_.assign(static_cast<size_t>(n) * words_, 0);
        adj_.resize(n);
        for (auto [u, v] : edge_list) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("Graph: self-loop " + std::to_string(u));
            if (adjacent(u, v)) continue;
            set_bit(u, v);
            set_bit(v, u);
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            ++m_;
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Edges as pairs (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (v > u) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    void set_bit(int u, int v) {
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    }

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
    std::vector<uint64_t> bits_;         // n_ rows of words_ adjacency bits
};

struct Separator {
    VertexSet vertices;
    int size() const { return static_cast<int>(vertices.size()); }
};

namespace detail {

inline void check_vertex_set(const Graph& g, const VertexSet& s, const char* what) {
    int prev = -1;
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument(std::string(what) + ": vertex out of range");
        if (v <= prev)
            throw std::invalid_argument(std::string(what) + ": not sorted or duplicate");
        prev = v;
    }
}

// Calls fn(subset) for every subset of 0..n-1 with fewer than k elements,
// in order of increasing size, lexicographic within a size. fn returning
// false stops the enumeration (and makes this return false).
template <typename Fn>
bool for_each_small_subset(int n, int k, Fn&& fn) {
    std::vector<int> subset;
    for (int size = 0; size < k; ++size) {
        if (size > n) break;
        subset.assign(size, 0);
        for (int i = 0; i < size; ++i) subset[i] = i;
        while (true) {
            if (!fn(const_cast<const std::vector<int>&>(subset))) return false;
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && subset[i] == n - size + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return true;
}

}  // namespace detail

// Components of g, each sorted, listed by least member.
inline std::vector<VertexSet> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> out;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// Components of the subgraph induced by `within`; same ordering contract.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
    detail::check_vertex_set(g, within, "components_within");
    std::vector<char> inside(g.vertex_count(), 0);
    for (int v : within) inside[v] = 1;
    std::vector<VertexSet> out;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack;
    for (int s : within) {
        if (seen[s]) continue;
        VertexSet comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (inside[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

// Shortest-path length from u to v using only vertices of `within`;
// nullopt when no such path exists. Both endpoints must lie in `within`.
inline std::optional<int> distance_within(const Graph& g, const VertexSet& within,
                                          int u, int v) {
    detail::check_vertex_set(g, within, "distance_within");
    std::vector<int> dist(g.vertex_count(), -2);  // -2 outside, -1 unreached
    for (int w : within) dist[w] = -1;
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() ||
        dist[u] == -2 || dist[v] == -2)
        throw std::invalid_argument("distance_within: endpoint outside the set");
    if (u == v) return 0;
    std::vector<int> queue{u};
    dist[u] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int w : g.neighbors(x)) {
            if (dist[w] != -1) continue;
            dist[w] = dist[x] + 1;
            if (w == v) return dist[w];
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

// BFS distances from src inside `within` (vertices outside get -2,
// unreachable ones -1). Internal workhorse for the decomposition.
inline std::vector<int> distances_within(const Graph& g, const VertexSet& within, int src) {
    std::vector<int> dist(g.vertex_count(), -2);
    for (int w : within) dist[w] = -1;
    dist[src] = 0;
    std::vector<int> queue{src};
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int w : g.neighbors(x))
            if (dist[w] == -1) {
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

namespace detail {

inline int component_count_without(const Graph& g, const std::vector<int>& removed) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : removed) gone[v] = 1;
    int count = 0;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (gone[s] || seen[s]) continue;
        ++count;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!gone[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

}  // namespace detail

// Definitional k-connectivity: g stays connected (and non-empty) after
// removing any fewer than k vertices. Enumerates every subset of size < k.
inline bool is_k_connected(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_k_connected: k must be positive");
    return detail::for_each_small_subset(g.vertex_count(), k, [&](const std::vector<int>& s) {
        return detail::component_count_without(g, s) == 1;
    });
}

// Generalized connectedness: after removing any fewer than k vertices the
// number of components is at least one and fewer than l.
inline bool is_kl_connected(const Graph& g, int k, int l) {
    if (k < 1 || l < 1)
        throw std::invalid_argument("is_kl_connected: k and l must be positive");
    return detail::for_each_small_subset(g.vertex_count(), k, [&](const std::vector<int>& s) {
        int c = detail::component_count_without(g, s);
        return c >= 1 && c < l;
    });
}

namespace detail {

// Unit-capacity vertex flow between the contracted sets x and y.
// Returns the minimum separator disjoint from x and y, or nullopt when
// none exists (some x-vertex adjacent to some y-vertex).
inline std::optional<Separator> vertex_cut(const Graph& g, const VertexSet& x,
                                           const VertexSet& y) {
    int n = g.vertex_count();
    std::vector<char> in_x(n, 0), in_y(n, 0);
    for (int v : x) in_x[v] = 1;
    for (int v : y) in_y[v] = 1;
    for (int u : x)
        for (int w : g.neighbors(u))
            if (in_y[w]) return std::nullopt;

    // Nodes: in(v)=2v, out(v)=2v+1 for free vertices, plus source and sink.
    int source = 2 * n, sink = 2 * n + 1, big = n + 1;
    int total = 2 * n + 2;
    std::vector<std::vector<int>> cap(total, std::vector<int>(total, 0));
    auto out_node = [&](int v) { return in_x[v] ? source : 2 * v + 1; };
    auto in_node = [&](int v) { return in_y[v] ? sink : 2 * v; };
    for (int v = 0; v < n; ++v)
        if (!in_x[v] && !in_y[v]) cap[2 * v][2 * v + 1] = 1;
    for (auto [u, v] : g.edges()) {
        if (in_y[u] || in_x[v]) std::swap(u, v);  // orient x-side first when it helps
        if (!in_y[u] && !in_x[v]) cap[out_node(u)][in_node(v)] = big;
        if (!in_y[v] && !in_x[u]) cap[out_node(v)][in_node(u)] = big;
    }

    int flow = 0;
    std::vector<int> prev(total);
    while (true) {
        std::fill(prev.begin(), prev.end(), -1);
        prev[source] = source;
        std::vector<int> queue{source};
        for (size_t head = 0; head < queue.size() && prev[sink] == -1; ++head) {
            int a = queue[head];
            for (int b = 0; b < total; ++b)
                if (prev[b] == -1 && cap[a][b] > 0) {
                    prev[b] = a;
                    queue.push_back(b);
                }
        }
        if (prev[sink] == -1) break;
        for (int b = sink; b != source; b = prev[b]) {
            cap[prev[b]][b] -= 1;
            cap[b][prev[b]] += 1;
        }
        ++flow;
        if (flow > n) return std::nullopt;  // unbounded path, cannot separate
    }

    // Min cut: free vertices whose in-node is reachable but out-node is not.
    std::vector<char> reach(total, 0);
    reach[source] = 1;
    std::vector<int> queue{source};
    for (size_t head = 0; head < queue.size(); ++head) {
        int a = queue[head];
        for (int b = 0; b < total; ++b)
            if (!reach[b] && cap[a][b] > 0) {
                reach[b] = 1;
                queue.push_back(b);
            }
    }
    Separator sep;
    for (int v = 0; v < n; ++v)
        if (!in_x[v] && !in_y[v] && reach[2 * v] && !reach[2 * v + 1])
            sep.vertices.push_back(v);
    return sep;
}

}  // namespace detail

// Minimum-cardinality S, disjoint from x and y, whose removal leaves x and y
// in different components. nullopt means inseparable (adjacent sets).
// x and y must be non-empty and disjoint.
inline std::optional<Separator> min_separator(const Graph& g, const VertexSet& x,
                                              const VertexSet& y) {
    detail::check_vertex_set(g, x, "min_separator x");
    detail::check_vertex_set(g, y, "min_separator y");
    if (x.empty() || y.empty())
        throw std::invalid_argument("min_separator: empty side");
    VertexSet inter;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(inter));
    if (!inter.empty())
        throw std::invalid_argument("min_separator: x and y overlap");
    return detail::vertex_cut(g, x, y);
}

// Relaxed variant: S may meet x and y, as long as both sets keep a vertex
// and no remaining component contains survivors of both. Exhaustive search
// by increasing size, so only sensible at small scale.
inline std::optional<Separator> min_separator_relaxed(const Graph& g, const VertexSet& x,
                                                      const VertexSet& y) {
    detail::check_vertex_set(g, x, "min_separator_relaxed x");
    detail::check_vertex_set(g, y, "min_separator_relaxed y");
    if (x.empty() || y.empty())
        throw std::invalid_argument("min_separator_relaxed: empty side");
    int n = g.vertex_count();
    if (n > 20)
        throw resource_limit_error("min_separator_relaxed: graph too large for exhaustive search");
    std::vector<char> in_x(n, 0), in_y(n, 0);
    for (int v : x) in_x[v] = 1;
    for (int v : y) in_y[v] = 1;
    std::optional<Separator> found;
    detail::for_each_small_subset(n, n + 1, [&](const std::vector<int>& s) {
        std::vector<char> gone(n, 0);
        for (int v : s) gone[v] = 1;
        bool x_alive = false, y_alive = false;
        for (int v : x) x_alive |= !gone[v];
        for (int v : y) y_alive |= !gone[v];
        if (!x_alive || !y_alive) return true;
        std::vector<char> seen(n, 0);
        std::vector<int> stack;
        bool mixed = false;
        for (int start = 0; start < n && !mixed; ++start) {
            if (gone[start] || seen[start]) continue;
            bool has_x = false, has_y = false;
            seen[start] = 1;
            stack.assign(1, start);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                has_x |= static_cast<bool>(in_x[v]);
                has_y |= static_cast<bool>(in_y[v]);
                for (int w : g.neighbors(v))
                    if (!gone[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            mixed |= has_x && has_y;
        }
        if (!mixed) {
            found = Separator{VertexSet(s.begin(), s.end())};
            return false;
        }
        return true;
    });
    return found;
}

// Contract each part to a single vertex. Parts must be pairwise disjoint,
// non-empty and induce connected subgraphs; they need not cover g.
inline Graph quotient(const Graph& g, const std::vector<VertexSet>& parts) {
    std::vector<int> owner(g.vertex_count(), -1);
    for (size_t i = 0; i < parts.size(); ++i) {
        detail::check_vertex_set(g, parts[i], "quotient part");
        if (parts[i].empty())
            throw std::invalid_argument("quotient: empty part " + std::to_string(i));
        if (components_within(g, parts[i]).size() != 1)
            throw std::invalid_argument("quotient: part " + std::to_string(i) +
                                        " is not connected");
        for (int v : parts[i]) {
            if (owner[v] != -1)
                throw std::invalid_argument("quotient: parts overlap at vertex " +
                                            std::to_string(v));
            owner[v] = static_cast<int>(i);
        }
    }
    std::vector<std::pair<int, int>> contracted;
    for (auto [u, v] : g.edges()) {
        int a = owner[u], b = owner[v];
        if (a != -1 && b != -1 && a != b) contracted.emplace_back(a, b);
    }
    return Graph(static_cast<int>(parts.size()), contracted);
}

// Subgraph induced by s; vertex i of the result is s[i].
inline Graph induced(const Graph& g, const VertexSet& s) {
    detail::check_vertex_set(g, s, "induced");
    std::vector<int> index(g.vertex_count(), -1);
    for (size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : g.edges())
        if (index[u] != -1 && index[v] != -1) kept.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(s.size()), kept);
}

// Exact maximum clique by bitset branch and bound. Guarded at 64 vertices;
// use greedy_clique for bound-only work on bigger inputs.
inline VertexSet max_clique(const Graph& g) {
    int n = g.vertex_count();
    if (n > 64) throw resource_limit_error("max_clique: more than 64 vertices");
    if (n == 0) return {};
    std::vector<uint64_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u] |= uint64_t{1} << v;
    uint64_t best = 0;
    int best_size = 0;
    auto rec = [&](auto&& self, uint64_t cur, int cur_size, uint64_t cand) -> void {
        if (cur_size + __builtin_popcountll(cand) <= best_size) return;
        if (!cand) {
            best = cur;
            best_size = cur_size;
            return;
        }
        int v = __builtin_ctzll(cand);
        uint64_t bit = uint64_t{1} << v;
        self(self, cur | bit, cur_size + 1, cand & adj[v]);
        self(self, cur, cur_size, cand & ~bit);
    };
    rec(rec, 0, 0, n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if ((best >> v) & 1) out.push_back(v);
    return out;
}

// Greedy clique, valid lower bound at any size.
inline VertexSet greedy_clique(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {};
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    VertexSet clique;
    for (int v : order) {
        bool fits = true;
        for (int u : clique) fits &= g.adjacent(u, v);
        if (fits) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

}  // namespace tg
