#pragma once

// Finite rooted forests viewed as posets: the ancestor order, levels, chains
// and antichains, comparability graphs, specializing functions, T-graph
// validation, and exact width via Dilworth's theorem.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treegraph/graph.hpp"

namespace tg {

// Forest as a parent map. parent = -1 marks a root; several roots are fine.
// Heights are cached at construction: ht = 0 at roots, parent's height + 1
// elsewhere. Children lists are kept sorted by node id.
class Tree {
public:
    Tree() = default;

    explicit Tree(const std::vector<int>& parent) : parent_(parent) {
        int m = node_count();
        ht_.assign(m, -1);
        children_.resize(m);
        roots_.clear();
        for (int t = 0; t < m; ++t) {
            if (parent[t] == -1) continue;
            if (parent[t] < -1 || parent[t] >= m)
                throw std::invalid_argument("Tree: parent of node " + std::to_string(t) +
                                            " out of range");
        }
        for (int t = 0; t < m; ++t) compute_height(t);
        for (int t = 0; t < m; ++t) {
            if (parent[t] == -1)
                roots_.push_back(t);
            else
                children_[parent[t]].push_back(t);
        }
        // push order is increasing t, so children and roots are id-sorted
    }

    int node_count() const { return static_cast<int>(parent_.size()); }
    int parent(int t) const { return parent_[t]; }
    int height(int t) const { return ht_[t]; }
    bool is_root(int t) const { return parent_[t] == -1; }
    const std::vector<int>& children(int t) const { return children_[t]; }
    const std::vector<int>& roots() const { return roots_; }

    // Number of levels: max node height + 1, or 0 for the empty forest.
    int height() const {
        int h = 0;
        for (int t = 0; t < node_count(); ++t) h = std::max(h, ht_[t] + 1);
        return h;
    }

    // Reflexive ancestor order: a <= b in the forest.
    bool is_ancestor(int a, int b) const {
        while (ht_[b] > ht_[a]) b = parent_[b];
        return a == b;
    }

    bool comparable(int a, int b) const {
        return is_ancestor(a, b) || is_ancestor(b, a);
    }

private:
    void compute_height(int t) {
        // Walk up to the nearest node with a known height, then unwind.
        std::vector<int> path;
        int cur = t;
        while (cur != -1 && ht_[cur] == -1) {
            path.push_back(cur);
            cur = parent_[cur];
            if (static_cast<int>(path.size()) > node_count())
                throw std::invalid_argument("Tree: parent relation has a cycle");
        }
        int base = (cur == -1) ? -1 : ht_[cur];
        for (auto it = path.rbegin(); it != path.rend(); ++it) ht_[*it] = ++base;
    }

    std::vector<int> parent_;
    std::vector<int> ht_;
    std::vector<std::vector<int>> children_;
    std::vector<int> roots_;
};

// Node labeling meant to be injective on chains; labels in 0..k-1.
struct SpecializingFunction {
    std::vector<int> labels;
    int k = 0;
};

namespace detail {

inline void check_nodes(const Tree& t, const std::vector<int>& nodes, const char* what) {
    for (int x : nodes)
        if (x < 0 || x >= t.node_count())
            throw std::invalid_argument(std::string(what) + ": node out of range");
}

}  // namespace detail

// Graph on the forest's nodes; edge {s,u} iff s and u are distinct and
// comparable in tree order.
inline Graph comparability_graph(const Tree& t) {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < t.node_count(); ++b)
        for (int a = t.parent(b); a != -1; a = t.parent(a)) edges.emplace_back(a, b);
    return Graph(t.node_count(), edges);
}

// Nodes grouped by height; entry h lists the nodes of height h, ascending.
inline std::vector<std::vector<int>> levels(const Tree& t) {
    std::vector<std::vector<int>> out(t.height());
    for (int x = 0; x < t.node_count(); ++x) out[t.height(x)].push_back(x);
    return out;
}

inline bool is_chain(const Tree& t, const std::vector<int>& nodes) {
    detail::check_nodes(t, nodes, "is_chain");
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j)
            if (!t.comparable(nodes[i], nodes[j])) return false;
    return true;
}

inline bool is_antichain(const Tree& t, const std::vector<int>& nodes) {
    detail::check_nodes(t, nodes, "is_antichain");
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] != nodes[j] && t.comparable(nodes[i], nodes[j])) return false;
    return true;
}

namespace detail {

// Maximum matching (Kuhn) in the bipartite order graph: left a joined to
// right b iff a is a strict ancestor of b. match_of_right[b] = a or -1.
inline std::vector<int> ancestor_matching(const Tree& t) {
    int m = t.node_count();
    std::vector<std::vector<int>> below(m);  // strict descendants of each node
    for (int b = 0; b < m; ++b)
        for (int a = t.parent(b); a != -1; a = t.parent(a)) below[a].push_back(b);
    std::vector<int> match_right(m, -1), match_left(m, -1);
    std::vector<char> visited(m, 0);
    auto try_augment = [&](auto&& self, int a) -> bool {
        for (int b : below[a]) {
            if (visited[b]) continue;
            visited[b] = 1;
            if (match_right[b] == -1 || self(self, match_right[b])) {
                match_right[b] = a;
                match_left[a] = b;
                return true;
            }
        }
        return false;
    };
    for (int a = 0; a < m; ++a) {
        std::fill(visited.begin(), visited.end(), 0);
        try_augment(try_augment, a);
    }
    return match_right;
}

}  // namespace detail

// A maximum antichain, exact via Dilworth: the poset width equals node count
// minus a maximum matching in the strict-ancestor bipartite graph, and the
// antichain itself falls out of the Koenig cover. Returned sorted by id.
inline std::vector<int> max_antichain(const Tree& t) {
    int m = t.node_count();
    auto match_right = detail::ancestor_matching(t);
    std::vector<int> match_left(m, -1);
    for (int b = 0; b < m; ++b)
        if (match_right[b] != -1) match_left[match_right[b]] = b;

    // Alternating reachability from unmatched left vertices.
    std::vector<char> left_seen(m, 0), right_seen(m, 0);
    std::vector<std::vector<int>> below(m);
    for (int b = 0; b < m; ++b)
        for (int a = t.parent(b); a != -1; a = t.parent(a)) below[a].push_back(b);
    std::vector<int> stack;
    for (int a = 0; a < m; ++a)
        if (match_left[a] == -1) {
            left_seen[a] = 1;
            stack.push_back(a);
        }
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b : below[a]) {
            if (right_seen[b]) continue;
            right_seen[b] = 1;
            int a2 = match_right[b];
            if (a2 != -1 && !left_seen[a2]) {
                left_seen[a2] = 1;
                stack.push_back(a2);
            }
        }
    }
    // Koenig cover = (left not reached) + (right reached); the antichain is
    // every node outside the cover on both sides.
    std::vector<int> out;
    for (int x = 0; x < m; ++x)
        if (left_seen[x] && !right_seen[x]) out.push_back(x);
    return out;
}

// (max antichain size, max chain length). Width by Dilworth, height from
// the cached node heights.
inline std::pair<int, int> width_and_height(const Tree& t) {
    int m = t.node_count();
    auto match_right = detail::ancestor_matching(t);
    int matched = 0;
    for (int b = 0; b < m; ++b) matched += match_right[b] != -1;
    return {m - matched, t.height()};
}

// True iff no label repeats along any chain; checking each node against its
// strict ancestors covers all comparable pairs.
inline bool is_specializing(const Tree& t, const SpecializingFunction& f) {
    if (static_cast<int>(f.labels.size()) != t.node_count())
        throw std::invalid_argument("is_specializing: labels must cover every node");
    for (int x : f.labels)
        if (x < 0 || x >= f.k)
            throw std::invalid_argument("is_specializing: label outside 0..k-1");
    for (int b = 0; b < t.node_count(); ++b)
        for (int a = t.parent(b); a != -1; a = t.parent(a))
            if (f.labels[a] == f.labels[b]) return false;
    return true;
}

// T-graph test, finite form: every edge of h joins comparable nodes and
// every non-root node is adjacent in h to its parent. (Finite predecessor
// sets have the parent as maximum, which collapses the cofinality clause.)
inline bool is_t_graph(const Tree& t, const Graph& h) {
    if (h.vertex_count() != t.node_count())
        throw std::invalid_argument("is_t_graph: node/vertex count mismatch");
    for (auto [a, b] : h.edges())
        if (!t.comparable(a, b)) return false;
    for (int b = 0; b < t.node_count(); ++b)
        if (!t.is_root(b) && !h.adjacent(b, t.parent(b))) return false;
    return true;
}

// Calls fn once per maximal chain (root-to-leaf path, root first).
template <typename Fn>
void for_each_branch(const Tree& t, Fn&& fn) {
    std::vector<int> chain;
    for (int x = 0; x < t.node_count(); ++x) {
        if (!t.children(x).empty()) continue;
        chain.clear();
        for (int a = x; a != -1; a = t.parent(a)) chain.push_back(a);
        std::reverse(chain.begin(), chain.end());
        fn(const_cast<const std::vector<int>&>(chain));
    }
}

// All maximal chains at once. Guarded: trees can have exponentially many
// branches, so anything past 2^16 must use for_each_branch instead.
inline std::vector<std::vector<int>> branches(const Tree& t) {
    int leaves = 0;
    for (int x = 0; x < t.node_count(); ++x) leaves += t.children(x).empty();
    if (leaves > (1 << 16))
        throw resource_limit_error("branches: more than 2^16 maximal chains");
    std::vector<std::vector<int>> out;
    out.reserve(leaves);
    for_each_branch(t, [&](const std::vector<int>& chain) { out.push_back(chain); });
    return out;
}

}  // namespace tg
