#pragma once

// Proper colorings: validation, exact chromatic number by branch and bound,
// the DSATUR upper bound, and the part-combining construction that turns
// per-part colorings into one proper coloring of the whole graph.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "treegraph/graph.hpp"

namespace tg {

struct Coloring {
    std::vector<int> colors;  // one entry per vertex
    int count = 0;            // number of distinct values used
};

namespace detail {

inline int distinct_count(const std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

}  // namespace detail

// Renumber colors by first occurrence in vertex order, so equal colorings
// compare equal byte for byte.
inline Coloring canonicalize(const Coloring& c) {
    std::vector<int> remap;
    Coloring out;
    out.colors.reserve(c.colors.size());
    for (int x : c.colors) {
        auto it = std::find(remap.begin(), remap.end(), x);
        if (it == remap.end()) {
            remap.push_back(x);
            it = remap.end() - 1;
        }
        out.colors.push_back(static_cast<int>(it - remap.begin()));
    }
    out.count = static_cast<int>(remap.size());
    return out;
}

inline bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        throw std::invalid_argument("is_proper: coloring must cover every vertex");
    for (int x : c.colors)
        if (x < 0) throw std::invalid_argument("is_proper: negative color");
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

// DSATUR heuristic: repeatedly color the vertex seeing the most distinct
// neighbor colors (ties by degree, then id) with the least feasible color.
// Always proper; count is an upper bound on the chromatic number.
inline Coloring dsatur_bound(const Graph& g) {
    int n = g.vertex_count();
    Coloring out;
    out.colors.assign(n, -1);
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (out.colors[v] != -1) continue;
            std::vector<int> seen;
            for (int w : g.neighbors(v))
                if (out.colors[w] != -1) seen.push_back(out.colors[w]);
            int sat = detail::distinct_count(seen);
            if (pick == -1 || sat > pick_sat ||
                (sat == pick_sat && g.degree(v) > g.degree(pick)))
                pick = v, pick_sat = sat;
        }
        std::vector<char> used(n + 1, 0);
        for (int w : g.neighbors(pick))
            if (out.colors[w] != -1) used[out.colors[w]] = 1;
        int c = 0;
        while (used[c]) ++c;
        out.colors[pick] = c;
    }
    out.count = detail::distinct_count(out.colors);
    return out;
}

namespace detail {

// Try to color g with exactly `limit` colors, clique vertices precolored.
// Dynamic saturation order plus first-use symmetry breaking.
inline bool color_with(const Graph& g, int limit, const VertexSet& clique,
                       std::vector<int>& colors) {
    int n = g.vertex_count();
    colors.assign(n, -1);
    for (size_t i = 0; i < clique.size(); ++i) colors[clique[i]] = static_cast<int>(i);
    int used = static_cast<int>(clique.size());
    auto rec = [&](auto&& self, int remaining, int used_colors) -> bool {
        if (remaining == 0) return true;
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (colors[v] != -1) continue;
            std::vector<int> seen;
            for (int w : g.neighbors(v))
                if (colors[w] != -1) seen.push_back(colors[w]);
            int sat = distinct_count(seen);
            if (pick == -1 || sat > pick_sat ||
                (sat == pick_sat && g.degree(v) > g.degree(pick)))
                pick = v, pick_sat = sat;
        }
        std::vector<char> bad(limit, 0);
        for (int w : g.neighbors(pick))
            if (colors[w] != -1) bad[colors[w]] = 1;
        int top = std::min(limit - 1, used_colors);  // at most one fresh color
        for (int c = 0; c <= top; ++c) {
            if (bad[c]) continue;
            colors[pick] = c;
            if (self(self, remaining - 1, std::max(used_colors, c + 1))) return true;
            colors[pick] = -1;
        }
        return false;
    };
    return rec(rec, n - used, used);
}

}  // namespace detail

// Exact chromatic number with a witness using exactly that many colors.
// Iterates the color budget from the clique lower bound up to the DSATUR
// upper bound. Guarded: beyond max_exact vertices callers get a resource
// error and should fall back to dsatur_bound.
inline std::pair<int, Coloring> chromatic_number(const Graph& g, int max_exact = 20) {
    int n = g.vertex_count();
    if (n > max_exact)
        throw resource_limit_error("chromatic_number: vertex count exceeds exact-solver guard");
    if (n == 0) return {0, Coloring{}};
    Coloring upper = dsatur_bound(g);
    VertexSet clique = max_clique(g);
    int lower = static_cast<int>(clique.size());
    for (int c = lower; c < upper.count; ++c) {
        std::vector<int> colors;
        if (detail::color_with(g, c, clique, colors))
            return {c, canonicalize(Coloring{colors, c})};
    }
    return {upper.count, canonicalize(upper)};
}

// Proper coloring of g from proper colorings of the parts of a partition.
// Vertex v in parts[i] with inner color k gets i*K + k, K = max inner count;
// cross-part edges differ in the part summand, inner edges in the inner one.
inline Coloring combine_part_colorings(const Graph& g, const std::vector<VertexSet>& parts,
                                       const std::vector<Coloring>& colorings) {
    if (parts.size() != colorings.size())
        throw std::invalid_argument("combine_part_colorings: one coloring per part required");
    std::vector<int> owner(g.vertex_count(), -1);
    for (size_t i = 0; i < parts.size(); ++i) {
        detail::check_vertex_set(g, parts[i], "combine_part_colorings part");
        for (int v : parts[i]) {
            if (owner[v] != -1)
                throw std::invalid_argument("combine_part_colorings: parts overlap at vertex " +
                                            std::to_string(v));
            owner[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (owner[v] == -1)
            throw std::invalid_argument("combine_part_colorings: vertex " + std::to_string(v) +
                                        " not covered by any part");
    // Canonicalize inner colorings so every color lies in 0..count-1,
    // otherwise the arithmetic below could collide across parts.
    std::vector<Coloring> inner(colorings.size());
    int inner_max = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (!is_proper(induced(g, parts[i]), colorings[i]))
            throw std::invalid_argument("combine_part_colorings: coloring " + std::to_string(i) +
                                        " is not proper on its part");
        inner[i] = canonicalize(colorings[i]);
        inner_max = std::max(inner_max, inner[i].count);
    }
    Coloring out;
    out.colors.assign(g.vertex_count(), 0);
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t r = 0; r < parts[i].size(); ++r)
            out.colors[parts[i][r]] = static_cast<int>(i) * inner_max + inner[i].colors[r];
    out.count = detail::distinct_count(out.colors);
    return out;
}

}  // namespace tg
