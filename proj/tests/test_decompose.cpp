#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "treegraph/decompose.hpp"
#include "treegraph/gen.hpp"
#include "treegraph/minor.hpp"

using namespace tg;

namespace {

std::vector<int> parent_sequence(const Decomposition& d) {
    std::vector<int> out;
    for (int t = 0; t < d.tree.node_count(); ++t) out.push_back(d.tree.parent(t));
    return out;
}

}  // namespace

TEST_CASE("golden decompositions") {
    SECTION("path on three vertices is a chain") {
        Decomposition d = decompose(path(3));
        CHECK(d.vertex_of == std::vector<int>{0, 1, 2});
        CHECK(parent_sequence(d) == std::vector<int>{-1, 0, 1});
        CHECK(d.cone[0] == VertexSet{0, 1, 2});
        CHECK(d.cone[2] == VertexSet{2});
        CHECK(d.f_edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    }
    SECTION("star splits into leaves below the center") {
        Decomposition d = decompose(complete_bipartite(1, 3));
        CHECK(d.vertex_of == std::vector<int>{0, 1, 2, 3});
        CHECK(parent_sequence(d) == std::vector<int>{-1, 0, 0, 0});
        CHECK(d.tree.height() == 2);
        CHECK(d.f_edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
    }
    SECTION("four-cycle is a chain with interleaved sides") {
        Decomposition d = decompose(complete_bipartite(2, 2));
        CHECK(d.vertex_of == std::vector<int>{0, 2, 1, 3});
        CHECK(parent_sequence(d) == std::vector<int>{-1, 0, 1, 2});
        CHECK(d.cone[1] == VertexSet{1, 2, 3});
        CHECK(d.cone[2] == VertexSet{1, 3});
    }
    SECTION("complete graph is a chain in vertex order") {
        Decomposition d = decompose(complete(4));
        CHECK(d.vertex_of == std::vector<int>{0, 1, 2, 3});
        CHECK(parent_sequence(d) == std::vector<int>{-1, 0, 1, 2});
        CHECK(d.f_edges.size() == 6);
    }
    SECTION("disconnected input gives one root per component") {
        Graph g(5, {{0, 1}, {3, 4}});
        Decomposition d = decompose(g);
        std::vector<int> root_vertices;
        for (int r : d.tree.roots()) root_vertices.push_back(d.vertex_of[r]);
        CHECK(root_vertices == std::vector<int>{0, 2, 3});
        auto comps = components(g);
        for (int r : d.tree.roots()) {
            bool found = false;
            for (const auto& c : comps) found |= (c == d.cone[r]);
            CHECK(found);
        }
        CHECK(verify_decomposition(g, d).all_pass());
    }
}

TEST_CASE("verification passes on everything the builder produces") {
    SECTION("exhaustive over small graphs") {
        for (int n = 1; n <= 5; ++n)
            oracle::each_labeled_graph(n, [&](const Graph& g, uint64_t) {
                DecompositionReport r = verify_decomposition(g, decompose(g));
                INFO(r.first_failure());
                CHECK(r.all_pass());
            });
    }
    SECTION("random graphs, including sparse ones") {
        for (int trial = 0; trial < 30; ++trial) {
            Graph g = random_connected(11, 0.25 + 0.05 * (trial % 5), 7100 + trial);
            DecompositionReport r = verify_decomposition(g, decompose(g));
            INFO(r.first_failure());
            CHECK(r.all_pass());
        }
    }
}

TEST_CASE("verification catches planted faults") {
    SECTION("extra incomparable f-edge") {
        Decomposition d = decompose(complete_bipartite(1, 3));
        d.f_edges.push_back({1, 2});  // two leaves, incomparable
        std::sort(d.f_edges.begin(), d.f_edges.end());
        DecompositionReport r = verify_decomposition(d.graph, d);
        CHECK_FALSE(r.f_edges_comparable.ok);
        CHECK_FALSE(r.all_pass());
    }
    SECTION("extra comparable but non-adjacent f-edge") {
        Decomposition d = decompose(path(3));
        d.f_edges.push_back({0, 2});
        std::sort(d.f_edges.begin(), d.f_edges.end());
        DecompositionReport r = verify_decomposition(d.graph, d);
        CHECK(r.f_edges_comparable.ok);
        CHECK_FALSE(r.f_edges_match_adjacency.ok);
    }
    SECTION("swapped carried vertices") {
        Decomposition d = decompose(path(3));
        std::swap(d.vertex_of[1], d.vertex_of[2]);
        d.node_of[d.vertex_of[1]] = 1;
        d.node_of[d.vertex_of[2]] = 2;
        DecompositionReport r = verify_decomposition(d.graph, d);
        CHECK_FALSE(r.partition_bijection.ok);
        CHECK_FALSE(r.all_pass());
    }
    SECTION("cone that is not a component") {
        Decomposition d = decompose(path(3));
        d.cone[1] = VertexSet{1};  // drops 2, no longer the full component
        DecompositionReport r = verify_decomposition(d.graph, d);
        CHECK_FALSE(r.cones_are_components.ok);
        CHECK_FALSE(r.all_pass());
    }
    SECTION("vertex universe mismatch throws instead of reporting") {
        Decomposition d = decompose(path(3));
        CHECK_THROWS_AS(verify_decomposition(complete(4), d), std::invalid_argument);
    }
}

TEST_CASE("consumption order walks toward each vertex") {
    for (int n = 1; n <= 5; ++n)
        oracle::each_connected_graph(n, [&](const Graph& g, uint64_t) {
            CHECK(check_consumption_trace(decompose(g)).ok);
        });
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected(12, 0.3, 7900 + trial);
        CHECK(check_consumption_trace(decompose(g)).ok);
    }
}

TEST_CASE("level coloring") {
    SECTION("star levels") {
        Decomposition d = decompose(complete_bipartite(1, 3));
        Coloring c = level_coloring(d);
        CHECK(c.colors == std::vector<int>{0, 1, 1, 1});
        CHECK(c.count == 2);
        CHECK(is_proper(d.graph, c));
    }
    SECTION("complete graph needs every level") {
        Decomposition d = decompose(complete(4));
        Coloring c = level_coloring(d);
        CHECK(c.count == 4);
        CHECK(is_proper(d.graph, c));
    }
    SECTION("proper with count equal to tree height on random graphs") {
        for (int trial = 0; trial < 20; ++trial) {
            Graph g = random_connected(10, 0.35, 8300 + trial);
            Decomposition d = decompose(g);
            Coloring c = level_coloring(d);
            CHECK(is_proper(g, c));
            CHECK(c.count == d.tree.height());
        }
    }
    SECTION("subdivided complete graph stays two-chromatic regardless of levels") {
        Graph g = subdivided_complete(4);
        Decomposition d = decompose(g);
        Coloring c = level_coloring(d);
        CHECK(is_proper(g, c));
        CHECK(c.count == d.tree.height());
        CHECK(chromatic_number(g).first == 2);
    }
}

TEST_CASE("coloring through a tree partition") {
    SECTION("singleton blocks with height labels reproduce the level coloring") {
        Decomposition d = decompose(cycle(5));
        TreePartition p;
        p.tree = d.tree;
        p.blocks.assign(d.tree.node_count(), {});
        for (int t = 0; t < d.tree.node_count(); ++t) p.blocks[t] = {d.vertex_of[t]};
        CHECK(check_tree_partition(d.graph, p).ok);
        std::vector<int> ht(d.tree.node_count());
        for (int t = 0; t < d.tree.node_count(); ++t) ht[t] = d.tree.height(t);
        SpecializingFunction f{ht, d.tree.height()};
        Coloring c = coloring_from_specializing(d.graph, p, f);
        CHECK(c.colors == level_coloring(d).colors);
    }
    SECTION("two-node partition of a path chain") {
        TreePartition p;
        p.tree = Tree({-1, 0});
        p.blocks = {{0, 1}, {2, 3}};
        SpecializingFunction f{{0, 1}, 2};
        Coloring c = coloring_from_specializing(path(4), p, f);
        CHECK(c.colors == std::vector<int>{0, 1, 2, 3});
        CHECK(is_proper(path(4), c));
    }
    SECTION("partition faults are named") {
        TreePartition p;
        p.tree = Tree({-1, 0});
        p.blocks = {{0, 1}, {2}};  // misses vertex 3
        VerifyResult r = check_tree_partition(path(4), p);
        CHECK_FALSE(r.ok);
        CHECK(r.detail.find("3") != std::string::npos);
        SpecializingFunction f{{0, 1}, 2};
        CHECK_THROWS_AS(coloring_from_specializing(path(4), p, f), std::invalid_argument);
    }
    SECTION("edge joining blocks of incomparable nodes is rejected") {
        // 4-cycle split over a root and two sibling children: edge 2-3
        // crosses the siblings
        TreePartition p;
        p.tree = Tree({-1, 0, 0});
        p.blocks = {{0}, {1, 2}, {3}};
        VerifyResult r = check_tree_partition(cycle(4), p);
        CHECK_FALSE(r.ok);
        CHECK(r.detail.find("incomparable") != std::string::npos);
    }
    SECTION("non-specializing labels throw") {
        TreePartition p;
        p.tree = Tree({-1, 0});
        p.blocks = {{0, 1}, {2, 3}};
        SpecializingFunction f{{0, 0}, 2};
        CHECK_THROWS_AS(coloring_from_specializing(path(4), p, f), std::invalid_argument);
    }
}

TEST_CASE("chains from minors and independent sets from antichains") {
    SECTION("complete graph witness maps to the whole chain") {
        Decomposition d = decompose(complete(4));
        MinorWitness w{4, {{0}, {1}, {2}, {3}}};
        CHECK(chain_from_minor(d, w) == std::vector<int>{0, 1, 2, 3});
    }
    SECTION("five-cycle witness picks minimum-height nodes") {
        Decomposition d = decompose(cycle(5));
        MinorWitness w{3, {{0, 1}, {2, 3}, {4}}};
        REQUIRE(verify_minor(d.graph, w).ok);
        std::vector<int> chain = chain_from_minor(d, w);
        CHECK(chain == std::vector<int>{0, 2, 4});
        CHECK(is_chain(d.tree, chain));
    }
    SECTION("single branch set gives a single node") {
        Decomposition d = decompose(path(3));
        CHECK(chain_from_minor(d, {1, {{1}}}).size() == 1);
    }
    SECTION("invalid witness throws") {
        Decomposition d = decompose(cycle(4));
        CHECK_THROWS_AS(chain_from_minor(d, {3, {{0}, {1}, {2}}}), std::invalid_argument);
    }
    SECTION("chain length matches witness order on random graphs") {
        for (int trial = 0; trial < 15; ++trial) {
            Graph g = random_connected(8, 0.45, 9100 + trial);
            Decomposition d = decompose(g);
            auto [h, w] = hadwiger_number(g);
            std::vector<int> chain = chain_from_minor(d, w);
            CHECK(static_cast<int>(chain.size()) == h);
            CHECK(is_chain(d.tree, chain));
        }
    }
    SECTION("antichain nodes carry an independent set") {
        Decomposition d = decompose(complete_bipartite(1, 3));
        VertexSet ind = independent_from_antichain(d, {1, 2, 3});
        CHECK(ind == VertexSet{1, 2, 3});
        CHECK_THROWS_AS(independent_from_antichain(d, {0, 1}), std::invalid_argument);
        CHECK(independent_from_antichain(d, {0}) == VertexSet{0});
    }
    SECTION("maximum antichains give independent sets of the same size") {
        for (int trial = 0; trial < 15; ++trial) {
            Graph g = random_connected(9, 0.3, 9700 + trial);
            Decomposition d = decompose(g);
            auto anti = max_antichain(d.tree);
            VertexSet ind = independent_from_antichain(d, anti);
            CHECK(ind.size() == anti.size());
            for (size_t i = 0; i < ind.size(); ++i)
                for (size_t j = i + 1; j < ind.size(); ++j)
                    CHECK_FALSE(g.adjacent(ind[i], ind[j]));
        }
    }
}

TEST_CASE("level width bound") {
    SECTION("exhaustive small slice") {
        for (int n = 1; n <= 5; ++n)
            oracle::each_connected_graph(n, [&](const Graph& g, uint64_t) {
                Decomposition d = decompose(g);
                for (int k = 1; k <= 3; ++k)
                    for (int l = 1; l <= n; ++l)
                        if (is_kl_connected(g, k, l)) CHECK(level_width_ok(d, k, l));
            });
    }
    SECTION("random slice") {
        for (int trial = 0; trial < 15; ++trial) {
            Graph g = random_connected(10, 0.3, 10400 + trial);
            Decomposition d = decompose(g);
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 10; ++l)
                    if (is_kl_connected(g, k, l)) CHECK(level_width_ok(d, k, l));
        }
    }
}
