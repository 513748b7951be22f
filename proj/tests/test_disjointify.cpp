#include <doctest.h>

#include <set>

#include "splicer/connectivity.hpp"
#include "splicer/disjointify.hpp"

using namespace splicer;

namespace {

SpanningTree path4() {
    return SpanningTree::validate({Edge(0, 1), Edge(1, 2), Edge(2, 3)}, 4);
}

bool pairwise_disjoint(const std::vector<SpanningTree>& trees) {
    std::set<Edge> seen;
    for (const auto& t : trees)
        for (const Edge& e : t.edges())
            if (!seen.insert(e).second) return false;
    return true;
}

}  // namespace

TEST_CASE("split_components") {
    SUBCASE("path split in the middle") {
        auto [c1, c2] = split_components(path4(), Edge(1, 2));
        CHECK(c1 == std::vector<VertexId>{0, 1});
        CHECK(c2 == std::vector<VertexId>{2, 3});
    }
    SUBCASE("leaf split on a star") {
        auto star = SpanningTree::validate({Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4)}, 5);
        auto [c1, c2] = split_components(star, Edge(0, 4));
        CHECK(c1 == std::vector<VertexId>{0, 1, 2, 3});
        CHECK(c2 == std::vector<VertexId>{4});
    }
    SUBCASE("always a non-trivial partition") {
        RngStream rng(3);
        for (int rep = 0; rep < 30; ++rep) {
            auto t = sample_tree(9, SamplerKind::PruferUniform, rng);
            for (const Edge& e : t.edges()) {
                auto [c1, c2] = split_components(t, e);
                CHECK(c1.size() + c2.size() == 9);
                CHECK(!c1.empty());
                CHECK(!c2.empty());
            }
        }
    }
    SUBCASE("edge not in tree") {
        CHECK_THROWS_AS(split_components(path4(), Edge(0, 3)), GraphError);
    }
}

TEST_CASE("get_replacement_edge") {
    SUBCASE("min C2-degree vertex wins, smallest non-neighbor chosen") {
        // g: path 0-1-2-3 plus {1,3}. Split at {1,2}: C1={0,1}, C2={2,3}.
        // C2-degrees: vertex 0 -> 0, vertex 1 -> 2, so v*=0 and w=2.
        SimpleGraph g(4);
        for (Edge e : {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(1, 3)}) g.add_edge(e);
        CHECK(get_replacement_edge(g, path4(), Edge(1, 2)) == Edge(0, 2));
    }
    SUBCASE("complete bipartite between components falls back") {
        SimpleGraph g(4);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) g.add_edge(Edge(u, v));
        CHECK(get_replacement_edge(g, path4(), Edge(1, 2)) == Edge(1, 2));
    }
    SUBCASE("singleton C2 already joined to all of C1") {
        auto star = SpanningTree::validate({Edge(0, 1), Edge(0, 2), Edge(0, 3)}, 4);
        SimpleGraph g(4);
        for (Edge e : {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 3), Edge(2, 3)}) g.add_edge(e);
        // splitting at {0,3} leaves C2={3}, adjacent to 0, 1 and 2
        CHECK(get_replacement_edge(g, star, Edge(0, 3)) == Edge(0, 3));
    }
}

TEST_CASE("disjointify") {
    SUBCASE("k=1 is the identity") {
        auto [trees, log] = disjointify({path4()});
        CHECK(trees.size() == 1);
        CHECK(trees[0].edges() == path4().edges());
        CHECK(log.repeats_found == 0);
        CHECK(log.swaps.empty());
    }
    SUBCASE("two identical paths on K_4 become disjoint") {
        auto [trees, log] = disjointify({path4(), path4()});
        CHECK(log.fallbacks == 0);
        CHECK(log.repaired == 3);
        CHECK(pairwise_disjoint(trees));
        CHECK(graph_union(trees).edge_count() == 6);
        for (const auto& t : trees) CHECK(t.is_valid_tree());
    }
    SUBCASE("K_2 can only fall back") {
        auto e = SpanningTree::validate({Edge(0, 1)}, 2);
        auto [trees, log] = disjointify({e, e});
        CHECK(log.fallbacks == 1);
        CHECK(log.repaired == 0);
        CHECK(graph_union(trees).edge_count() == 1);
    }
    SUBCASE("log totals are consistent") {
        RngStream rng(17);
        for (int rep = 0; rep < 40; ++rep) {
            const int n = 4 + static_cast<int>(rng.next_below(12));
            const int k = 2 + static_cast<int>(rng.next_below(3));
            auto [trees, log] =
                disjointify(sample_k_trees(n, k, SamplerKind::PruferUniform, rng.substream(rep)));
            CHECK(log.repaired + log.fallbacks == log.repeats_found);
            for (const auto& ev : log.swaps) CHECK(ev.fallback == (ev.removed == ev.inserted));
            for (const auto& t : trees) CHECK(t.is_valid_tree());
            if (log.fallbacks == 0) CHECK(pairwise_disjoint(trees));
        }
    }
    SUBCASE("first tree is left intact") {
        auto trees_in = sample_k_trees(10, 3, SamplerKind::PruferUniform, RngStream(8));
        auto first = trees_in[0].edges();
        auto [trees, log] = disjointify(std::move(trees_in));
        CHECK(trees[0].edges() == first);
    }
}

TEST_CASE("generate_k_connected") {
    SUBCASE("n=10 k=3") {
        auto [g, log] = generate_k_connected(10, 3, SamplerKind::PruferUniform, RngStream(7));
        CHECK(g.edge_count() <= 27);
        CHECK(edge_connectivity(g).lambda >= 3);
    }
    SUBCASE("two trees exhaust K_4") {
        auto [g, log] = generate_k_connected(4, 2, SamplerKind::PruferUniform, RngStream(1));
        CHECK(g.edge_count() == 6);
        CHECK(edge_connectivity(g).lambda == 3);
    }
    SUBCASE("k=1 gives a spanning tree") {
        auto [g, log] = generate_k_connected(50, 1, SamplerKind::PruferUniform, RngStream(4));
        CHECK(g.edge_count() == 49);
        CHECK(edge_connectivity(g).lambda == 1);
    }
    SUBCASE("deterministic under a fixed config") {
        auto [g1, l1] = generate_k_connected(30, 4, SamplerKind::Wilson, RngStream(123));
        auto [g2, l2] = generate_k_connected(30, 4, SamplerKind::Wilson, RngStream(123));
        CHECK(g1.edges() == g2.edges());
        CHECK(l1.fallbacks == l2.fallbacks);
    }
    SUBCASE("edge budget") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto [g, log] = generate_k_connected(12, 4, SamplerKind::PruferUniform, RngStream(seed));
            CHECK(g.edge_count() <= 4 * 11);
            if (log.fallbacks == 0) CHECK(g.edge_count() == 4 * 11);
        }
    }
}
