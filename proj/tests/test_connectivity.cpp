#include <doctest.h>

#include "splicer/connectivity.hpp"
#include "splicer/samplers.hpp"

using namespace splicer;

namespace {

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(Edge(i, (i + 1) % n));
    return g;
}

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(Edge(u, v));
    return g;
}

SimpleGraph path(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(Edge(i, i + 1));
    return g;
}

SimpleGraph random_graph(int n, double p, RngStream& rng) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) g.add_edge(Edge(u, v));
    return g;
}

bool cut_disconnects(const SimpleGraph& g, const std::vector<Edge>& cut) {
    SimpleGraph h = g;
    for (const Edge& e : cut) h.remove_edge(e);
    return !h.is_connected();
}

}  // namespace

TEST_CASE("edge_connectivity basics") {
    CHECK(edge_connectivity(cycle(5)).lambda == 2);
    CHECK(edge_connectivity(complete(4)).lambda == 3);
    CHECK(edge_connectivity(path(4)).lambda == 1);

    SUBCASE("disconnected graph") {
        SimpleGraph g(4);
        g.add_edge(Edge(0, 1));
        g.add_edge(Edge(2, 3));
        auto cert = edge_connectivity(g);
        CHECK(cert.lambda == 0);
        CHECK(cert.witness_cut.empty());
    }
    SUBCASE("witness cut actually disconnects") {
        for (const SimpleGraph& g : {cycle(6), complete(5), path(5)}) {
            auto cert = edge_connectivity(g);
            CHECK(static_cast<int>(cert.witness_cut.size()) == cert.lambda);
            CHECK(cut_disconnects(g, cert.witness_cut));
        }
    }
    SUBCASE("union of two hand-fixed disjoint spanning trees of K_5") {
        SimpleGraph g(5);
        for (Edge e : {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4)}) g.add_edge(e);
        for (Edge e : {Edge(0, 2), Edge(2, 4), Edge(4, 1), Edge(1, 3)}) g.add_edge(e);
        CHECK(edge_connectivity(g).lambda >= 2);
        CHECK(brute_force_connectivity(g) >= 2);
    }
}

TEST_CASE("brute_force_connectivity basics") {
    CHECK(brute_force_connectivity(path(4)) == 1);
    SimpleGraph k4_minus = complete(4);
    k4_minus.remove_edge(Edge(0, 1));
    CHECK(brute_force_connectivity(k4_minus) == 2);
    CHECK(brute_force_connectivity(complete(5)) == 4);

    SUBCASE("size guard") {
        // K_8 has 28 edges and lambda 7: past both guard limits
        CHECK_THROWS_AS(brute_force_connectivity(complete(8)), GraphError);
    }
}

TEST_CASE("count_disjoint_paths") {
    auto k4 = complete(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(count_disjoint_paths(k4, u, v) == 3);

    auto tree = path(6);
    CHECK(count_disjoint_paths(tree, 0, 5) == 1);
    CHECK_THROWS_AS(count_disjoint_paths(k4, 2, 2), GraphError);

    SUBCASE("two disjoint spanning trees give >= 2 paths everywhere") {
        SimpleGraph g(6);
        for (Edge e : {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5)}) g.add_edge(e);
        for (Edge e : {Edge(0, 2), Edge(2, 5), Edge(5, 1), Edge(1, 3), Edge(3, 5)}) g.add_edge(e);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v) CHECK(count_disjoint_paths(g, u, v) >= 2);
    }
}

TEST_CASE("oracle agreement on random graphs") {
    RngStream rng(2718);
    int done = 0;
    while (done < 60) {
        const int n = 2 + static_cast<int>(rng.next_below(7));
        auto g = random_graph(n, 0.3 + 0.4 * rng.next_double(), rng);
        if (g.edge_count() > 20) continue;
        CHECK(edge_connectivity(g).lambda == brute_force_connectivity(g));
        ++done;
    }
}

TEST_CASE("Menger consistency: min pairwise disjoint paths equals lambda") {
    RngStream rng(31415);
    int done = 0;
    while (done < 15) {
        const int n = 3 + static_cast<int>(rng.next_below(5));
        auto g = random_graph(n, 0.5, rng);
        if (!g.is_connected()) continue;
        int min_paths = n;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                min_paths = std::min(min_paths, count_disjoint_paths(g, u, v));
        CHECK(min_paths == edge_connectivity(g).lambda);
        ++done;
    }
}

TEST_CASE("adding an edge never decreases lambda") {
    RngStream rng(999);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 4 + static_cast<int>(rng.next_below(4));
        auto g = random_graph(n, 0.5, rng);
        const int before = edge_connectivity(g).lambda;
        const int u = static_cast<int>(rng.next_below(n));
        int v = static_cast<int>(rng.next_below(n));
        if (v == u) v = (v + 1) % n;
        g.add_edge(Edge(u, v));
        CHECK(edge_connectivity(g).lambda >= before);
    }
}
