#include "splicer/disjointify.hpp"

#include <cassert>
#include <map>

namespace splicer {

std::pair<std::vector<VertexId>, std::vector<VertexId>> split_components(const SpanningTree& tree,
                                                                         Edge e) {
    if (!tree.contains(e)) throw GraphError("edge is not in the tree");
    const int n = tree.vertex_count();
    std::vector<char> in_c1(n, 0);
    std::vector<VertexId> stack{e.u};
    in_c1[e.u] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : tree.neighbors(v)) {
            if ((v == e.u && w == e.v) || (v == e.v && w == e.u)) continue;
            if (!in_c1[w]) {
                in_c1[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::vector<VertexId> c1, c2;
    for (VertexId v = 0; v < n; ++v) (in_c1[v] ? c1 : c2).push_back(v);
    return {std::move(c1), std::move(c2)};
}

Edge get_replacement_edge(const SimpleGraph& g, const SpanningTree& tree, Edge e) {
    auto [c1, c2] = split_components(tree, e);
    std::vector<char> in_c2(tree.vertex_count(), 0);
    for (VertexId v : c2) in_c2[v] = 1;

    // C1 vertex with the fewest g-neighbors in C2; ties go to the smaller
    // index because c1 is ascending and the comparison is strict.
    VertexId best = -1;
    int best_deg = tree.vertex_count() + 1;
    for (VertexId v : c1) {
        int deg = 0;
        for (VertexId w : g.neighbors(v)) deg += in_c2[w];
        if (deg < best_deg) {
            best_deg = deg;
            best = v;
        }
    }

    // Smallest vertex of C2 not already joined to best in g.
    for (VertexId w : c2)
        if (!g.has_edge(Edge(best, w))) return Edge(best, w);
    return e;  // C1 and C2 completely joined: keep the old edge
}

std::pair<std::vector<SpanningTree>, RepairLog> disjointify(std::vector<SpanningTree> trees) {
    if (trees.empty()) throw SizeMismatchError("disjointify needs at least one tree");
    const int n = trees.front().vertex_count();
    for (const SpanningTree& t : trees)
        if (t.vertex_count() != n) throw SizeMismatchError("trees disagree on vertex count");

    RepairLog log;
    log.n = n;
    log.k = static_cast<int>(trees.size());

    SimpleGraph g(n);
    std::map<Edge, int> mult;
    for (const SpanningTree& t : trees)
        for (const Edge& e : t.edges()) {
            ++mult[e];
            g.add_edge(e);
        }

    for (std::size_t i = 1; i < trees.size(); ++i) {
        // Snapshot: the tree mutates while its repeats are processed.
        const std::vector<Edge> snapshot = trees[i].edges();
        for (const Edge& e : snapshot) {
            if (mult[e] < 2) continue;  // collision may have been resolved already
            ++log.repeats_found;
            const Edge replacement = get_replacement_edge(g, trees[i], e);
            if (replacement == e) {
                ++log.fallbacks;
                log.swaps.push_back({static_cast<int>(i), e, e, true});
                continue;
            }
            trees[i].replace_edge(e, replacement);
            assert(trees[i].is_valid_tree());
            --mult[e];  // e stays in g: it still lives in another tree
            ++mult[replacement];
            g.add_edge(replacement);
            ++log.repaired;
            log.swaps.push_back({static_cast<int>(i), e, replacement, false});
        }
    }
    return {std::move(trees), std::move(log)};
}

std::pair<SimpleGraph, RepairLog> generate_k_connected(int n, int k, SamplerKind kind,
                                                       const RngStream& rng) {
    auto [trees, log] = disjointify(sample_k_trees(n, k, kind, rng));
    return {graph_union(trees), std::move(log)};
}

}  // namespace splicer
