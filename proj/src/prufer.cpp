#include "splicer/prufer.hpp"

namespace splicer {

void prufer_decode_edges(const PruferSeq& seq, int n, std::vector<Edge>& edges) {
    if (n < 2) throw VertexRangeError("prufer_decode needs n >= 2");
    if (static_cast<int>(seq.size()) != n - 2)
        throw EdgeCountError("sequence length must be n-2");
    for (int x : seq)
        if (x < 0 || x >= n) throw VertexRangeError("label out of range");

    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];

    edges.clear();
    edges.reserve(n - 1);

    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        edges.push_back(Edge(leaf, x));
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;  // new leaf below the scan pointer, use it right away
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back(Edge(leaf, n - 1));
}

SpanningTree prufer_decode(const PruferSeq& seq, int n) {
    std::vector<Edge> edges;
    prufer_decode_edges(seq, n, edges);
    return SpanningTree::unchecked(std::move(edges), n);
}

PruferSeq prufer_encode(const SpanningTree& tree) {
    const int n = tree.vertex_count();
    if (n == 2) return {};

    std::vector<int> degree(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) degree[v] = tree.degree(v);

    auto live_neighbor = [&](int leaf) {
        for (VertexId w : tree.neighbors(leaf))
            if (!removed[w]) return w;
        throw GraphError("leaf without live neighbor; tree is corrupt");
    };

    PruferSeq seq;
    seq.reserve(n - 2);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int step = 0; step < n - 2; ++step) {
        int parent = live_neighbor(leaf);
        seq.push_back(parent);
        removed[leaf] = 1;
        if (--degree[parent] == 1 && parent < ptr) {
            leaf = parent;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    return seq;
}

BigInt count_trees_with_degree(int n, int d) {
    if (n < 2) throw VertexRangeError("n must be >= 2");
    if (d < 1 || d > n - 1) throw VertexRangeError("degree out of range [1, n-1]");
    // C(n-2, d-1)
    BigInt binom = 1;
    for (int i = 1; i <= d - 1; ++i) {
        binom *= (n - 2) - (d - 1) + i;
        binom /= i;
    }
    BigInt power = 1;
    for (int i = 0; i < n - 1 - d; ++i) power *= n - 1;
    return binom * power;
}

}  // namespace splicer
