#include "splicer/samplers.hpp"

#include "splicer/prufer.hpp"

namespace splicer {

namespace {

void sample_prufer_edges(int n, RngStream& rng, std::vector<Edge>& out) {
    thread_local PruferSeq seq;
    seq.resize(n - 2);
    for (int& x : seq) x = static_cast<int>(rng.next_below(n));
    prufer_decode_edges(seq, n, out);
}

// Uniform over [n] \ {current}.
int step_from(int current, int n, RngStream& rng) {
    int j = static_cast<int>(rng.next_below(n - 1));
    return j >= current ? j + 1 : j;
}

void sample_aldous_broder_edges(int n, RngStream& rng, std::vector<Edge>& edges) {
    std::vector<char> visited(n, 0);
    edges.clear();
    edges.reserve(n - 1);
    int current = static_cast<int>(rng.next_below(n));
    visited[current] = 1;
    int remaining = n - 1;
    while (remaining > 0) {
        int next = step_from(current, n, rng);
        if (!visited[next]) {
            visited[next] = 1;
            edges.push_back(Edge(current, next));
            --remaining;
        }
        current = next;
    }
}

void sample_wilson_edges(int n, RngStream& rng, std::vector<Edge>& edges) {
    std::vector<char> in_tree(n, 0);
    std::vector<int> next(n, -1);
    int root = static_cast<int>(rng.next_below(n));
    in_tree[root] = 1;
    edges.clear();
    edges.reserve(n - 1);
    for (int start = 0; start < n; ++start) {
        if (in_tree[start]) continue;
        // Loop-erased walk: overwriting next[] erases loops implicitly.
        int u = start;
        while (!in_tree[u]) {
            next[u] = step_from(u, n, rng);
            u = next[u];
        }
        u = start;
        while (!in_tree[u]) {
            in_tree[u] = 1;
            edges.push_back(Edge(u, next[u]));
            u = next[u];
        }
    }
}

}  // namespace

std::optional<SamplerKind> parse_sampler(std::string_view name) {
    if (name == "prufer") return SamplerKind::PruferUniform;
    if (name == "aldous-broder") return SamplerKind::AldousBroder;
    if (name == "wilson") return SamplerKind::Wilson;
    return std::nullopt;
}

const char* sampler_name(SamplerKind kind) {
    switch (kind) {
        case SamplerKind::PruferUniform: return "prufer";
        case SamplerKind::AldousBroder: return "aldous-broder";
        case SamplerKind::Wilson: return "wilson";
    }
    return "?";
}

void sample_tree_edges(int n, SamplerKind kind, RngStream& rng, std::vector<Edge>& out) {
    if (n < 2) throw VertexRangeError("sample_tree needs n >= 2");
    switch (kind) {
        case SamplerKind::PruferUniform: sample_prufer_edges(n, rng, out); return;
        case SamplerKind::AldousBroder: sample_aldous_broder_edges(n, rng, out); return;
        case SamplerKind::Wilson: sample_wilson_edges(n, rng, out); return;
    }
    throw GraphError("unknown sampler kind");
}

SpanningTree sample_tree(int n, SamplerKind kind, RngStream& rng) {
    std::vector<Edge> edges;
    sample_tree_edges(n, kind, rng, edges);
    return SpanningTree::unchecked(std::move(edges), n);
}

std::vector<SpanningTree> sample_k_trees(int n, int k, SamplerKind kind, const RngStream& rng) {
    if (k < 1) throw VertexRangeError("sample_k_trees needs k >= 1");
    std::vector<SpanningTree> trees;
    trees.reserve(k);
    for (int i = 0; i < k; ++i) {
        RngStream sub = rng.substream(static_cast<std::uint64_t>(i));
        trees.push_back(sample_tree(n, kind, sub));
    }
    return trees;
}

}  // namespace splicer
