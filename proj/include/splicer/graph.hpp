#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace splicer {

using VertexId = int;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SelfLoopError : GraphError {
    using GraphError::GraphError;
};
struct VertexRangeError : GraphError {
    using GraphError::GraphError;
};
struct EdgeCountError : GraphError {
    using GraphError::GraphError;
};
struct DisconnectedError : GraphError {
    using GraphError::GraphError;
};
struct SizeMismatchError : GraphError {
    using GraphError::GraphError;
};

// Undirected edge stored with u < v, so {a,b} and {b,a} compare equal
// and Edge is usable as an ordered map/set key.
struct Edge {
    VertexId u{0};
    VertexId v{1};

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b)
            throw SelfLoopError("self-loop {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }

    auto operator<=>(const Edge&) const = default;
};

inline Edge edge_new(VertexId a, VertexId b) { return Edge(a, b); }

// Tree on vertex set [0, n): exactly n-1 edges, connected. Edges are kept
// sorted; adjacency lists are kept sorted as well.
class SpanningTree {
public:
    // Validates size, range and connectivity; throws the matching GraphError.
    static SpanningTree validate(std::vector<Edge> edges, int n);

    // For callers that construct trees by a correct-by-construction process
    // (Prufer decode, walk samplers). Asserts in debug builds only.
    static SpanningTree unchecked(std::vector<Edge> edges, int n);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    bool contains(Edge e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    // Swaps one edge for another; the caller is responsible for keeping the
    // result a tree (disjointify re-checks in debug builds).
    void replace_edge(Edge removed, Edge inserted);

    bool is_valid_tree() const;

private:
    SpanningTree(std::vector<Edge> edges, int n);

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
};

// Simple graph on [0, n) with sorted neighbor sets.
class SimpleGraph {
public:
    explicit SimpleGraph(int n);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    bool has_edge(Edge e) const {
        const auto& a = adj_[e.u];
        return std::binary_search(a.begin(), a.end(), e.v);
    }
    bool has_edge(VertexId a, VertexId b) const { return has_edge(Edge(a, b)); }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }

    // Idempotent; duplicate insertions are silently collapsed.
    void add_edge(Edge e);
    void remove_edge(Edge e);

    // All edges in ascending canonical order.
    std::vector<Edge> edges() const;

    bool is_connected() const;

private:
    int n_;
    std::size_t edge_count_;
    std::vector<std::vector<VertexId>> adj_;
};

// Union of the trees' edge sets as a simple graph; duplicates collapse.
SimpleGraph graph_union(const std::vector<SpanningTree>& trees);

}  // namespace splicer
