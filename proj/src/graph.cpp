#include "splicer/graph.hpp"

#include <cassert>
#include <numeric>

namespace splicer {

namespace {

std::vector<std::vector<VertexId>> build_adjacency(const std::vector<Edge>& edges, int n) {
    std::vector<std::vector<VertexId>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

bool connected_on(const std::vector<std::vector<VertexId>>& adj, int n) {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

}  // namespace

SpanningTree::SpanningTree(std::vector<Edge> edges, int n)
    : n_(n), edges_(std::move(edges)), adj_(build_adjacency(edges_, n)) {}

SpanningTree SpanningTree::validate(std::vector<Edge> edges, int n) {
    if (n < 1) throw VertexRangeError("vertex count must be positive");
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n)
            throw VertexRangeError("vertex out of range: {" + std::to_string(e.u) + "," +
                                   std::to_string(e.v) + "} with n=" + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (static_cast<int>(edges.size()) != n - 1)
        throw EdgeCountError("wrong edge count: got " + std::to_string(edges.size()) +
                             ", need " + std::to_string(n - 1));
    SpanningTree t(std::move(edges), n);
    if (!connected_on(t.adj_, n)) throw DisconnectedError("edge set is disconnected");
    return t;
}

SpanningTree SpanningTree::unchecked(std::vector<Edge> edges, int n) {
    std::sort(edges.begin(), edges.end());
    SpanningTree t(std::move(edges), n);
    assert(t.is_valid_tree());
    return t;
}

bool SpanningTree::is_valid_tree() const {
    if (static_cast<int>(edges_.size()) != n_ - 1) return false;
    for (const Edge& e : edges_)
        if (e.u < 0 || e.v >= n_) return false;
    return connected_on(adj_, n_);
}

void SpanningTree::replace_edge(Edge removed, Edge inserted) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), removed);
    if (it == edges_.end() || *it != removed)
        throw GraphError("edge to replace is not in the tree");
    edges_.erase(it);
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), inserted), inserted);

    auto drop = [&](VertexId from, VertexId nb) {
        auto& a = adj_[from];
        a.erase(std::lower_bound(a.begin(), a.end(), nb));
    };
    auto put = [&](VertexId from, VertexId nb) {
        auto& a = adj_[from];
        a.insert(std::lower_bound(a.begin(), a.end(), nb), nb);
    };
    drop(removed.u, removed.v);
    drop(removed.v, removed.u);
    put(inserted.u, inserted.v);
    put(inserted.v, inserted.u);
}

SimpleGraph::SimpleGraph(int n) : n_(n), edge_count_(0), adj_(n) {
    if (n < 1) throw VertexRangeError("vertex count must be positive");
}

void SimpleGraph::add_edge(Edge e) {
    if (e.u < 0 || e.v >= n_)
        throw VertexRangeError("vertex out of range for n=" + std::to_string(n_));
    auto& a = adj_[e.u];
    auto it = std::lower_bound(a.begin(), a.end(), e.v);
    if (it != a.end() && *it == e.v) return;
    a.insert(it, e.v);
    auto& b = adj_[e.v];
    b.insert(std::lower_bound(b.begin(), b.end(), e.u), e.u);
    ++edge_count_;
}

void SimpleGraph::remove_edge(Edge e) {
    auto& a = adj_[e.u];
    auto it = std::lower_bound(a.begin(), a.end(), e.v);
    if (it == a.end() || *it != e.v) return;
    a.erase(it);
    auto& b = adj_[e.v];
    b.erase(std::lower_bound(b.begin(), b.end(), e.u));
    --edge_count_;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.push_back(Edge(u, v));
    return out;
}

bool SimpleGraph::is_connected() const { return connected_on(adj_, n_); }

SimpleGraph graph_union(const std::vector<SpanningTree>& trees) {
    if (trees.empty()) throw SizeMismatchError("tree list is empty");
    const int n = trees.front().vertex_count();
    SimpleGraph g(n);
    for (const SpanningTree& t : trees) {
        if (t.vertex_count() != n)
            throw SizeMismatchError("trees disagree on vertex count");
        for (const Edge& e : t.edges()) g.add_edge(e);
    }
    return g;
}

}  // namespace splicer
