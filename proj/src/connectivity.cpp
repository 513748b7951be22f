#include "splicer/connectivity.hpp"

#include <queue>

namespace splicer {

namespace {

// Unit-capacity flow network over an undirected graph: each edge becomes a
// pair of opposing arcs; arc i and i^1 are each other's reverse.
class UnitFlowNetwork {
public:
    explicit UnitFlowNetwork(const SimpleGraph& g) : n_(g.vertex_count()), head_(n_) {
        for (const Edge& e : g.edges()) {
            head_[e.u].push_back(static_cast<int>(to_.size()));
            to_.push_back(e.v);
            head_[e.v].push_back(static_cast<int>(to_.size()));
            to_.push_back(e.u);
        }
        cap_.assign(to_.size(), 1);
    }

    int max_flow(VertexId s, VertexId t) {
        cap_.assign(cap_.size(), 1);
        int flow = 0;
        while (augment(s, t)) ++flow;
        return flow;
    }

    // Vertices reachable from s in the residual graph of the last max_flow.
    std::vector<char> residual_reachable(VertexId s) const {
        std::vector<char> seen(n_, 0);
        std::vector<VertexId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (int a : head_[v]) {
                if (cap_[a] > 0 && !seen[to_[a]]) {
                    seen[to_[a]] = 1;
                    stack.push_back(to_[a]);
                }
            }
        }
        return seen;
    }

private:
    bool augment(VertexId s, VertexId t) {
        std::vector<int> via(n_, -1);
        std::vector<char> seen(n_, 0);
        std::queue<VertexId> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            VertexId v = q.front();
            q.pop();
            for (int a : head_[v]) {
                VertexId w = to_[a];
                if (cap_[a] > 0 && !seen[w]) {
                    seen[w] = 1;
                    via[w] = a;
                    q.push(w);
                }
            }
        }
        if (!seen[t]) return false;
        for (VertexId v = t; v != s;) {
            int a = via[v];
            --cap_[a];
            ++cap_[a ^ 1];
            v = to_[a ^ 1];
        }
        return true;
    }

    int n_;
    std::vector<std::vector<int>> head_;
    std::vector<VertexId> to_;
    std::vector<int> cap_;
};

}  // namespace

int count_disjoint_paths(const SimpleGraph& g, VertexId u, VertexId v) {
    if (u == v) throw GraphError("count_disjoint_paths needs distinct endpoints");
    UnitFlowNetwork net(g);
    return net.max_flow(u, v);
}

ConnectivityCertificate edge_connectivity(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw VertexRangeError("edge connectivity needs n >= 2");

    ConnectivityCertificate cert;
    if (!g.is_connected()) {
        cert.lambda = 0;
        return cert;
    }

    UnitFlowNetwork net(g);
    int best = -1;
    VertexId best_sink = 1;
    for (VertexId t = 1; t < n; ++t) {
        int f = net.max_flow(0, t);
        if (best < 0 || f < best) {
            best = f;
            best_sink = t;
        }
    }
    cert.lambda = best;

    net.max_flow(0, best_sink);
    const auto reach = net.residual_reachable(0);
    for (const Edge& e : g.edges())
        if (reach[e.u] != reach[e.v]) cert.witness_cut.push_back(e);
    return cert;
}

int brute_force_connectivity(const SimpleGraph& g) {
    if (!g.is_connected()) return 0;
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int n = g.vertex_count();

    auto disconnected_without = [&](const std::vector<int>& removed) {
        std::vector<std::vector<VertexId>> adj(n);
        std::vector<char> gone(m, 0);
        for (int i : removed) gone[i] = 1;
        for (int i = 0; i < m; ++i) {
            if (gone[i]) continue;
            adj[edges[i].u].push_back(edges[i].v);
            adj[edges[i].v].push_back(edges[i].u);
        }
        std::vector<char> seen(n, 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached != n;
    };

    for (int j = 1; j <= m; ++j) {
        if (m > 20 && j > 4)
            throw GraphError("brute_force_connectivity guard: m > 20 and lambda > 4");
        // combinations of j edge indices
        std::vector<int> pick(j);
        for (int i = 0; i < j; ++i) pick[i] = i;
        for (;;) {
            if (disconnected_without(pick)) return j;
            int pos = j - 1;
            while (pos >= 0 && pick[pos] == m - j + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int i = pos + 1; i < j; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
    return m;  // unreachable for a connected graph with n >= 2
}

}  // namespace splicer
