#pragma once

#include <utility>
#include <vector>

#include "splicer/graph.hpp"
#include "splicer/rng.hpp"
#include "splicer/samplers.hpp"

namespace splicer {

struct RepairEvent {
    int tree = 0;  // index of the repaired tree, 0-based
    Edge removed;
    Edge inserted;
    bool fallback = false;  // true iff inserted == removed
};

struct RepairLog {
    int n = 0;
    int k = 0;
    int repeats_found = 0;
    int repaired = 0;
    int fallbacks = 0;
    std::vector<RepairEvent> swaps;
};

// Partition of [n] into the two components of tree - e; the first component
// contains the smaller endpoint of e.
std::pair<std::vector<VertexId>, std::vector<VertexId>> split_components(const SpanningTree& tree,
                                                                         Edge e);

// Replacement-edge search: splits tree at e, picks the C1 vertex with the
// fewest g-neighbors in C2 (smallest index on ties), pairs it with its
// smallest non-neighbor in C2. Returns e itself when C1 and C2 are already
// completely joined in g.
Edge get_replacement_edge(const SimpleGraph& g, const SpanningTree& tree, Edge e);

// Rewires trees 2..k so that, barring fallbacks, the output trees are
// pairwise edge-disjoint. The first tree is left intact. Every inserted
// edge immediately joins the running union so later searches see it.
std::pair<std::vector<SpanningTree>, RepairLog> disjointify(std::vector<SpanningTree> trees);

// Full pipeline: sample k trees, make them disjoint, return the union.
std::pair<SimpleGraph, RepairLog> generate_k_connected(int n, int k, SamplerKind kind,
                                                       const RngStream& rng);

}  // namespace splicer
