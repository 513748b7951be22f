#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "splicer/graph.hpp"

namespace splicer {

using BigInt = boost::multiprecision::cpp_int;

// Prufer sequence of length n-2 over [0, n); empty for n = 2.
using PruferSeq = std::vector<int>;

// Decodes a sequence to the unique labeled tree it represents.
// Linear-time pointer/leaf-index technique, no priority queue.
SpanningTree prufer_decode(const PruferSeq& seq, int n);

// Same decode writing into a caller-owned buffer (cleared first); lets hot
// Monte Carlo loops skip adjacency construction.
void prufer_decode_edges(const PruferSeq& seq, int n, std::vector<Edge>& out);

// Inverse of prufer_decode; removes the smallest-index leaf first.
PruferSeq prufer_encode(const SpanningTree& tree);

// Number of spanning trees of K_n in which a fixed vertex has degree d:
// C(n-2, d-1) * (n-1)^(n-1-d).
BigInt count_trees_with_degree(int n, int d);

}  // namespace splicer
