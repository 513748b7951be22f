#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "splicer/graph.hpp"
#include "splicer/rng.hpp"

namespace splicer {

// All three sample the uniform distribution over the n^(n-2) spanning trees
// of K_n. PruferUniform is O(n) per tree; the walk samplers are specialized
// to the clique (next vertex uniform over [n] minus the current one).
enum class SamplerKind { PruferUniform, AldousBroder, Wilson };

std::optional<SamplerKind> parse_sampler(std::string_view name);
const char* sampler_name(SamplerKind kind);

SpanningTree sample_tree(int n, SamplerKind kind, RngStream& rng);

// Writes the n-1 edges of one uniform tree into out (cleared first);
// avoids tree-object construction in Monte Carlo loops.
void sample_tree_edges(int n, SamplerKind kind, RngStream& rng, std::vector<Edge>& out);

// k independent trees, one substream per tree.
std::vector<SpanningTree> sample_k_trees(int n, int k, SamplerKind kind, const RngStream& rng);

}  // namespace splicer
