#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "splicer/graph.hpp"
#include "splicer/rng.hpp"
#include "splicer/samplers.hpp"

namespace splicer {

using Rational = boost::multiprecision::cpp_rational;

// Ordered list of k spanning trees with an edge multiplicity map.
// Invariant: distinct_edges() + repeated_edges() == k*(n-1) for every sample.
class MultiSplicer {
public:
    explicit MultiSplicer(std::vector<SpanningTree> trees);

    int vertex_count() const { return n_; }
    int tree_count() const { return static_cast<int>(trees_.size()); }
    const std::vector<SpanningTree>& trees() const { return trees_; }
    const std::map<Edge, int>& multiplicity() const { return multiplicity_; }
    int multiplicity_of(Edge e) const;

    // S_k: edges present in at least one tree.
    int distinct_edges() const { return static_cast<int>(multiplicity_.size()); }
    // M: total surplus occurrences over all edges.
    int repeated_edges() const;
    // R_e: surplus occurrences of one edge, max(multiplicity - 1, 0).
    int repetitions(Edge e) const;

    SimpleGraph to_graph() const;

private:
    int n_;
    std::vector<SpanningTree> trees_;
    std::map<Edge, int> multiplicity_;
};

// Closed forms for the uniform-tree model on K_n, in exact rationals.
Rational exact_expected_common(int n, int ell);        // C(n,2) (2/n)^ell
Rational exact_expected_sk(int n, int k);              // C(n,2) (1 - (1-2/n)^k)
Rational exact_expected_m(int n, int k);               // k(n-1) - E[S_k]
Rational exact_var_re(int n, int k);
Rational exact_cov_re(int n, int k, bool adjacent);    // 0 when not adjacent
Rational exact_var_m(int n, int k);

enum class Statistic {
    EdgeProb,            // Pr(e in T), fixed edge
    PairProbAdjacent,    // Pr(e and w in T), edges sharing a vertex
    PairProbNonAdjacent,
    ExpectedCommon,      // E[C_L] with |L| = ell
    ExpectedSk,
    ExpectedM,
    VarRe,
    CovAdjacent,
    CovNonAdjacent,
    VarM,
};

const char* statistic_name(Statistic stat);

// Matching closed form for a statistic (CovNonAdjacent is 0, etc.).
Rational exact_value(int n, int k, Statistic stat, int ell = 0);

// Independent oracle: enumerates all n^(n-2) trees via Prufer sequences and
// averages over every k-tuple. Guarded to n <= 5 and k <= 3.
Rational brute_force_oracle(int n, int k, Statistic stat, int ell = 0);

struct StatReport {
    std::string quantity;
    int n = 0;
    int k = 0;
    double exact = 0;
    double estimate = 0;
    double std_error = 0;
    long trials = 0;
    bool pass = false;  // |estimate - exact| <= 5 * std_error
};

StatReport mc_estimate(int n, int k, long trials, Statistic stat, const RngStream& rng,
                       SamplerKind kind = SamplerKind::PruferUniform, int ell = 0);

struct ConcentrationResult {
    double empirical = 0;
    double bound = 0;      // 1 / (s^2 k (k-1)), asymptotic in n
    double std_error = 0;
    bool pass = false;     // empirical <= bound + 5 * std_error
};

ConcentrationResult concentration_check(int n, int k, double s, long trials, const RngStream& rng,
                                        SamplerKind kind = SamplerKind::PruferUniform);

}  // namespace splicer
