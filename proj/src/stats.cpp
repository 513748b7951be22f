#include "splicer/stats.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "splicer/prufer.hpp"

namespace splicer {

MultiSplicer::MultiSplicer(std::vector<SpanningTree> trees) : trees_(std::move(trees)) {
    if (trees_.empty()) throw SizeMismatchError("multi-splicer needs at least one tree");
    n_ = trees_.front().vertex_count();
    for (const SpanningTree& t : trees_) {
        if (t.vertex_count() != n_)
            throw SizeMismatchError("trees disagree on vertex count");
        for (const Edge& e : t.edges()) ++multiplicity_[e];
    }
}

int MultiSplicer::multiplicity_of(Edge e) const {
    auto it = multiplicity_.find(e);
    return it == multiplicity_.end() ? 0 : it->second;
}

int MultiSplicer::repeated_edges() const {
    int m = 0;
    for (const auto& [e, c] : multiplicity_) m += c - 1;
    return m;
}

int MultiSplicer::repetitions(Edge e) const {
    int c = multiplicity_of(e);
    return c > 0 ? c - 1 : 0;
}

SimpleGraph MultiSplicer::to_graph() const { return graph_union(trees_); }

namespace {

Rational rpow(Rational base, int exp) {
    Rational r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

Rational binom2(int n) { return Rational(std::int64_t(n) * (n - 1), 2); }

}  // namespace

Rational exact_expected_common(int n, int ell) {
    if (n < 2 || ell < 1) throw VertexRangeError("exact_expected_common needs n >= 2, ell >= 1");
    return binom2(n) * rpow(Rational(2, n), ell);
}

Rational exact_expected_sk(int n, int k) {
    if (n < 2 || k < 1) throw VertexRangeError("exact_expected_sk needs n >= 2, k >= 1");
    return binom2(n) * (1 - rpow(1 - Rational(2, n), k));
}

Rational exact_expected_m(int n, int k) {
    return Rational(k) * (n - 1) - exact_expected_sk(n, k);
}

Rational exact_var_re(int n, int k) {
    if (n < 2 || k < 1) throw VertexRangeError("exact_var_re needs n >= 2, k >= 1");
    if (n == 2) return 0;  // R_e deterministic: the single edge is in every tree
    const Rational q = 1 - Rational(2, n);
    return Rational(2 * k, n) * q + rpow(q, k) * (1 - Rational(4 * k, n)) - rpow(q, 2 * k);
}

Rational exact_cov_re(int n, int k, bool adjacent) {
    if (k < 1) throw VertexRangeError("exact_cov_re needs k >= 1");
    if (!adjacent) {
        if (n < 4) throw VertexRangeError("non-adjacent edge pair needs n >= 4");
        return 0;
    }
    if (n < 3) throw VertexRangeError("adjacent edge pair needs n >= 3");
    const Rational q = 1 - Rational(2, n);
    const Rational r = 1 - Rational(4, n) + Rational(3, std::int64_t(n) * n);
    return -Rational(k, std::int64_t(n) * n) +
           Rational(2 * k, std::int64_t(n) * n) * rpow(q, k - 1) + rpow(r, k) - rpow(q, 2 * k);
}

Rational exact_var_m(int n, int k) {
    if (n < 3 || k < 1) throw VertexRangeError("exact_var_m needs n >= 3, k >= 1");
    // n(n-1)(n-2) = twice the number of unordered adjacent edge pairs.
    return binom2(n) * exact_var_re(n, k) +
           Rational(std::int64_t(n) * (n - 1) * (n - 2)) * exact_cov_re(n, k, true);
}

const char* statistic_name(Statistic stat) {
    switch (stat) {
        case Statistic::EdgeProb: return "Pr(e in T)";
        case Statistic::PairProbAdjacent: return "Pr(e,w in T) adjacent";
        case Statistic::PairProbNonAdjacent: return "Pr(e,w in T) non-adjacent";
        case Statistic::ExpectedCommon: return "E[C_L]";
        case Statistic::ExpectedSk: return "E[S_k]";
        case Statistic::ExpectedM: return "E[M]";
        case Statistic::VarRe: return "Var[R_e]";
        case Statistic::CovAdjacent: return "Cov[R_e,R_e'] adjacent";
        case Statistic::CovNonAdjacent: return "Cov[R_e,R_e'] non-adjacent";
        case Statistic::VarM: return "Var[M]";
    }
    return "?";
}

Rational exact_value(int n, int k, Statistic stat, int ell) {
    switch (stat) {
        case Statistic::EdgeProb: return Rational(2, n);
        case Statistic::PairProbAdjacent: return Rational(3, std::int64_t(n) * n);
        case Statistic::PairProbNonAdjacent: return Rational(4, std::int64_t(n) * n);
        case Statistic::ExpectedCommon: return exact_expected_common(n, ell);
        case Statistic::ExpectedSk: return exact_expected_sk(n, k);
        case Statistic::ExpectedM: return exact_expected_m(n, k);
        case Statistic::VarRe: return exact_var_re(n, k);
        case Statistic::CovAdjacent: return exact_cov_re(n, k, true);
        case Statistic::CovNonAdjacent: return exact_cov_re(n, k, false);
        case Statistic::VarM: return exact_var_m(n, k);
    }
    throw GraphError("unknown statistic");
}

// ---------------------------------------------------------------------------
// Brute-force enumeration oracle
// ---------------------------------------------------------------------------

namespace {

// Fixed probe edges used by the single-edge / edge-pair statistics.
const Edge kProbeEdge{0, 1};
const Edge kProbeAdjacent{0, 2};     // shares vertex 0 with the probe edge
const Edge kProbeNonAdjacent{2, 3};

int edge_index(Edge e, int n) {
    // position of (u, v) in the ascending canonical edge order of K_n
    return e.u * n - e.u * (e.u + 1) / 2 + (e.v - e.u - 1);
}

// All spanning trees of K_n as edge bitmasks, in Prufer-sequence order.
std::vector<std::uint32_t> enumerate_tree_masks(int n) {
    std::vector<std::uint32_t> masks;
    PruferSeq seq(n - 2, 0);
    std::vector<Edge> edges;
    for (;;) {
        prufer_decode_edges(seq, n, edges);
        std::uint32_t mask = 0;
        for (const Edge& e : edges) mask |= 1u << edge_index(e, n);
        masks.push_back(mask);
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return masks;
}

struct TupleSums {
    std::int64_t tuples = 0;
    std::int64_t s = 0, m = 0, m2 = 0;
    std::int64_t re = 0, re2 = 0;
    std::int64_t re_adj = 0, re_re_adj = 0;
    std::int64_t re_non = 0, re_re_non = 0;
};

TupleSums enumerate_tuples(const std::vector<std::uint32_t>& masks, int n, int k) {
    const int per_tree_edges = n - 1;
    const std::uint32_t bit_e = 1u << edge_index(kProbeEdge, n);
    const std::uint32_t bit_a = n >= 3 ? 1u << edge_index(kProbeAdjacent, n) : 0;
    const std::uint32_t bit_b = n >= 4 ? 1u << edge_index(kProbeNonAdjacent, n) : 0;

    TupleSums sums;
    std::vector<int> idx(k, 0);
    for (;;) {
        std::uint32_t uni = 0;
        int cnt_e = 0, cnt_a = 0, cnt_b = 0;
        for (int i = 0; i < k; ++i) {
            std::uint32_t t = masks[idx[i]];
            uni |= t;
            cnt_e += (t & bit_e) != 0;
            cnt_a += (t & bit_a) != 0;
            cnt_b += (t & bit_b) != 0;
        }
        const int s = std::popcount(uni);
        const int m = k * per_tree_edges - s;
        const int re = cnt_e - (cnt_e > 0);
        const int ra = cnt_a - (cnt_a > 0);
        const int rb = cnt_b - (cnt_b > 0);
        ++sums.tuples;
        sums.s += s;
        sums.m += m;
        sums.m2 += m * m;
        sums.re += re;
        sums.re2 += re * re;
        sums.re_adj += ra;
        sums.re_re_adj += re * ra;
        sums.re_non += rb;
        sums.re_re_non += re * rb;

        int pos = k - 1;
        while (pos >= 0 && idx[pos] == static_cast<int>(masks.size()) - 1) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    return sums;
}

}  // namespace

Rational brute_force_oracle(int n, int k, Statistic stat, int ell) {
    if (n < 2 || n > 5 || k < 1 || k > 3)
        throw GraphError("brute_force_oracle guard: requires 2 <= n <= 5, 1 <= k <= 3");
    if ((stat == Statistic::PairProbAdjacent || stat == Statistic::CovAdjacent) && n < 3)
        throw VertexRangeError("adjacent edge pair needs n >= 3");
    if ((stat == Statistic::PairProbNonAdjacent || stat == Statistic::CovNonAdjacent) && n < 4)
        throw VertexRangeError("non-adjacent edge pair needs n >= 4");

    const auto masks = enumerate_tree_masks(n);
    const std::int64_t total = static_cast<std::int64_t>(masks.size());

    // Single-tree statistics need no tuple loop.
    switch (stat) {
        case Statistic::EdgeProb:
        case Statistic::PairProbAdjacent:
        case Statistic::PairProbNonAdjacent: {
            std::uint32_t want = 1u << edge_index(kProbeEdge, n);
            if (stat == Statistic::PairProbAdjacent) want |= 1u << edge_index(kProbeAdjacent, n);
            if (stat == Statistic::PairProbNonAdjacent)
                want |= 1u << edge_index(kProbeNonAdjacent, n);
            std::int64_t hits = 0;
            for (std::uint32_t t : masks) hits += (t & want) == want;
            return Rational(hits, total);
        }
        case Statistic::ExpectedCommon: {
            if (ell < 1 || ell > k) throw VertexRangeError("ExpectedCommon needs 1 <= ell <= k");
            // E[C_L] = sum_e Pr(e in T)^ell = sum_e (c_e / total)^ell
            const int m_edges = n * (n - 1) / 2;
            Rational sum = 0;
            for (int ei = 0; ei < m_edges; ++ei) {
                std::int64_t c = 0;
                for (std::uint32_t t : masks) c += (t >> ei) & 1u;
                sum += rpow(Rational(c, total), ell);
            }
            return sum;
        }
        default: break;
    }

    const TupleSums sums = enumerate_tuples(masks, n, k);
    const Rational t(sums.tuples);
    switch (stat) {
        case Statistic::ExpectedSk: return Rational(sums.s) / t;
        case Statistic::ExpectedM: return Rational(sums.m) / t;
        case Statistic::VarRe:
            return Rational(sums.re2) / t - rpow(Rational(sums.re) / t, 2);
        case Statistic::CovAdjacent:
            return Rational(sums.re_re_adj) / t - Rational(sums.re) / t * Rational(sums.re_adj) / t;
        case Statistic::CovNonAdjacent:
            return Rational(sums.re_re_non) / t - Rational(sums.re) / t * Rational(sums.re_non) / t;
        case Statistic::VarM:
            return Rational(sums.m2) / t - rpow(Rational(sums.m) / t, 2);
        default: break;
    }
    throw GraphError("unknown statistic");
}

// ---------------------------------------------------------------------------
// Monte Carlo estimators
// ---------------------------------------------------------------------------

namespace {

// Reusable multiplicity table keyed by u*n+v with epoch stamps, so nothing
// is cleared between trials.
class SpliceCounter {
public:
    explicit SpliceCounter(int n) : n_(n), count_(std::size_t(n) * n, 0), stamp_(std::size_t(n) * n, 0) {}

    void begin_trial() {
        ++epoch_;
        distinct_ = 0;
        repeats_ = 0;
    }

    void add_tree(const std::vector<Edge>& edges) {
        for (const Edge& e : edges) {
            const std::size_t id = std::size_t(e.u) * n_ + e.v;
            if (stamp_[id] != epoch_) {
                stamp_[id] = epoch_;
                count_[id] = 1;
                ++distinct_;
            } else {
                ++count_[id];
                ++repeats_;
            }
        }
    }

    int distinct() const { return distinct_; }
    int repeats() const { return repeats_; }
    int multiplicity(Edge e) const {
        const std::size_t id = std::size_t(e.u) * n_ + e.v;
        return stamp_[id] == epoch_ ? count_[id] : 0;
    }
    int common_count(Edge e, int ell) const { return multiplicity(e) == ell; }

private:
    int n_;
    std::vector<int> count_;
    std::vector<std::int64_t> stamp_;
    std::int64_t epoch_ = 0;
    int distinct_ = 0;
    int repeats_ = 0;
};

enum class ReportKind { Mean, Variance, Covariance };

ReportKind report_kind(Statistic stat) {
    switch (stat) {
        case Statistic::VarRe:
        case Statistic::VarM: return ReportKind::Variance;
        case Statistic::CovAdjacent:
        case Statistic::CovNonAdjacent: return ReportKind::Covariance;
        default: return ReportKind::Mean;
    }
}

}  // namespace

StatReport mc_estimate(int n, int k, long trials, Statistic stat, const RngStream& rng,
                       SamplerKind kind, int ell) {
    if (trials < 1) throw GraphError("mc_estimate needs trials >= 1");
    const Rational exact = exact_value(n, k, stat, ell);

    // Trees drawn per trial: single-tree probabilities need one, E[C_L]
    // needs ell, everything else needs k.
    int per_trial = k;
    switch (stat) {
        case Statistic::EdgeProb:
        case Statistic::PairProbAdjacent:
        case Statistic::PairProbNonAdjacent: per_trial = 1; break;
        case Statistic::ExpectedCommon:
            if (ell < 1 || ell > k) throw VertexRangeError("ExpectedCommon needs 1 <= ell <= k");
            per_trial = ell;
            break;
        default: break;
    }

    SpliceCounter counter(n);
    std::vector<Edge> buf;
    double sum_x = 0, sum_xx = 0, sum_y = 0, sum_yy = 0, sum_xy = 0;

    for (long t = 0; t < trials; ++t) {
        RngStream trial = rng.substream(static_cast<std::uint64_t>(t));
        counter.begin_trial();
        for (int i = 0; i < per_trial; ++i) {
            RngStream sub = trial.substream(static_cast<std::uint64_t>(i));
            sample_tree_edges(n, kind, sub, buf);
            counter.add_tree(buf);
        }

        double x = 0, y = 0;
        switch (stat) {
            case Statistic::EdgeProb: x = counter.multiplicity(kProbeEdge) > 0; break;
            case Statistic::PairProbAdjacent:
                x = counter.multiplicity(kProbeEdge) > 0 && counter.multiplicity(kProbeAdjacent) > 0;
                break;
            case Statistic::PairProbNonAdjacent:
                x = counter.multiplicity(kProbeEdge) > 0 &&
                    counter.multiplicity(kProbeNonAdjacent) > 0;
                break;
            case Statistic::ExpectedCommon: {
                int common = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        common += counter.multiplicity(Edge(u, v)) == ell;
                x = common;
                break;
            }
            case Statistic::ExpectedSk: x = counter.distinct(); break;
            case Statistic::ExpectedM:
            case Statistic::VarM: x = counter.repeats(); break;
            case Statistic::VarRe: {
                int c = counter.multiplicity(kProbeEdge);
                x = c > 0 ? c - 1 : 0;
                break;
            }
            case Statistic::CovAdjacent:
            case Statistic::CovNonAdjacent: {
                int c = counter.multiplicity(kProbeEdge);
                Edge other = stat == Statistic::CovAdjacent ? kProbeAdjacent : kProbeNonAdjacent;
                int c2 = counter.multiplicity(other);
                x = c > 0 ? c - 1 : 0;
                y = c2 > 0 ? c2 - 1 : 0;
                break;
            }
        }
        sum_x += x;
        sum_xx += x * x;
        sum_y += y;
        sum_yy += y * y;
        sum_xy += x * y;
    }

    const double t = static_cast<double>(trials);
    const double mean = sum_x / t;
    const double var_x = trials > 1 ? std::max(0.0, (sum_xx - sum_x * sum_x / t) / (t - 1)) : 0.0;

    StatReport rep;
    rep.quantity = statistic_name(stat);
    rep.n = n;
    rep.k = k;
    rep.exact = exact.convert_to<double>();
    rep.trials = trials;

    const bool is_probability = stat == Statistic::EdgeProb ||
                                stat == Statistic::PairProbAdjacent ||
                                stat == Statistic::PairProbNonAdjacent;

    switch (report_kind(stat)) {
        case ReportKind::Mean:
            rep.estimate = mean;
            // For Bernoulli rows the null SE is known exactly; the sample SE
            // collapses to zero when a rare event never fires.
            rep.std_error = is_probability
                                ? std::sqrt(rep.exact * (1.0 - rep.exact) / t)
                                : std::sqrt(var_x / t);
            break;
        case ReportKind::Variance:
            rep.estimate = var_x;
            // SE of a sample variance under approximate normality
            rep.std_error = var_x * std::sqrt(2.0 / (t - 1));
            break;
        case ReportKind::Covariance: {
            const double mean_y = sum_y / t;
            const double var_y =
                trials > 1 ? std::max(0.0, (sum_yy - sum_y * sum_y / t) / (t - 1)) : 0.0;
            const double cov = trials > 1 ? (sum_xy - sum_x * sum_y / t) / (t - 1) : 0.0;
            rep.estimate = cov;
            rep.std_error = std::sqrt((var_x * var_y + cov * cov) / t);
            (void)mean_y;
            break;
        }
    }
    rep.pass = std::abs(rep.estimate - rep.exact) <= 5.0 * rep.std_error ||
               rep.estimate == rep.exact;
    return rep;
}

ConcentrationResult concentration_check(int n, int k, double s, long trials, const RngStream& rng,
                                        SamplerKind kind) {
    if (k < 2) throw GraphError("concentration bound is degenerate for k < 2");
    if (!(s > 0)) throw GraphError("concentration threshold s must be positive");
    if (trials < 1) throw GraphError("concentration_check needs trials >= 1");

    const double expected_m = exact_expected_m(n, k).convert_to<double>();
    SpliceCounter counter(n);
    std::vector<Edge> buf;
    long tail = 0;
    for (long t = 0; t < trials; ++t) {
        RngStream trial = rng.substream(static_cast<std::uint64_t>(t));
        counter.begin_trial();
        for (int i = 0; i < k; ++i) {
            RngStream sub = trial.substream(static_cast<std::uint64_t>(i));
            sample_tree_edges(n, kind, sub, buf);
            counter.add_tree(buf);
        }
        if (std::abs(counter.repeats() - expected_m) >= s * expected_m) ++tail;
    }

    ConcentrationResult res;
    res.empirical = static_cast<double>(tail) / static_cast<double>(trials);
    res.bound = 1.0 / (s * s * k * (k - 1));
    res.std_error = std::sqrt(res.empirical * (1.0 - res.empirical) / static_cast<double>(trials));
    res.pass = res.empirical <= res.bound + 5.0 * res.std_error;
    return res;
}

}  // namespace splicer
