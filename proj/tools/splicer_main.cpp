// Command-line front end: generate k-edge-connected graphs from random
// spanning trees, verify edge connectivity, and check the model's statistics
// against their closed forms.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>

#include "splicer/connectivity.hpp"
#include "splicer/disjointify.hpp"
#include "splicer/io.hpp"
#include "splicer/stats.hpp"

using nlohmann::json;
using namespace splicer;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    int n = 10;
    int k = 2;
    std::string sampler = "prufer";
    std::optional<std::uint64_t> seed;
    long trials = 10000;
    std::string format = "edgelist";
    std::string out;
    bool oracle = false;
    std::optional<double> s;
};

std::uint64_t effective_seed(const RunConfig& cfg) {
    if (cfg.seed) return *cfg.seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

SamplerKind sampler_or_throw(const std::string& name) {
    auto kind = parse_sampler(name);
    if (!kind) throw CLI::ValidationError("--sampler", "unknown sampler: " + name);
    return *kind;
}

void write_graph(std::ostream& os, const SimpleGraph& g, const std::string& format) {
    if (format == "edgelist")
        write_edge_list(os, g);
    else if (format == "dot")
        write_dot(os, g);
    else if (format == "json")
        os << graph_to_json(g).dump(2) << "\n";
    else
        throw CLI::ValidationError("--format", "unknown format: " + format);
}

struct GenOutcome {
    SimpleGraph graph;
    RepairLog log;
    ConnectivityCertificate cert;
    json sidecar;
};

GenOutcome run_generation(const RunConfig& cfg, std::uint64_t seed) {
    const SamplerKind kind = sampler_or_throw(cfg.sampler);
    auto [graph, log] = generate_k_connected(cfg.n, cfg.k, kind, RngStream(seed));
    ConnectivityCertificate cert = edge_connectivity(graph);

    const double ratio_bound = 2.0 * (cfg.n - 1) / cfg.n;
    json sidecar{{"n", cfg.n},
                 {"k", cfg.k},
                 {"seed", seed},
                 {"sampler", cfg.sampler},
                 {"edges", graph.edge_count()},
                 {"fallbacks", log.fallbacks},
                 {"lambda", cert.lambda},
                 {"ratio_bound", ratio_bound}};
    return {std::move(graph), std::move(log), std::move(cert), std::move(sidecar)};
}

int cmd_gen(const RunConfig& cfg) {
    const std::uint64_t seed = effective_seed(cfg);
    GenOutcome out = run_generation(cfg, seed);

    if (!cfg.out.empty()) {
        std::ofstream of(cfg.out);
        if (!of) {
            std::cerr << "cannot open output file: " << cfg.out << "\n";
            return kExitUsage;
        }
        write_graph(of, out.graph, cfg.format);
        std::ofstream sc(cfg.out + ".json");
        sc << out.sidecar.dump(2) << "\n";
        std::cout << out.sidecar.dump(2) << "\n";
    } else {
        write_graph(std::cout, out.graph, cfg.format);
        std::cerr << out.sidecar.dump(2) << "\n";
    }
    return out.cert.lambda >= cfg.k ? kExitPass : kExitViolation;
}

int cmd_verify(const std::string& path, int expected_k) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open input file: " << path << "\n";
        return kExitUsage;
    }
    SimpleGraph g(1);
    try {
        g = read_edge_list(in);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    ConnectivityCertificate cert = edge_connectivity(g);
    json report = to_json(cert);
    report["expected_k"] = expected_k;
    report["pass"] = cert.lambda >= expected_k;
    std::cout << report.dump(2) << "\n";
    return cert.lambda >= expected_k ? kExitPass : kExitViolation;
}

void print_table(const std::vector<StatReport>& rows) {
    std::cout << std::left << std::setw(28) << "quantity" << std::right << std::setw(14) << "exact"
              << std::setw(14) << "estimate" << std::setw(12) << "std_err" << std::setw(10)
              << "trials" << std::setw(7) << "pass" << "\n";
    for (const StatReport& r : rows) {
        std::cout << std::left << std::setw(28) << r.quantity << std::right << std::fixed
                  << std::setprecision(6) << std::setw(14) << r.exact << std::setw(14) << r.estimate
                  << std::setw(12) << r.std_error << std::setw(10) << r.trials << std::setw(7)
                  << (r.pass ? "yes" : "NO") << "\n";
        std::cout.unsetf(std::ios::fixed);
    }
}

int cmd_stats(const RunConfig& cfg) {
    if (cfg.trials < 100) throw CLI::ValidationError("--trials", "needs at least 100 trials");
    const std::uint64_t seed = effective_seed(cfg);
    const SamplerKind kind = sampler_or_throw(cfg.sampler);
    const RngStream base(seed);

    struct Row {
        Statistic stat;
        int ell;
    };
    std::vector<Row> plan{{Statistic::EdgeProb, 0}};
    if (cfg.n >= 3) plan.push_back({Statistic::PairProbAdjacent, 0});
    if (cfg.n >= 4) plan.push_back({Statistic::PairProbNonAdjacent, 0});
    for (int ell = 1; ell <= cfg.k; ++ell) plan.push_back({Statistic::ExpectedCommon, ell});
    plan.push_back({Statistic::ExpectedSk, 0});
    plan.push_back({Statistic::ExpectedM, 0});
    if (cfg.n >= 3) plan.push_back({Statistic::VarM, 0});

    std::vector<StatReport> rows;
    bool all_pass = true;
    std::uint64_t stream = 0;
    for (const Row& row : plan) {
        StatReport rep =
            mc_estimate(cfg.n, cfg.k, cfg.trials, row.stat, base.substream(stream++), kind, row.ell);
        if (row.stat == Statistic::ExpectedCommon)
            rep.quantity += " |L|=" + std::to_string(row.ell);
        if (cfg.oracle) {
            const Rational oracle = brute_force_oracle(cfg.n, cfg.k, row.stat, row.ell);
            const Rational closed = exact_value(cfg.n, cfg.k, row.stat, row.ell);
            if (oracle != closed) {
                rep.pass = false;
                rep.quantity += " [oracle mismatch]";
            } else {
                rep.quantity += " [oracle ok]";
            }
        }
        all_pass = all_pass && rep.pass;
        rows.push_back(std::move(rep));
    }

    json out = json::array();
    for (const StatReport& r : rows) out.push_back(to_json(r));

    if (cfg.s && cfg.k >= 2) {
        ConcentrationResult con =
            concentration_check(cfg.n, cfg.k, *cfg.s, cfg.trials, base.substream(stream++), kind);
        StatReport rep;
        rep.quantity = "Pr(|M-E[M]| >= s E[M]) s=" + std::to_string(*cfg.s);
        rep.n = cfg.n;
        rep.k = cfg.k;
        rep.exact = con.bound;
        rep.estimate = con.empirical;
        rep.std_error = con.std_error;
        rep.trials = cfg.trials;
        rep.pass = con.pass;
        all_pass = all_pass && rep.pass;
        out.push_back(to_json(rep));
        rows.push_back(std::move(rep));
    }

    if (cfg.format == "json") {
        json doc{{"n", cfg.n},       {"k", cfg.k},          {"seed", seed},
                 {"sampler", cfg.sampler}, {"trials", cfg.trials}, {"rows", std::move(out)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "n=" << cfg.n << " k=" << cfg.k << " seed=" << seed
                  << " sampler=" << cfg.sampler << " trials=" << cfg.trials << "\n";
        print_table(rows);
    }
    return all_pass ? kExitPass : kExitViolation;
}

int cmd_approx(const RunConfig& cfg) {
    if (cfg.n < 3) throw CLI::ValidationError("--n", "approximation claim needs n >= 3");
    const std::uint64_t seed = effective_seed(cfg);
    GenOutcome out = run_generation(cfg, seed);

    const long edges = static_cast<long>(out.graph.edge_count());
    const long lower_bound = (static_cast<long>(cfg.k) * cfg.n + 1) / 2;  // ceil(kn/2)
    const double ratio = static_cast<double>(edges) / static_cast<double>(lower_bound);
    const double cap = 2.0 * (cfg.n - 1) / cfg.n;
    const bool pass = ratio <= cap;

    json report = out.sidecar;
    report["lower_bound"] = lower_bound;
    report["ratio"] = ratio;
    report["cap"] = cap;
    report["pass"] = pass;
    std::cout << report.dump(2) << "\n";
    return pass ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-edge-connected graph generation from random spanning trees"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string verify_path;
    int verify_k = 1;

    auto add_common = [&](CLI::App* sub, bool with_trials) {
        sub->add_option("--n", cfg.n, "number of vertices")->required();
        sub->add_option("--k", cfg.k, "connectivity requirement")->required();
        sub->add_option("--seed", cfg.seed, "RNG seed (default: entropy, echoed in output)");
        sub->add_option("--sampler", cfg.sampler, "prufer|aldous-broder|wilson");
        if (with_trials) sub->add_option("--trials", cfg.trials, "Monte Carlo trials");
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a k-edge-connected graph");
    add_common(gen, false);
    gen->add_option("--format", cfg.format, "edgelist|json|dot");
    gen->add_option("--out", cfg.out, "output path (sidecar written to <out>.json)");

    CLI::App* verify = app.add_subcommand("verify", "check edge connectivity of an edge-list file");
    verify->add_option("path", verify_path, "edge-list file")->required();
    verify->add_option("--k", verify_k, "required edge connectivity")->required();

    CLI::App* stats = app.add_subcommand("stats", "Monte Carlo checks against closed forms");
    add_common(stats, true);
    stats->add_flag("--oracle", cfg.oracle, "cross-check closed forms by full enumeration");
    stats->add_option("--s", cfg.s, "concentration threshold");
    stats->add_option("--format", cfg.format, "table|json");

    CLI::App* approx = app.add_subcommand("approx", "report the approximation ratio of one run");
    add_common(approx, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(cfg);
        if (verify->parsed()) return cmd_verify(verify_path, verify_k);
        if (stats->parsed()) return cmd_stats(cfg);
        if (approx->parsed()) return cmd_approx(cfg);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
