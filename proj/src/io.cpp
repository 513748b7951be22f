#include "splicer/io.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace splicer {

using nlohmann::json;

void write_edge_list(std::ostream& os, const SimpleGraph& g) {
    os << "# n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) os << e.u + 1 << " " << e.v + 1 << "\n";
}

SimpleGraph read_edge_list(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty input");
    int n = -1;
    long m = -1;
    if (std::sscanf(line.c_str(), "# n=%d m=%ld", &n, &m) != 2)
        throw ParseError("bad header, expected \"# n=<n> m=<m>\": " + line);
    if (n < 1) throw ParseError("bad vertex count in header");

    SimpleGraph g(n);
    long count = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw ParseError("bad edge line: " + line);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("vertex out of range on line: " + line);
        if (u == v) throw ParseError("self-loop on line: " + line);
        g.add_edge(Edge(u - 1, v - 1));
        ++count;
    }
    if (m >= 0 && count != m)
        throw ParseError("header claims m=" + std::to_string(m) + " but file has " +
                         std::to_string(count) + " edges");
    return g;
}

void write_dot(std::ostream& os, const SimpleGraph& g) {
    os << "graph {\n";
    for (const Edge& e : g.edges()) os << "  " << e.u + 1 << " -- " << e.v + 1 << ";\n";
    os << "}\n";
}

json to_json(const StatReport& rep) {
    return json{{"quantity", rep.quantity}, {"n", rep.n},
                {"k", rep.k},               {"exact", rep.exact},
                {"estimate", rep.estimate}, {"std_error", rep.std_error},
                {"trials", rep.trials},     {"pass", rep.pass}};
}

StatReport stat_report_from_json(const json& j) {
    StatReport rep;
    rep.quantity = j.at("quantity").get<std::string>();
    rep.n = j.at("n").get<int>();
    rep.k = j.at("k").get<int>();
    rep.exact = j.at("exact").get<double>();
    rep.estimate = j.at("estimate").get<double>();
    rep.std_error = j.at("std_error").get<double>();
    rep.trials = j.at("trials").get<long>();
    rep.pass = j.at("pass").get<bool>();
    return rep;
}

json to_json(const RepairLog& log) {
    json swaps = json::array();
    for (const RepairEvent& ev : log.swaps)
        swaps.push_back(json{{"tree", ev.tree},
                             {"removed", {ev.removed.u + 1, ev.removed.v + 1}},
                             {"inserted", {ev.inserted.u + 1, ev.inserted.v + 1}},
                             {"fallback", ev.fallback}});
    return json{{"n", log.n},
                {"k", log.k},
                {"repeats_found", log.repeats_found},
                {"repaired", log.repaired},
                {"fallbacks", log.fallbacks},
                {"swaps", std::move(swaps)}};
}

json to_json(const ConnectivityCertificate& cert) {
    json cut = json::array();
    for (const Edge& e : cert.witness_cut) cut.push_back(json::array({e.u + 1, e.v + 1}));
    return json{{"lambda", cert.lambda}, {"method", cert.method}, {"witness_cut", std::move(cut)}};
}

json graph_to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(json::array({e.u + 1, e.v + 1}));
    return json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", std::move(edges)}};
}

}  // namespace splicer
