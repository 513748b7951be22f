#pragma once

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "splicer/connectivity.hpp"
#include "splicer/disjointify.hpp"
#include "splicer/graph.hpp"
#include "splicer/stats.hpp"

namespace splicer {

struct ParseError : GraphError {
    using GraphError::GraphError;
};

// Edge-list interchange format: header "# n=<n> m=<m>", then one edge per
// line as "u v", 1-based, ascending canonical order.
void write_edge_list(std::ostream& os, const SimpleGraph& g);
SimpleGraph read_edge_list(std::istream& is);

// Undirected DOT with 1-based labels.
void write_dot(std::ostream& os, const SimpleGraph& g);

nlohmann::json to_json(const StatReport& rep);
nlohmann::json to_json(const RepairLog& log);
nlohmann::json to_json(const ConnectivityCertificate& cert);
nlohmann::json graph_to_json(const SimpleGraph& g);

StatReport stat_report_from_json(const nlohmann::json& j);

}  // namespace splicer
