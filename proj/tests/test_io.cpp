#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "splicer/io.hpp"
#include "splicer/samplers.hpp"

using namespace splicer;

TEST_CASE("edge-list format") {
    SUBCASE("header and 1-based ascending edges") {
        SimpleGraph g(3);
        g.add_edge(Edge(2, 0));
        g.add_edge(Edge(0, 1));
        std::ostringstream os;
        write_edge_list(os, g);
        CHECK(os.str() == "# n=3 m=2\n1 2\n1 3\n");
    }
    SUBCASE("round trip on random graphs") {
        RngStream rng(5);
        for (int rep = 0; rep < 20; ++rep) {
            auto g = graph_union(
                sample_k_trees(8, 3, SamplerKind::PruferUniform, rng.substream(rep)));
            std::ostringstream os;
            write_edge_list(os, g);
            std::istringstream is(os.str());
            auto back = read_edge_list(is);
            CHECK(back.edges() == g.edges());
        }
    }
    SUBCASE("parse errors") {
        auto fails = [](const std::string& text) {
            std::istringstream is(text);
            CHECK_THROWS_AS(read_edge_list(is), ParseError);
        };
        fails("");
        fails("n=3 m=1\n1 2\n");
        fails("# n=3 m=2\n1 2\n");            // header count mismatch
        fails("# n=3 m=1\n1 4\n");            // vertex out of range
        fails("# n=3 m=1\n2 2\n");            // self-loop
        fails("# n=3 m=1\nfoo bar\n");
    }
}

TEST_CASE("dot output") {
    SimpleGraph g(3);
    g.add_edge(Edge(0, 1));
    g.add_edge(Edge(1, 2));
    std::ostringstream os;
    write_dot(os, g);
    CHECK(os.str() == "graph {\n  1 -- 2;\n  2 -- 3;\n}\n");
}

TEST_CASE("JSON serialization") {
    SUBCASE("StatReport round trips") {
        StatReport rep{"E[S_k]", 100, 3, 291.0996, 291.1, 0.02, 10000, true};
        auto back = stat_report_from_json(to_json(rep));
        CHECK(back.quantity == rep.quantity);
        CHECK(back.n == rep.n);
        CHECK(back.k == rep.k);
        CHECK(back.exact == rep.exact);
        CHECK(back.estimate == rep.estimate);
        CHECK(back.std_error == rep.std_error);
        CHECK(back.trials == rep.trials);
        CHECK(back.pass == rep.pass);
    }
    SUBCASE("RepairLog fields") {
        RepairLog log;
        log.n = 4;
        log.k = 2;
        log.repeats_found = 1;
        log.repaired = 1;
        log.swaps.push_back({1, Edge(0, 1), Edge(2, 3), false});
        auto j = to_json(log);
        CHECK(j["n"] == 4);
        CHECK(j["repaired"] == 1);
        CHECK(j["swaps"][0]["removed"] == nlohmann::json::array({1, 2}));
        CHECK(j["swaps"][0]["inserted"] == nlohmann::json::array({3, 4}));
    }
    SUBCASE("ConnectivityCertificate fields") {
        ConnectivityCertificate cert{2, {Edge(0, 1), Edge(0, 2)}, "maxflow"};
        auto j = to_json(cert);
        CHECK(j["lambda"] == 2);
        CHECK(j["method"] == "maxflow");
        CHECK(j["witness_cut"].size() == 2);
    }
}
