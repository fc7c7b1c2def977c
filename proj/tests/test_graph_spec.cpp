#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "weyl/canonical.hpp"
#include "weyl/graph_spec.hpp"

using namespace weyl;

TEST_CASE("atoms") {
    CHECK(parse_graph_spec("weyl:F4").size() == 24);
    CHECK(parse_graph_spec("kneser:5,2").size() == 10);
    CHECK(parse_graph_spec("sp2:6").size() == 63);
    CHECK(parse_graph_spec("nsp:6,-").size() == 36);
    CHECK(parse_graph_spec("nsp:8,+").size() == 120);
    CHECK(parse_graph_spec("named:g32a").size() == 32);
    CHECK(parse_graph_spec("cycle:5").size() == 5);
    CHECK(parse_graph_spec("complete:4").edge_count() == 6);
    CHECK(parse_graph_spec("bipartite:3,3").edge_count() == 9);
    CHECK(parse_graph_spec("refl:H3").size() == 15);
}

TEST_CASE("operators and nesting") {
    Graph c444 = parse_graph_spec("cartesian(cycle:4,cycle:4,cycle:4)");
    CHECK(c444.size() == 64);
    for (int v = 0; v < c444.size(); ++v) CHECK(c444.degree(v) == 6);

    CHECK(is_isomorphic(parse_graph_spec("join(empty:2,empty:2)"), cycle_graph(4)));
    CHECK(parse_graph_spec("union(cycle:3,cycle:3)").components().size() == 2);
    CHECK(is_isomorphic(parse_graph_spec("reduce(compose(kneser:5,2,complete:2))"),
                        kneser_graph(5, 2)));
    CHECK(is_isomorphic(parse_graph_spec("complement(empty:4)"), complete_graph(4)));
}

TEST_CASE("file round trip") {
    Graph g = parse_graph_spec("weyl:F4");
    std::string path = "spec_roundtrip_tmp.json";
    {
        std::ofstream out(path);
        out << graph_to_json(g).dump();
    }
    Graph back = parse_graph_spec("file:" + path);
    CHECK(canonical_form(back) == canonical_form(g));
    std::remove(path.c_str());
}

TEST_CASE("bad specs are rejected") {
    for (const char* bad : {"nonsense", "kneser:5", "nsp:6,x", "cartesian(cycle:4)",
                            "compose(cycle:4)", "weyl:Q9", "kneser:5,2junk"}) {
        CHECK_THROWS_AS(parse_graph_spec(bad), std::domain_error);
    }
    // syntax errors carry the offending position
    for (const char* bad : {"nonsense", "kneser:5", "nsp:6,x", "kneser:5,2junk"}) {
        try {
            parse_graph_spec(bad);
            FAIL("expected a parse error");
        } catch (const std::domain_error& e) {
            CHECK(std::string(e.what()).find("position") != std::string::npos);
        }
    }
}
