#include "doctest.h"
#include "oracles.hpp"
#include "rgpd/io.hpp"
#include "rgpd/partial_dual.hpp"

using namespace rgpd;

namespace {

std::string parse_error(const std::string& text) {
    try {
        io::parse_graph_text(text);
    } catch (const io::ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("text format") {
    const auto g = io::parse_graph_text(
        "# opposite dipole on three edges\n"
        "vertices 2\n"
        "0 2 4\n"
        "1 5 3\n"
        "edges 3\n"
        "0 0 1\n"
        "1 2 3\n"
        "2 4 5\n");
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 3);
    CHECK(stats(g).genus == 0);

    const auto iso = io::parse_graph_text("vertices 2\n\n\nedges 0\n");
    CHECK(iso.num_vertices() == 2);
    CHECK_THROWS_AS(stats(iso), InvalidGraph);
}

TEST_CASE("text format errors carry line numbers") {
    CHECK(parse_error("") == "line 1: missing 'vertices <count>' header");
    CHECK(parse_error("vertices 1\n0 1\nedges 1\n0 0 0\n") == "line 4: pairing fixed point at 0");
    CHECK(parse_error("vertices 1\n0 1 1\nedges 1\n0 0 1\n") .find("line 2: duplicate dart 1") == 0);
    CHECK(parse_error("vertices 1\n0 1 2 3\nedges 2\n0 0 1\n0 2 3\n").find("line 5: edge label 0 repeated") == 0);
    CHECK(parse_error("vertices 1\n0 1 2 3\nedges 2\n0 0 1\n1 1 2\n").find("line 5: dart 1 already paired") == 0);
    CHECK(parse_error("vertices 1\n0 x\nedges 1\n0 0 1\n") == "line 2: expected an integer, got 'x'");
    CHECK(parse_error("vertices 1\n0 1\nedges 1\n0 0 1\nextra\n") == "line 5: unexpected content after the edge list");
    CHECK(parse_error("vertices 1\n0 1\nedges 1\n5 0 1\n") == "line 4: edge label 5 out of range");
    CHECK(parse_error("vertices 1\n0 1\nedges 1\n").find("expected 1 edge lines, got 0") != std::string::npos);
}

TEST_CASE("round trips") {
    auto gen = oracle::rng(60);
    for (int i = 0; i < 20; ++i) {
        const auto g = oracle::shuffle_darts(gen, oracle::random_connected_graph(gen, 1 + i % 5, 1 + i % 7));
        const auto t = io::parse_graph(io::graph_to_text(g));
        const auto j = io::parse_graph(io::graph_to_json(g));
        CHECK(t == j);
        CHECK(is_isomorphic(t, g));
        CHECK(io::graph_to_text(t) == io::graph_to_text(g));
        CHECK(stats(t) == stats(g));
        CHECK(gamma(t) == gamma(g));
    }
}

TEST_CASE("json format") {
    const auto g = io::parse_graph_json(R"({"vertices": [[0, 1, 2, 3]], "edges": [[0, 2], [1, 3]]})");
    CHECK(is_isomorphic(g, bouquet_bn(2)));
    CHECK_THROWS_AS(io::parse_graph_json("{"), io::ParseError);
    CHECK_THROWS_AS(io::parse_graph_json(R"({"vertices": 3})"), io::ParseError);
    CHECK_THROWS_AS(io::parse_graph_json(R"({"vertices": [[0, 1]], "edges": [[0, 0]]})"), io::ParseError);
}

TEST_CASE("word lists") {
    const auto a = io::parse_word_list("# header\nABAB\n\n  BABCAC  # middle chord\n");
    REQUIRE(a.size() == 2);
    CHECK(a[1].to_string() == "ABACBC");
    const auto b = io::parse_word_list(R"(["ABAB", "BABCAC"])");
    CHECK(a == b);
    CHECK_THROWS_AS(io::parse_word_list("ABAB\nABA\n"), io::ParseError);
    try {
        io::parse_word_list("ABAB\nABA\n");
    } catch (const io::ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("polynomial json") {
    const auto p = GenusPolynomial({2, 6});
    CHECK(io::poly_from_json(io::poly_to_json(p)) == p);
    CHECK_THROWS_AS(io::poly_from_json(R"([1, "x"])"), io::ParseError);
}

TEST_CASE("missing file") { CHECK_THROWS(io::read_file("/nonexistent/graph.txt")); }
