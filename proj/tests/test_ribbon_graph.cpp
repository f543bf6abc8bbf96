#include "doctest.h"
#include "oracles.hpp"
#include "rgpd/chord.hpp"
#include "rgpd/partial_dual.hpp"
#include "rgpd/ribbon_graph.hpp"

using namespace rgpd;

namespace {

RibbonGraph word(const char* w) { return to_ribbon_graph(parse_word(w)); }

std::string error_of(auto&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("validate accepts generator output") {
    CHECK_NOTHROW(bouquet_bn(2).validate());
    CHECK_NOTHROW(tree_path(3).validate());
    CHECK_NOTHROW(dipole_opposite(4).validate());
    CHECK_NOTHROW(isolated_vertex().validate());
}

TEST_CASE("validate reports the first violated invariant") {
    CHECK(error_of([] { RibbonGraph({{0, 1}}, {{0, 0}}); }) == "pairing fixed point at 0");
    CHECK(error_of([] { RibbonGraph({{0, 1, 3}, {2, 3}}, {{0, 1}, {2, 3}}); }) == "duplicate dart 3");
    CHECK(error_of([] { RibbonGraph({{0, 1, 2}}, {{0, 1}, {2, 3}}); }) == "missing dart 3");
    CHECK(error_of([] { RibbonGraph::from_pairing({{0, 1}}, {0, 0}); }) == "pairing fixed point at 0");
    CHECK(error_of([] { RibbonGraph::from_pairing({{0, 1, 2, 3}}, {1, 2, 3, 0}); }) ==
          "pairing non-involution at 0");
    CHECK(error_of([] { RibbonGraph({{0, 1, 2, 3}}, {{0, 1}, {1, 2}}); }) == "pairing non-involution at 1");
    CHECK(error_of([] { RibbonGraph({{0, 7}}, {{0, 1}}); }) == "dart 7 out of range 0..1");
}

TEST_CASE("boundary components of the small examples") {
    CHECK(boundary_components(bouquet_bn(2)).size() == 1);
    CHECK(boundary_components(bouquet_bn(3)).size() == 2);
    CHECK(boundary_components(tree_path(1)).size() == 1);
    CHECK(boundary_components(isolated_vertex()).size() == 1);
}

TEST_CASE("boundary walks cover every dart-side exactly once") {
    for (const auto& g : oracle::fixtures(4)) {
        std::vector<int> hits(2 * g.num_darts(), 0);
        for (const auto& w : boundary_components(g))
            for (auto s : w) ++hits[s.index()];
        for (int h : hits) REQUIRE(h == 1);
    }
}

TEST_CASE("both side conventions count the same faces") {
    auto gen = oracle::rng(1);
    auto graphs = oracle::fixtures(5);
    for (int i = 0; i < 40; ++i) graphs.push_back(oracle::random_connected_graph(gen, 1 + i % 5, 1 + i % 7));
    for (const auto& g : graphs) {
        const int walks = static_cast<int>(boundary_components(g).size());
        CHECK(face_count_cross_then_rotate(g) == walks);
        CHECK(face_count_rotate_then_cross(g) == walks);
    }
}

TEST_CASE("stats") {
    SUBCASE("interlaced middle chord example") {
        const auto s = stats(word("BABCAC"));
        CHECK(s == GraphStats{1, 3, 2, 0, 1});
    }
    SUBCASE("single loop") { CHECK(stats(word("AA")) == GraphStats{1, 1, 2, 2, 0}); }
    SUBCASE("B_5 has genus 2") { CHECK(stats(bouquet_bn(5)).genus == 2); }
    SUBCASE("disconnected graphs are rejected") {
        RibbonGraph two_loops({{0, 1}, {2, 3}}, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(stats(two_loops), InvalidGraph);
    }
    SUBCASE("Euler characteristic is even on connected fixtures") {
        for (const auto& g : oracle::fixtures(4)) {
            const auto s = stats(g);
            CHECK(s.euler_char == s.v - s.e + s.f);
            CHECK(s.euler_char % 2 == 0);
            CHECK(s.euler_char == 2 - 2 * s.genus);
        }
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(bouquet_bn(3)).count == 1);
    RibbonGraph two_loops({{0, 1}, {2, 3}}, {{0, 1}, {2, 3}});
    const auto c = connected_components(two_loops);
    CHECK(c.count == 2);
    CHECK(c.of_dart == std::vector<int>{0, 0, 1, 1});
    CHECK(connected_components(isolated_vertex()).count == 1);
}

TEST_CASE("isomorphism") {
    CHECK(is_isomorphic(bouquet_bn(3), word("BCABCA")));
    CHECK_FALSE(is_isomorphic(bouquet_bn(2), word("AABB")));
    CHECK(is_isomorphic(isolated_vertex(), isolated_vertex()));
    CHECK(is_isomorphic(tree_path(2), tree_star(2)));  // both are the 2-edge path
    CHECK_FALSE(is_isomorphic(tree_path(3), tree_star(3)));

    auto gen = oracle::rng(2);
    const auto fx = oracle::fixtures(3);
    for (const auto& g : fx) {
        CHECK(is_isomorphic(g, g));
        CHECK(is_isomorphic(g, oracle::shuffle_darts(gen, g)));
        CHECK(is_isomorphic(g, partial_dual(g, std::vector<EdgeId>{})));
    }
    for (std::size_t i = 0; i < fx.size(); ++i)
        for (std::size_t j = 0; j < fx.size(); ++j) CHECK(is_isomorphic(fx[i], fx[j]) == is_isomorphic(fx[j], fx[i]));
}

TEST_CASE("join") {
    SUBCASE("two single loops give AABB") {
        const auto j = join(bouquet_bn(1), 0, 0, bouquet_bn(1), 0, 0);
        CHECK(from_one_vertex(j).to_string() == "AABB");
    }
    SUBCASE("B_2 with B_2 splits into two interlacement components") {
        for (int c1 = 0; c1 < 4; ++c1) {
            for (int c2 = 0; c2 < 4; ++c2) {
                const auto d = from_one_vertex(join(bouquet_bn(2), 0, c1, bouquet_bn(2), 0, c2));
                const auto ig = interlacement(d);
                int count = 0;
                const auto comp = ig.components(&count);
                CHECK(count == 2);
                for (int a = 0; a < 4; ++a) CHECK(ig.degree(a) == 1);
            }
        }
    }
    SUBCASE("bad indices") {
        CHECK_THROWS_AS(join(bouquet_bn(1), 1, 0, bouquet_bn(1), 0, 0), std::out_of_range);
        CHECK_THROWS_AS(join(bouquet_bn(1), 0, 2, bouquet_bn(1), 0, 0), std::out_of_range);
        CHECK_THROWS_AS(join(bouquet_bn(1), 0, 0, bouquet_bn(1), 0, -1), std::out_of_range);
    }
    SUBCASE("genus adds under join") {
        auto gen = oracle::rng(3);
        for (int i = 0; i < 50; ++i) {
            std::uniform_int_distribution<int> ev(1, 4), vv(1, 3);
            const auto g1 = oracle::random_connected_graph(gen, vv(gen), ev(gen));
            const auto g2 = oracle::random_connected_graph(gen, vv(gen), ev(gen));
            std::uniform_int_distribution<int> p1(0, g1.num_vertices() - 1), p2(0, g2.num_vertices() - 1);
            const int v1 = p1(gen), v2 = p2(gen);
            std::uniform_int_distribution<int> k1(0, std::max<int>(1, g1.rotation(v1).size()) - 1);
            std::uniform_int_distribution<int> k2(0, std::max<int>(1, g2.rotation(v2).size()) - 1);
            const auto j = join(g1, v1, k1(gen), g2, v2, k2(gen));
            CHECK(j.num_edges() == g1.num_edges() + g2.num_edges());
            CHECK(stats(j).genus == stats(g1).genus + stats(g2).genus);
        }
    }
}

TEST_CASE("named families") {
    CHECK(from_one_vertex(bouquet_bn(1)).to_string() == "AA");
    CHECK(from_one_vertex(bouquet_bn(2)).to_string() == "ABAB");
    CHECK(from_one_vertex(bouquet_bn(3)).to_string() == "ABCABC");
    CHECK(stats(bouquet_bn(2)).f == 1);
    CHECK(stats(bouquet_bn(3)).f == 2);
    CHECK(stats(tree_path(1)) == GraphStats{2, 1, 1, 2, 0});
    CHECK(stats(tree_star(3)).genus == 0);
    CHECK(stats(tree_star(3)).f == 1);
    CHECK(is_isomorphic(dipole_opposite(1), tree_path(1)));
    for (int n : {3, 5}) {
        const auto d = dipole_opposite(n);
        for (EdgeId e = 0; e < n; ++e) {
            CHECK(is_isomorphic(d, partial_dual(bouquet_bn(n), {e})));
            CHECK(edge_type(d, e) == EdgeType::pu);
        }
    }
    for (int n : {0, -1}) {
        CHECK_THROWS(bouquet_bn(n));
        CHECK_THROWS(tree_path(n));
        CHECK_THROWS(tree_star(n));
        CHECK_THROWS(dipole_opposite(n));
    }
}

TEST_CASE("canonical dart order keeps the map") {
    auto gen = oracle::rng(4);
    for (int i = 0; i < 20; ++i) {
        const auto g = oracle::shuffle_darts(gen, oracle::random_connected_graph(gen, 3, 5));
        const auto c = canonical_dart_order(g);
        CHECK(is_isomorphic(g, c));
        Dart expect = 0;
        for (const auto& rot : c.rotations())
            for (Dart d : rot) CHECK(d == expect++);
    }
}
