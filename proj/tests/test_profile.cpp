#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "spg/profile.hpp"
#include "spg/rng.hpp"
#include "spg/soc.hpp"

using namespace spg;
using test::pseudotree5_profile;

TEST_SUITE_BEGIN("profile");

TEST_CASE("traversal on a path") {
    Graph path3 = Graph::path(3);
    CHECK(is_traversal(path3, Ranking{{1, 2, 3}}));
    CHECK_FALSE(is_traversal(path3, Ranking{{1, 3, 2}}));
}

TEST_CASE("traversal on the five-candidate witness") {
    Graph g(5, {{1, 2}, {1, 3}, {2, 5}, {3, 5}, {3, 4}});
    CHECK(is_traversal(g, Ranking{{2, 5, 3, 4, 1}}));
    CHECK(is_compatible(g, pseudotree5_profile()));
}

TEST_CASE("five-candidate profile fits no tree edge set of the path kind") {
    Profile p = pseudotree5_profile();
    // removing any edge of the unique 5-edge witness breaks compatibility
    Graph g(5, {{1, 2}, {1, 3}, {2, 5}, {3, 5}, {3, 4}});
    for (const Edge& e : g.edges) {
        std::vector<Edge> rest;
        for (const Edge& f : g.edges)
            if (f != e) rest.push_back(f);
        CHECK_FALSE(is_compatible(Graph(5, rest), p));
    }
}

TEST_CASE("any profile is compatible with the complete graph") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 2 + rng.next_int(5);
        Profile p = test::random_profile(m, 1 + rng.next_int(4), rng);
        CHECK(is_compatible(Graph::complete(m), p));
    }
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(is_traversal(Graph::path(3), Ranking{{1, 2, 3, 4}}),
                    std::invalid_argument);
}

TEST_CASE("necessary edges of the five-candidate profile") {
    auto nec = necessary_edges(pseudotree5_profile());
    CHECK(nec == std::vector<Edge>{{1, 2}, {1, 3}, {2, 5}, {3, 5}});
}

TEST_CASE("single voter forces only its first pair") {
    CHECK(necessary_edges(test::single_voter({1, 2, 3, 4})) ==
          std::vector<Edge>{{1, 2}});
}

TEST_CASE("all six rankings of three candidates force all edges") {
    std::vector<std::vector<int>> orders;
    std::vector<int> perm{1, 2, 3};
    do {
        orders.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto nec = necessary_edges(Profile::from_orders(3, orders));
    CHECK(nec == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("necessary edges are contained in every compatible graph") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 2 + rng.next_int(4);  // up to 5 candidates
        Profile p = test::random_profile(m, 1 + rng.next_int(3), rng);
        auto nec = necessary_edges(p);
        int nv = m * (m - 1) / 2;
        std::vector<Edge> pairs;
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b) pairs.push_back({a, b});
        for (unsigned mask = 0; mask < (1u << nv); ++mask) {
            std::vector<Edge> edges;
            for (int v = 0; v < nv; ++v)
                if (mask & (1u << v)) edges.push_back(pairs[static_cast<size_t>(v)]);
            Graph g(m, edges);
            if (!is_compatible(g, p)) continue;
            for (const Edge& e : nec) CHECK(g.has_edge(e.first, e.second));
        }
    }
}

TEST_CASE("incremental traversal equals induced-connectivity check") {
    Rng rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        int m = 2 + rng.next_int(7);  // up to 8
        std::vector<Edge> edges;
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b)
                if (rng.next_double() < 0.4) edges.push_back({a, b});
        Graph g(m, edges);
        Ranking r{rng.permutation(m)};
        CHECK(is_traversal(g, r) == is_traversal_naive(g, r));
    }
}

TEST_CASE("modern soc parsing") {
    const char* text =
        "# FILE NAME: demo.soc\n"
        "# NUMBER ALTERNATIVES: 3\n"
        "# NUMBER VOTERS: 3\n"
        "# ALTERNATIVE NAME 1: red\n"
        "2: 1,2,3\n"
        "1: 3,2,1\n";
    SocData data = parse_soc(text);
    CHECK(data.profile.m == 3);
    CHECK(data.profile.voter_count() == 3);
    CHECK(data.profile.distinct_count() == 2);
    CHECK(data.labels[0] == "red");
    CHECK(data.profile.entries[0].second == 2);
}

TEST_CASE("legacy soc parsing") {
    const char* text =
        "3\n"
        "1,apple\n"
        "2,pear\n"
        "3,plum\n"
        "4,4,2\n"
        "3,1,2,3\n"
        "1,3,2,1\n";
    SocData data = parse_soc(text);
    CHECK(data.profile.m == 3);
    CHECK(data.profile.voter_count() == 4);
    CHECK(data.labels[1] == "pear");
}

TEST_CASE("soc round trip is stable") {
    Profile p = pseudotree5_profile();
    std::string once = serialize_soc(p);
    SocData again = parse_soc(once);
    CHECK(again.profile.m == p.m);
    CHECK(again.profile.entries == p.entries);
    CHECK(serialize_soc(again.profile, again.labels) == once);
}

TEST_CASE("legacy files serialize into the metadata dialect") {
    const char* text =
        "3\n"
        "1,apple\n"
        "2,pear\n"
        "3,plum\n"
        "4,4,2\n"
        "3,1,2,3\n"
        "1,3,2,1\n";
    SocData legacy = parse_soc(text);
    std::string emitted = serialize_soc(legacy.profile, legacy.labels);
    CHECK(emitted.rfind("# NUMBER ALTERNATIVES: 3", 0) == 0);
    CHECK(emitted.find("# ALTERNATIVE NAME 2: pear") != std::string::npos);
    SocData back = parse_soc(emitted);
    CHECK(back.profile.entries == legacy.profile.entries);
    CHECK(back.labels == legacy.labels);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_soc("# NUMBER VOTERS: 1\n1: 1,2\n"), SocParseError);
    try {
        parse_soc(
            "# NUMBER ALTERNATIVES: 3\n"
            "# NUMBER VOTERS: 2\n"
            "1: 1,2,3\n"
            "1: 2,2,3\n");
        CHECK(false);
    } catch (const SocParseError& e) {
        CHECK(e.line == 4);
    }
    // count mismatch
    CHECK_THROWS_AS(parse_soc("# NUMBER ALTERNATIVES: 2\n# NUMBER VOTERS: 5\n1: 1,2\n"),
                    SocParseError);
}

TEST_CASE("graph structure predicates") {
    CHECK(Graph::path(4).is_path_graph());
    CHECK(Graph::path(4).is_tree());
    CHECK_FALSE(Graph::path(4).is_cycle_graph());
    CHECK(Graph::cycle(4).is_cycle_graph());
    CHECK(Graph::cycle(4).is_pseudotree());
    CHECK(Graph::star(5).is_tree());
    CHECK_FALSE(Graph::star(5).is_path_graph());
    CHECK_FALSE(Graph(4, {{1, 2}, {3, 4}}).connected());
}

TEST_SUITE_END();
