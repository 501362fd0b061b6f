#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spg/generators.hpp"
#include "spg/rng.hpp"
#include "spg/solver.hpp"

using namespace spg;
using test::half_integral_profile;
using test::pseudotree5_profile;
using test::two_voter_profile;

TEST_SUITE_BEGIN("solver");

TEST_CASE("greedy incumbent basics") {
    Graph g = greedy_incumbent(pseudotree5_profile());
    CHECK(is_compatible(g, pseudotree5_profile()));
    CHECK(g.edge_count() <= 6);
    CHECK(g.edge_count() >= 5);

    // single voter: every constraint is closed by one edge, so the result
    // is a spanning tree
    Profile solo = test::single_voter({1, 2, 3, 4});
    Graph t = greedy_incumbent(solo);
    CHECK(is_compatible(t, solo));
    CHECK(t.is_tree());
}

TEST_CASE("minimum edges on the five-candidate profile") {
    SolveReport rep = branch_and_bound({pseudotree5_profile(), Objective::MinEdges, {}, {}});
    REQUIRE(rep.feasible);
    CHECK(rep.proven_optimal);
    CHECK(rep.objective_value == 5);
    CHECK(rep.witness.edges ==
          std::vector<Edge>{{1, 2}, {1, 3}, {2, 5}, {3, 4}, {3, 5}});
}

TEST_CASE("half-integral profile needs five edges, bound starts at 4.5") {
    SolveReport rep = branch_and_bound({half_integral_profile(), Objective::MinEdges, {}, {}});
    REQUIRE(rep.proven_optimal);
    CHECK(rep.objective_value == 5);
    CHECK(rep.root_bound == doctest::Approx(4.5).epsilon(1e-6));
}

TEST_CASE("degree objective on a single voter") {
    SolveReport rep = branch_and_bound(
        {test::single_voter({1, 2, 3}), Objective::MinMaxDegree, {}, {}});
    REQUIRE(rep.proven_optimal);
    CHECK(rep.objective_value == 2);
    CHECK(rep.root_bound == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("tree-compatible instances solve at the root") {
    Rng rng(83);
    for (int trial = 0; trial < 15; ++trial) {
        int m = 3 + rng.next_int(8);
        Profile p = traversal_profile(random_tree(m, rng.next_u64()),
                                      1 + rng.next_int(4), rng.next_u64());
        SolveReport rep = branch_and_bound({p, Objective::MinEdges, {}, {}});
        REQUIRE(rep.proven_optimal);
        CHECK(rep.objective_value == m - 1);
        CHECK(rep.node_count == 1);  // no branching beyond the root
    }
}

TEST_CASE("brute force on the fixtures") {
    SolveReport bf = brute_force(pseudotree5_profile(), Objective::MinEdges);
    CHECK(bf.objective_value == 5);
    CHECK(bf.witness.edges ==
          std::vector<Edge>{{1, 2}, {1, 3}, {2, 5}, {3, 4}, {3, 5}});

    CHECK(brute_force(test::single_voter({1, 2, 3}), Objective::MinEdges).objective_value == 2);
    CHECK_THROWS_AS(brute_force(test::single_voter({1, 2, 3, 4, 5, 6, 7, 8}),
                                Objective::MinEdges),
                    std::invalid_argument);
}

TEST_CASE("branch and bound equals brute force") {
    Rng rng(89);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 2 + rng.next_int(5);
        Profile p = test::random_profile(m, 1 + rng.next_int(4), rng);
        for (Objective obj : {Objective::MinEdges, Objective::MinMaxDegree}) {
            SolveReport bb = branch_and_bound({p, obj, {}, {}});
            SolveReport bf = brute_force(p, obj);
            REQUIRE(bb.proven_optimal);
            CHECK(bb.objective_value == bf.objective_value);
            CHECK(bb.root_bound <= bf.objective_value + 1e-6);
        }
    }
}

TEST_CASE("greedy stays sound on tree-compatible input") {
    Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        int m = 3 + rng.next_int(6);
        Profile p = traversal_profile(random_tree(m, rng.next_u64()),
                                      2 + rng.next_int(3), rng.next_u64());
        Graph g = greedy_incumbent(p);
        CHECK(is_compatible(g, p));
        CHECK(g.edge_count() >= m - 1);
    }
}

TEST_CASE("an expired time limit returns the incumbent unproven") {
    Rng rng(103);
    Profile p = test::random_profile(7, 5, rng);
    SolveReport rep = branch_and_bound({p, Objective::MinEdges, {}, {}}, 0.0);
    CHECK(rep.feasible);
    CHECK_FALSE(rep.proven_optimal);
    CHECK(is_compatible(rep.witness, p));
    SolveReport exact = brute_force(p, Objective::MinEdges);
    CHECK(rep.objective_value >= exact.objective_value);
}

TEST_CASE("objective is bounded below by connectivity and forced edges") {
    Rng rng(97);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 2 + rng.next_int(5);
        Profile p = test::random_profile(m, 1 + rng.next_int(4), rng);
        SolveReport rep = branch_and_bound({p, Objective::MinEdges, {}, {}});
        CHECK(rep.objective_value >=
              std::max(m - 1, static_cast<int>(necessary_edges(p).size())));
    }
}

TEST_CASE("export of the two-voter model") {
    std::string text = export_model({two_voter_profile(), Objective::MinEdges, {}, {}});
    CHECK(text ==
          "Minimize\n"
          " obj: x_1_2 + x_1_3 + x_1_4 + x_2_3 + x_2_4 + x_3_4\n"
          "Subject To\n"
          " r1_2: x_1_4 >= 1\n"
          " r1_3: x_1_2 + x_2_4 >= 1\n"
          " r1_4: x_1_3 + x_3_4 + x_2_3 >= 1\n"
          " r2_2: x_3_4 >= 1\n"
          " r2_3: x_2_3 + x_2_4 >= 1\n"
          " r2_4: x_1_3 + x_1_4 + x_1_2 >= 1\n"
          "Bounds\n"
          " 0 <= x_1_2 <= 1\n"
          " 0 <= x_1_3 <= 1\n"
          " 0 <= x_1_4 <= 1\n"
          " 0 <= x_2_3 <= 1\n"
          " 0 <= x_2_4 <= 1\n"
          " 0 <= x_3_4 <= 1\n"
          "Binary\n"
          " x_1_2\n"
          " x_1_3\n"
          " x_1_4\n"
          " x_2_3\n"
          " x_2_4\n"
          " x_3_4\n"
          "End\n");
}

TEST_CASE("degree export carries the auxiliary variable") {
    std::string text = export_model({test::single_voter({1, 2, 3}), Objective::MinMaxDegree, {}, {}});
    CHECK(text.find("obj: z") != std::string::npos);
    CHECK(text.find(" - z <= 0") != std::string::npos);
    CHECK(text.find("General\n z") != std::string::npos);

    // structural row count: n*(m-1) traversal rows plus m degree rows
    std::istringstream in(text);
    std::string line;
    int rows = 0;
    bool in_rows = false;
    while (std::getline(in, line)) {
        if (line == "Subject To") in_rows = true;
        else if (line == "Bounds") in_rows = false;
        else if (in_rows) ++rows;
    }
    CHECK(rows == 1 * 2 + 3);
}

TEST_CASE("export is deterministic") {
    IlpInstance inst{pseudotree5_profile(), Objective::MinEdges, {{1, 2}}, {{4, 5}}};
    std::string a = export_model(inst);
    std::string b = export_model(inst);
    CHECK(a == b);
    CHECK(a.find(" x_1_2 = 1") != std::string::npos);
    CHECK(a.find(" x_4_5 = 0") != std::string::npos);
    CHECK_THROWS_AS(export_model(inst, "mps"), std::invalid_argument);
}

TEST_SUITE_END();
