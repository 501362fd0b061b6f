#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "spg/generators.hpp"
#include "spg/lp.hpp"
#include "spg/rng.hpp"
#include "spg/solver.hpp"

using namespace spg;
using test::half_integral_profile;
using test::pseudotree5_profile;
using test::star_profile;
using test::two_voter_profile;

namespace {

// remaining candidates at each elimination step, walking the certificate
std::vector<std::set<int>> remaining_sets(const Profile& p,
                                          const EliminationCertificate& cert) {
    std::set<int> remaining;
    for (int c = 1; c <= p.m; ++c) remaining.insert(c);
    std::vector<std::set<int>> out;
    for (const auto& step : cert.steps) {
        out.push_back(remaining);
        remaining.erase(step.removed);
    }
    return out;
}

void check_properties(const Profile& p, const LpModel& model,
                      const LpSolution<mpq_class>& sol,
                      const EliminationCertificate& cert) {
    // every traversal row is tight at a value-(m-1) optimum
    size_t traversal_rows = static_cast<size_t>(p.distinct_count()) *
                            static_cast<size_t>(p.m - 1);
    for (size_t r = 0; r < traversal_rows; ++r) {
        mpq_class sum = 0;
        for (const auto& [v, c] : model.rows[r].terms)
            sum += mpq_class(c) * sol.values[static_cast<size_t>(v)];
        CHECK(sum == 1);
    }
    // support: each removed candidate draws weight 1 from its attachment set
    // and nothing from the other remaining candidates
    auto remaining = remaining_sets(p, cert);
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& step = cert.steps[i];
        std::set<int> attach(step.attach_set.begin(), step.attach_set.end());
        mpq_class in_attach = 0;
        for (int j : step.attach_set)
            in_attach += sol.values[static_cast<size_t>(model.var_of(j, step.removed))];
        CHECK(in_attach == 1);
        for (int l : remaining[i]) {
            if (l == step.removed || attach.count(l)) continue;
            CHECK(sol.values[static_cast<size_t>(model.var_of(l, step.removed))] == 0);
        }
    }
}

}  // namespace

TEST_SUITE_BEGIN("lp");

TEST_CASE("model shape for the two-voter profile") {
    LpModel model = build_lp_sp(two_voter_profile());
    CHECK(model.num_vars == 6);
    CHECK(model.rows.size() == 6);
    // first row: the top pair of voter 1 alone
    REQUIRE(model.rows[0].terms.size() == 1);
    CHECK(model.rows[0].terms[0].first == model.var_of(1, 4));
    CHECK(model.rows[0].sense == RowSense::Ge);
    CHECK(model.rows[0].rhs == 1);
}

TEST_CASE("two candidates one voter") {
    LpModel model = build_lp_sp(test::single_voter({1, 2}));
    CHECK(model.num_vars == 1);
    REQUIRE(model.rows.size() == 1);
    CHECK(model.rows[0].terms.size() == 1);
}

TEST_CASE("duplicate rankings collapse to one row set") {
    Profile p = Profile::from_orders(3, {{1, 2, 3}, {1, 2, 3}, {3, 2, 1}});
    CHECK(p.distinct_count() == 2);
    CHECK(build_lp_sp(p).rows.size() == 4);
}

TEST_CASE("row for position k holds exactly k-1 variables") {
    Rng rng(149);
    Profile p = test::random_profile(6, 3, rng);
    LpModel model = build_lp_sp(p);
    CHECK(model.num_vars == 15);
    size_t idx = 0;
    for (int voter = 0; voter < p.distinct_count(); ++voter)
        for (int k = 2; k <= p.m; ++k, ++idx)
            CHECK(model.rows[idx].terms.size() == static_cast<size_t>(k - 1));
}

TEST_CASE("lp-sp2 adds one degree row per candidate") {
    LpModel model = build_lp_sp2(test::single_voter({1, 2, 3}));
    CHECK(model.rows.size() == 2 + 3);
    const auto& deg = model.rows.back();
    CHECK(deg.sense == RowSense::Le);
    CHECK(deg.rhs == 2);
}

TEST_CASE("half-integral vertex of the relaxation") {
    LpModel model = build_lp_sp(half_integral_profile());
    auto sol = simplex_solve_exact(model);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.objective == mpq_class(9, 2));
    mpq_class half(1, 2);
    CHECK(sol.values[static_cast<size_t>(model.var_of(1, 2))] == 1);
    CHECK(sol.values[static_cast<size_t>(model.var_of(1, 3))] == 1);
    CHECK(sol.values[static_cast<size_t>(model.var_of(2, 3))] == 1);
    CHECK(sol.values[static_cast<size_t>(model.var_of(1, 4))] == half);
    CHECK(sol.values[static_cast<size_t>(model.var_of(2, 4))] == half);
    CHECK(sol.values[static_cast<size_t>(model.var_of(3, 4))] == half);
}

TEST_CASE("fractional degree relaxation of a single voter") {
    LpModel model = build_min_degree_lp(test::single_voter({1, 2, 3}));
    auto sol = simplex_solve_exact(model);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.objective == mpq_class(3, 2));
}

TEST_CASE("tree-compatible profiles give integral vertices of value m-1") {
    Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 2 + rng.next_int(9);
        Graph tree = random_tree(m, rng.next_u64());
        Profile p = traversal_profile(tree, 2 + rng.next_int(3), rng.next_u64());
        LpModel model = build_lp_sp(p);
        auto sol = simplex_solve_exact(model);
        REQUIRE(sol.status == SolveStatus::Optimal);
        CHECK(sol.objective == mpq_class(m - 1));
        for (int v = 0; v < model.num_vars; ++v) {
            const auto& x = sol.values[static_cast<size_t>(v)];
            CHECK((x == 0 || x == 1));
        }
        auto cert = recognize_tree(p);
        REQUIRE(cert.compatible());
        check_properties(p, model, sol, *cert.certificate);
    }
}

TEST_CASE("vertex solutions have few fractional components") {
    Rng rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 2 + rng.next_int(7);
        Profile p = test::random_profile(m, 1 + rng.next_int(4), rng);
        LpModel model = build_lp_sp(p);
        auto sol = simplex_solve_exact(model);
        REQUIRE(sol.status == SolveStatus::Optimal);
        int interior = 0;
        for (int v = 0; v < model.num_vars; ++v) {
            const auto& x = sol.values[static_cast<size_t>(v)];
            if (x > 0 && x < 1) ++interior;
        }
        CHECK(interior <= static_cast<int>(model.rows.size()));
    }
}

TEST_CASE("degree rows can make the path relaxation infeasible") {
    // three forced edges at one candidate exceed the degree cap
    Profile p = test::forced_star_profile();
    auto sol = simplex_solve_exact(build_lp_sp2(p));
    CHECK(sol.status == SolveStatus::Infeasible);
    auto res = lp_path_recognize(p);
    CHECK_FALSE(res.compatible());
    CHECK(lp_tree_recognize(p).compatible());
}

TEST_CASE("single candidate profiles are trivially compatible") {
    Profile p = test::single_voter({1});
    CHECK(lp_tree_recognize(p).compatible());
    CHECK(lp_path_recognize(p).compatible());
}

TEST_CASE("float and exact objectives agree") {
    Rng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 2 + rng.next_int(14);
        Profile p = test::random_profile(m, 1 + rng.next_int(4), rng);
        LpModel model = build_lp_sp(p);
        auto exact = simplex_solve_exact(model);
        auto approx = simplex_solve(model);
        REQUIRE(exact.status == SolveStatus::Optimal);
        REQUIRE(approx.status == SolveStatus::Optimal);
        CHECK(std::abs(approx.objective - exact.objective.get_d()) < 1e-6);
    }
}

TEST_CASE("repeated solves are bitwise identical") {
    Rng rng(151);
    Profile p = test::random_profile(7, 4, rng);
    LpModel model = build_lp_sp(p);
    auto a = simplex_solve_exact(model);
    auto b = simplex_solve_exact(model);
    CHECK(a.values == b.values);
    CHECK(a.basis == b.basis);
    auto fa = simplex_solve(model);
    auto fb = simplex_solve(model);
    CHECK(fa.values == fb.values);
}

TEST_CASE("weak duality against the integer optimum") {
    Rng rng(59);
    for (int trial = 0; trial < 15; ++trial) {
        int m = 3 + rng.next_int(3);
        Profile p = test::random_profile(m, 1 + rng.next_int(3), rng);
        auto lp = simplex_solve_exact(build_lp_sp(p));
        auto ilp = branch_and_bound({p, Objective::MinEdges, {}, {}});
        REQUIRE(ilp.proven_optimal);
        CHECK(lp.objective <= mpq_class(ilp.objective_value));
    }
}

TEST_CASE("lp tree recognition on the fixtures") {
    auto tree = lp_tree_recognize(star_profile());
    REQUIRE(tree.compatible());
    CHECK(tree.witness->is_tree());

    CHECK_FALSE(lp_tree_recognize(pseudotree5_profile()).compatible());
    CHECK_FALSE(lp_tree_recognize(half_integral_profile()).compatible());
}

TEST_CASE("lp path recognition") {
    auto ident = lp_path_recognize(test::single_voter({1, 2, 3, 4}));
    REQUIRE(ident.compatible());
    CHECK(ident.witness->is_path_graph());

    // path-compatible random profiles stay integral with value m-1
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 2 + rng.next_int(7);
        Profile p = traversal_profile(Graph::path(m), 1 + rng.next_int(3), rng.next_u64());
        LpModel model = build_lp_sp2(p);
        auto sol = simplex_solve_exact(model);
        REQUIRE(sol.status == SolveStatus::Optimal);
        CHECK(sol.objective == mpq_class(m - 1));
        auto res = lp_path_recognize(p);
        CHECK(res.compatible());
    }
}

TEST_CASE("lp recognisers agree with the combinatorial ones on mixed input") {
    Rng rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 2 + rng.next_int(7);
        Profile p = rng.next_double() < 0.4
                        ? traversal_profile(random_tree(m, rng.next_u64()),
                                            1 + rng.next_int(3), rng.next_u64())
                        : test::random_profile(m, 1 + rng.next_int(4), rng);
        // the internal cross-checks throw on any disagreement
        CHECK_NOTHROW(lp_tree_recognize(p));
        CHECK_NOTHROW(lp_path_recognize(p));
    }
}

TEST_SUITE_END();
