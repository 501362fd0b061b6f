#pragma once

#include <string>
#include <vector>

#include "spg/profile.hpp"

namespace spg {

enum class Objective { MinEdges, MinMaxDegree };

struct IlpInstance {
    Profile profile;
    Objective objective = Objective::MinEdges;
    std::vector<Edge> fixed_one;   // edges forced into the graph
    std::vector<Edge> fixed_zero;  // edges forced out
};

struct SolveReport {
    bool feasible = true;
    int objective_value = 0;
    Graph witness;
    long node_count = 0;      // LP relaxations solved (root included)
    double root_bound = 0.0;  // LP value at the root
    double wall_seconds = 0.0;
    bool proven_optimal = false;
};

// Upper bound for branch and bound: starts from the necessary edges, then
// repeatedly adds the edge satisfying the most still-unsatisfied traversal
// constraints (ties to the lexicographically lowest pair).
Graph greedy_incumbent(const Profile& p);

// Exact minimisation by LP-based branch and bound: necessary edges are fixed
// to 1, bounds come from the float simplex rounded up, branching takes the
// most fractional variable and dives on the 1-branch first.
SolveReport branch_and_bound(const IlpInstance& inst, double time_limit_s = 60.0);

// Oracle: enumerates edge subsets (guarded to m <= 7) in deterministic order
// and reports the true optimum for either objective.
SolveReport brute_force(const Profile& p, Objective objective);

// Emits the instance in LP text format: objective, SUBJECT TO rows in
// voter-major position-minor order, BOUNDS (with fixed variables pinned),
// BINARY section. Variables are named x_k_l with k < l.
std::string export_model(const IlpInstance& inst, const std::string& format = "lp");

}  // namespace spg
