#pragma once

#include <gmpxx.h>

#include <vector>

#include "spg/profile.hpp"
#include "spg/recognition.hpp"

namespace spg {

enum class RowSense { Ge, Le };

struct LpRow {
    std::vector<std::pair<int, int>> terms;  // (variable, coefficient)
    RowSense sense;
    int rhs;
};

struct VarBound {
    int lower = 0;
    int upper = 1;
};

// Sparse LP over one variable per candidate pair {k,l}, plus an optional
// auxiliary variable z for the degree objective. Edge variables come first,
// indexed by var_of.
struct LpModel {
    int m = 0;
    int num_vars = 0;
    int z_var = -1;
    std::vector<int> objective;  // per variable
    std::vector<LpRow> rows;
    std::vector<VarBound> bounds;
    std::vector<Edge> var_pairs;  // pair for each edge variable

    static int pair_count(int m) { return m * (m - 1) / 2; }
    int var_of(int k, int l) const;
    Edge pair_of(int var) const { return var_pairs.at(static_cast<size_t>(var)); }
};

// min sum of edge variables, one >=1 row per (distinct ranking, position k).
LpModel build_lp_sp(const Profile& p);

// LP-SP plus a degree <= 2 row per candidate.
LpModel build_lp_sp2(const Profile& p);

// min z with per-candidate rows sum_l x_{k,l} - z <= 0, traversal rows kept.
LpModel build_min_degree_lp(const Profile& p);

enum class SolveStatus { Optimal, Infeasible, Unbounded };

template <class T>
struct LpSolution {
    SolveStatus status = SolveStatus::Optimal;
    T objective{};
    std::vector<T> values;   // structural variables only
    std::vector<int> basis;  // basic column per row (structural then slacks)
};

// Two-phase primal simplex on the bounded-variable tableau. Returns a basic
// (vertex) solution; Bland's rule engages after a largest-coefficient burn-in
// so the solve always terminates.
LpSolution<double> simplex_solve(const LpModel& model);
LpSolution<mpq_class> simplex_solve_exact(const LpModel& model);

// Solves LP-SP exactly; compatible iff the vertex is integral with value
// m-1. Cross-checked against recognize_tree, disagreement is fatal.
RecognitionResult lp_tree_recognize(const Profile& p);

// Same via LP-SP2 and recognize_path.
RecognitionResult lp_path_recognize(const Profile& p);

}  // namespace spg
