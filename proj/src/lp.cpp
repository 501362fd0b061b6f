#include "spg/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spg {

int LpModel::var_of(int k, int l) const {
    if (k > l) std::swap(k, l);
    if (k < 1 || l > m || k == l) throw std::invalid_argument("bad pair");
    return (k - 1) * m - k * (k - 1) / 2 + (l - k - 1);
}

namespace {

LpModel base_model(const Profile& p) {
    LpModel model;
    model.m = p.m;
    model.num_vars = LpModel::pair_count(p.m);
    model.objective.assign(static_cast<size_t>(model.num_vars), 1);
    model.bounds.assign(static_cast<size_t>(model.num_vars), VarBound{0, 1});
    for (int k = 1; k <= p.m; ++k)
        for (int l = k + 1; l <= p.m; ++l) model.var_pairs.push_back({k, l});
    for (const auto& [r, mult] : p.entries) {
        for (int k = 2; k <= p.m; ++k) {
            LpRow row{{}, RowSense::Ge, 1};
            for (int j = 1; j < k; ++j)
                row.terms.push_back({model.var_of(r.at(j - 1), r.at(k - 1)), 1});
            model.rows.push_back(std::move(row));
        }
    }
    return model;
}

void add_degree_rows(LpModel& model, int bound_or_z) {
    for (int k = 1; k <= model.m; ++k) {
        LpRow row{{}, RowSense::Le, 0};
        for (int l = 1; l <= model.m; ++l)
            if (l != k) row.terms.push_back({model.var_of(k, l), 1});
        if (model.z_var >= 0) {
            row.terms.push_back({model.z_var, -1});
            row.rhs = 0;
        } else {
            row.rhs = bound_or_z;
        }
        model.rows.push_back(std::move(row));
    }
}

}  // namespace

LpModel build_lp_sp(const Profile& p) { return base_model(p); }

LpModel build_lp_sp2(const Profile& p) {
    LpModel model = base_model(p);
    add_degree_rows(model, 2);
    return model;
}

LpModel build_min_degree_lp(const Profile& p) {
    LpModel model = base_model(p);
    model.z_var = model.num_vars++;
    model.objective.assign(static_cast<size_t>(model.num_vars), 0);
    model.objective[static_cast<size_t>(model.z_var)] = 1;
    model.bounds.push_back(VarBound{0, std::max(0, p.m - 1)});
    add_degree_rows(model, 0);
    return model;
}

namespace {

template <class T>
struct Arith;

template <>
struct Arith<double> {
    static constexpr double eps = 1e-9;
    static bool neg(double v) { return v < -eps; }
    static bool pos(double v) { return v > eps; }
    static double abs(double v) { return std::fabs(v); }
};

template <>
struct Arith<mpq_class> {
    static bool neg(const mpq_class& v) { return sgn(v) < 0; }
    static bool pos(const mpq_class& v) { return sgn(v) > 0; }
    static mpq_class abs(const mpq_class& v) { return ::abs(v); }
};

// Bounded-variable primal simplex on a dense tableau. Columns: structural
// variables, one slack per row, artificials appended for rows violated by
// the initial point (all structurals at their upper bound, which makes every
// traversal row feasible without artificials).
template <class T>
class Simplex {
  public:
    LpSolution<T> solve(const LpModel& model) {
        build(model);
        if (!phase1_feasible()) {
            LpSolution<T> out;
            out.status = SolveStatus::Infeasible;
            return out;
        }
        // lock artificials at zero and switch to the real objective
        for (int j = first_artificial_; j < C_; ++j) {
            lower_[static_cast<size_t>(j)] = 0;
            upper_[static_cast<size_t>(j)] = 0;
            has_upper_[static_cast<size_t>(j)] = 1;
        }
        cost_.assign(static_cast<size_t>(C_), T(0));
        for (int j = 0; j < nv_; ++j)
            cost_[static_cast<size_t>(j)] = T(model.objective[static_cast<size_t>(j)]);
        if (!run()) {
            LpSolution<T> out;
            out.status = SolveStatus::Unbounded;
            return out;
        }
        LpSolution<T> out;
        out.status = SolveStatus::Optimal;
        out.values.assign(static_cast<size_t>(nv_), T(0));
        for (int j = 0; j < nv_; ++j) out.values[static_cast<size_t>(j)] = value_of(j);
        for (int r = 0; r < R_; ++r) out.basis.push_back(basis_[static_cast<size_t>(r)]);
        out.objective = T(0);
        for (int j = 0; j < nv_; ++j)
            out.objective += T(model.objective[static_cast<size_t>(j)]) *
                             out.values[static_cast<size_t>(j)];
        return out;
    }

  private:
    int R_ = 0, C_ = 0, nv_ = 0, first_artificial_ = 0;
    std::vector<std::vector<T>> tab_;
    std::vector<T> xB_;
    std::vector<int> basis_;
    std::vector<T> lower_, upper_;
    std::vector<char> has_upper_;
    std::vector<char> at_upper_, is_basic_;
    std::vector<T> cost_, dj_;
    long iter_ = 0, bland_after_ = 0;

    T value_of(int j) const {
        if (is_basic_[static_cast<size_t>(j)]) {
            for (int r = 0; r < R_; ++r)
                if (basis_[static_cast<size_t>(r)] == j) return xB_[static_cast<size_t>(r)];
        }
        return at_upper_[static_cast<size_t>(j)] ? upper_[static_cast<size_t>(j)]
                                                 : lower_[static_cast<size_t>(j)];
    }

    void build(const LpModel& model) {
        nv_ = model.num_vars;
        R_ = static_cast<int>(model.rows.size());
        int slack_base = nv_;
        first_artificial_ = nv_ + R_;

        // decide which rows need an artificial before sizing the tableau
        std::vector<T> lhs(static_cast<size_t>(R_), T(0));
        std::vector<char> needs_art(static_cast<size_t>(R_), 0);
        auto init_value = [&](int j) {
            const auto& b = model.bounds[static_cast<size_t>(j)];
            return T(b.upper);
        };
        int n_art = 0;
        for (int r = 0; r < R_; ++r) {
            const auto& row = model.rows[static_cast<size_t>(r)];
            for (const auto& [v, c] : row.terms) lhs[static_cast<size_t>(r)] += T(c) * init_value(v);
            T resid = (row.sense == RowSense::Ge)
                          ? lhs[static_cast<size_t>(r)] - T(row.rhs)
                          : T(row.rhs) - lhs[static_cast<size_t>(r)];
            if (Arith<T>::neg(resid)) {
                needs_art[static_cast<size_t>(r)] = 1;
                ++n_art;
            }
        }
        C_ = first_artificial_ + n_art;

        tab_.assign(static_cast<size_t>(R_), std::vector<T>(static_cast<size_t>(C_), T(0)));
        lower_.assign(static_cast<size_t>(C_), T(0));
        upper_.assign(static_cast<size_t>(C_), T(0));
        has_upper_.assign(static_cast<size_t>(C_), 0);
        at_upper_.assign(static_cast<size_t>(C_), 0);
        is_basic_.assign(static_cast<size_t>(C_), 0);
        xB_.assign(static_cast<size_t>(R_), T(0));
        basis_.assign(static_cast<size_t>(R_), -1);
        for (int j = 0; j < nv_; ++j) {
            const auto& b = model.bounds[static_cast<size_t>(j)];
            lower_[static_cast<size_t>(j)] = T(b.lower);
            upper_[static_cast<size_t>(j)] = T(b.upper);
            has_upper_[static_cast<size_t>(j)] = 1;
            at_upper_[static_cast<size_t>(j)] = 1;  // start at upper bound
        }

        int art = first_artificial_;
        for (int r = 0; r < R_; ++r) {
            const auto& row = model.rows[static_cast<size_t>(r)];
            auto& trow = tab_[static_cast<size_t>(r)];
            for (const auto& [v, c] : row.terms) trow[static_cast<size_t>(v)] += T(c);
            int slack = slack_base + r;
            T slack_coef = (row.sense == RowSense::Ge) ? T(-1) : T(1);
            trow[static_cast<size_t>(slack)] = slack_coef;
            // slacks and surpluses live in [0, inf)
            T resid = (row.sense == RowSense::Ge) ? lhs[static_cast<size_t>(r)] - T(row.rhs)
                                                  : T(row.rhs) - lhs[static_cast<size_t>(r)];
            int basic;
            T basic_coef;
            if (!needs_art[static_cast<size_t>(r)]) {
                basic = slack;
                basic_coef = slack_coef;
                xB_[static_cast<size_t>(r)] = resid;
            } else {
                basic = art++;
                basic_coef = (row.sense == RowSense::Ge) ? T(1) : T(-1);
                trow[static_cast<size_t>(basic)] = basic_coef;
                xB_[static_cast<size_t>(r)] = -resid;
            }
            if (basic_coef == T(-1))
                for (auto& v : trow) v = -v;
            basis_[static_cast<size_t>(r)] = basic;
            is_basic_[static_cast<size_t>(basic)] = 1;
        }
        bland_after_ = 5L * (R_ + C_) + 50;
    }

    void compute_reduced_costs() {
        dj_.assign(static_cast<size_t>(C_), T(0));
        std::vector<T> y(static_cast<size_t>(R_), T(0));
        for (int r = 0; r < R_; ++r) y[static_cast<size_t>(r)] = cost_[static_cast<size_t>(basis_[static_cast<size_t>(r)])];
        for (int j = 0; j < C_; ++j) {
            if (is_basic_[static_cast<size_t>(j)]) continue;
            T d = cost_[static_cast<size_t>(j)];
            for (int r = 0; r < R_; ++r)
                if (y[static_cast<size_t>(r)] != T(0))
                    d -= y[static_cast<size_t>(r)] * tab_[static_cast<size_t>(r)][static_cast<size_t>(j)];
            dj_[static_cast<size_t>(j)] = d;
        }
    }

    bool phase1_feasible() {
        cost_.assign(static_cast<size_t>(C_), T(0));
        for (int j = first_artificial_; j < C_; ++j) {
            cost_[static_cast<size_t>(j)] = T(1);
            has_upper_[static_cast<size_t>(j)] = 0;  // [0, inf) during phase 1
        }
        if (!run()) return false;  // phase-1 objective is bounded below by 0
        T infeas(0);
        for (int r = 0; r < R_; ++r)
            if (basis_[static_cast<size_t>(r)] >= first_artificial_)
                infeas += xB_[static_cast<size_t>(r)];
        return !Arith<T>::pos(infeas);
    }

    // one simplex phase over the current cost vector; false on unbounded
    bool run() {
        compute_reduced_costs();
        for (;; ++iter_) {
            bool bland = iter_ > bland_after_;
            int enter = -1;
            T best(0);
            for (int j = 0; j < C_; ++j) {
                if (is_basic_[static_cast<size_t>(j)]) continue;
                if (lower_[static_cast<size_t>(j)] == upper_[static_cast<size_t>(j)] &&
                    has_upper_[static_cast<size_t>(j)])
                    continue;  // fixed
                const T& d = dj_[static_cast<size_t>(j)];
                bool improving = at_upper_[static_cast<size_t>(j)] ? Arith<T>::pos(d) : Arith<T>::neg(d);
                if (!improving) continue;
                if (bland) {
                    enter = j;
                    break;
                }
                T mag = Arith<T>::abs(d);
                if (enter < 0 || mag > best) {
                    enter = j;
                    best = mag;
                }
            }
            if (enter < 0) return true;  // optimal

            int sigma = at_upper_[static_cast<size_t>(enter)] ? -1 : 1;
            // largest admissible step for the entering variable
            bool delta_unbounded = !has_upper_[static_cast<size_t>(enter)];
            T delta(0);
            if (!delta_unbounded)
                delta = upper_[static_cast<size_t>(enter)] - lower_[static_cast<size_t>(enter)];
            int leave_row = -1;
            int leave_to_upper = 0;
            for (int r = 0; r < R_; ++r) {
                T rate = T(sigma) * tab_[static_cast<size_t>(r)][static_cast<size_t>(enter)];
                int b = basis_[static_cast<size_t>(r)];
                T limit;
                int to_upper;
                if (Arith<T>::pos(rate)) {
                    limit = (xB_[static_cast<size_t>(r)] - lower_[static_cast<size_t>(b)]) / rate;
                    to_upper = 0;
                } else if (Arith<T>::neg(rate) && has_upper_[static_cast<size_t>(b)]) {
                    limit = (upper_[static_cast<size_t>(b)] - xB_[static_cast<size_t>(r)]) / (-rate);
                    to_upper = 1;
                } else {
                    continue;
                }
                if (limit < T(0)) limit = T(0);
                bool better;
                if (delta_unbounded) {
                    better = true;
                } else if (limit < delta) {
                    better = true;
                } else if (limit == delta && leave_row >= 0) {
                    // deterministic tie-breaking; Bland uses lowest leaving index
                    if (bland) {
                        better = basis_[static_cast<size_t>(r)] <
                                 basis_[static_cast<size_t>(leave_row)];
                    } else {
                        T cur = Arith<T>::abs(
                            tab_[static_cast<size_t>(leave_row)][static_cast<size_t>(enter)]);
                        T cand = Arith<T>::abs(
                            tab_[static_cast<size_t>(r)][static_cast<size_t>(enter)]);
                        better = cand > cur || (cand == cur &&
                                                basis_[static_cast<size_t>(r)] <
                                                    basis_[static_cast<size_t>(leave_row)]);
                    }
                } else {
                    better = false;
                }
                if (better) {
                    delta = limit;
                    delta_unbounded = false;
                    leave_row = r;
                    leave_to_upper = to_upper;
                }
            }
            if (delta_unbounded) return false;  // unbounded direction

            if (leave_row < 0) {
                // entering variable swings to its other bound
                for (int r = 0; r < R_; ++r)
                    xB_[static_cast<size_t>(r)] -=
                        T(sigma) * delta * tab_[static_cast<size_t>(r)][static_cast<size_t>(enter)];
                at_upper_[static_cast<size_t>(enter)] ^= 1;
                continue;
            }
            pivot(leave_row, enter, sigma, delta, leave_to_upper);
        }
    }

    void pivot(int r, int enter, int sigma, const T& delta, int leave_to_upper) {
        T enter_value = (at_upper_[static_cast<size_t>(enter)] ? upper_[static_cast<size_t>(enter)]
                                                               : lower_[static_cast<size_t>(enter)]) +
                        T(sigma) * delta;
        for (int i = 0; i < R_; ++i)
            if (i != r)
                xB_[static_cast<size_t>(i)] -=
                    T(sigma) * delta * tab_[static_cast<size_t>(i)][static_cast<size_t>(enter)];

        int leaving = basis_[static_cast<size_t>(r)];
        is_basic_[static_cast<size_t>(leaving)] = 0;
        at_upper_[static_cast<size_t>(leaving)] = static_cast<char>(leave_to_upper);
        basis_[static_cast<size_t>(r)] = enter;
        is_basic_[static_cast<size_t>(enter)] = 1;
        xB_[static_cast<size_t>(r)] = enter_value;

        auto& prow = tab_[static_cast<size_t>(r)];
        T piv = prow[static_cast<size_t>(enter)];
        for (auto& v : prow) v /= piv;
        for (int i = 0; i < R_; ++i) {
            if (i == r) continue;
            auto& row = tab_[static_cast<size_t>(i)];
            T f = row[static_cast<size_t>(enter)];
            if (f == T(0)) continue;
            for (int j = 0; j < C_; ++j) row[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
            row[static_cast<size_t>(enter)] = T(0);
        }
        T f = dj_[static_cast<size_t>(enter)];
        if (f != T(0)) {
            for (int j = 0; j < C_; ++j) dj_[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
            dj_[static_cast<size_t>(enter)] = T(0);
        }
    }
};

}  // namespace

LpSolution<double> simplex_solve(const LpModel& model) {
    return Simplex<double>().solve(model);
}

LpSolution<mpq_class> simplex_solve_exact(const LpModel& model) {
    return Simplex<mpq_class>().solve(model);
}

namespace {

// exact integrality + target value test on the edge variables
bool integral_with_value(const LpSolution<mpq_class>& sol, int num_edge_vars, int target) {
    if (sol.status != SolveStatus::Optimal) return false;
    if (sol.objective != mpq_class(target)) return false;
    for (int j = 0; j < num_edge_vars; ++j) {
        const auto& v = sol.values[static_cast<size_t>(j)];
        if (v != 0 && v != 1) return false;
    }
    return true;
}

Graph graph_from_solution(const LpModel& model, const LpSolution<mpq_class>& sol) {
    std::vector<Edge> edges;
    for (int j = 0; j < static_cast<int>(model.var_pairs.size()); ++j)
        if (sol.values[static_cast<size_t>(j)] == 1) edges.push_back(model.pair_of(j));
    return Graph(model.m, std::move(edges));
}

}  // namespace

RecognitionResult lp_tree_recognize(const Profile& p) {
    if (p.m == 1)
        return {Verdict::Compatible, Graph(1), EliminationCertificate{{}, {1}}};
    LpModel model = build_lp_sp(p);
    auto sol = simplex_solve_exact(model);
    ensure_consistent(sol.status == SolveStatus::Optimal, "LP-SP must be solvable");
    bool lp_compatible = integral_with_value(sol, model.num_vars, p.m - 1);

    auto comb = recognize_tree(p);
    ensure_consistent(lp_compatible == comb.compatible(),
                      "LP-SP tree route disagrees with leaf elimination");
    if (!lp_compatible) return comb;

    Graph witness = graph_from_solution(model, sol);
    ensure_consistent(witness.is_tree() && is_compatible(witness, p),
                      "integral LP-SP vertex is not a compatible tree");
    return {Verdict::Compatible, std::move(witness), comb.certificate};
}

RecognitionResult lp_path_recognize(const Profile& p) {
    if (p.m == 1)
        return {Verdict::Compatible, Graph(1), EliminationCertificate{{}, {1}}};
    LpModel model = build_lp_sp2(p);
    auto sol = simplex_solve_exact(model);
    bool lp_compatible = sol.status == SolveStatus::Optimal &&
                         integral_with_value(sol, model.num_vars, p.m - 1);

    auto comb = recognize_path(p);
    ensure_consistent(lp_compatible == comb.compatible(),
                      "LP-SP2 path route disagrees with end-pair elimination");
    if (!lp_compatible) return comb;

    Graph witness = graph_from_solution(model, sol);
    ensure_consistent(witness.is_path_graph() && is_compatible(witness, p),
                      "integral LP-SP2 vertex is not a compatible path");
    return {Verdict::Compatible, std::move(witness), comb.certificate};
}

}  // namespace spg
