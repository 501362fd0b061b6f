#include "spg/solver.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <chrono>
#include <cmath>
#include <sstream>

#include "spg/lp.hpp"

namespace spg {

namespace {

constexpr size_t kMaxVars = 1024;  // supports m up to 45
using VarMask = std::bitset<kMaxVars>;

struct Constraint {
    std::vector<int> vars;  // edge variables that can satisfy it
    VarMask mask;
};

// traversal constraints of the distinct rankings, one per (voter, position)
std::vector<Constraint> traversal_constraints(const Profile& p, const LpModel& model) {
    std::vector<Constraint> cons;
    for (const auto& [r, mult] : p.entries) {
        for (int k = 2; k <= p.m; ++k) {
            Constraint c;
            for (int j = 1; j < k; ++j) {
                int v = model.var_of(r.at(j - 1), r.at(k - 1));
                c.vars.push_back(v);
                c.mask.set(static_cast<size_t>(v));
            }
            cons.push_back(std::move(c));
        }
    }
    return cons;
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

int objective_of(const Graph& g, Objective obj) {
    return obj == Objective::MinEdges ? g.edge_count() : g.max_degree();
}

}  // namespace

Graph greedy_incumbent(const Profile& p) {
    LpModel model = build_lp_sp(p);
    auto cons = traversal_constraints(p, model);

    VarMask chosen;
    for (const Edge& e : necessary_edges(p))
        chosen.set(static_cast<size_t>(model.var_of(e.first, e.second)));

    auto unsatisfied = [&](const Constraint& c) { return (c.mask & chosen).none(); };
    for (;;) {
        std::vector<const Constraint*> open;
        for (const auto& c : cons)
            if (unsatisfied(c)) open.push_back(&c);
        if (open.empty()) break;
        // candidate edges scored by how many open constraints they close
        std::vector<int> score(static_cast<size_t>(model.num_vars), 0);
        for (const auto* c : open)
            for (int v : c->vars) score[static_cast<size_t>(v)]++;
        int best = -1;
        for (int v = 0; v < model.num_vars; ++v)
            if (!chosen.test(static_cast<size_t>(v)) && score[static_cast<size_t>(v)] > 0 &&
                (best < 0 || score[static_cast<size_t>(v)] > score[static_cast<size_t>(best)]))
                best = v;  // ties keep the lowest pair: vars are in pair order
        if (best < 0) break;
        chosen.set(static_cast<size_t>(best));
    }

    std::vector<Edge> edges;
    for (int v = 0; v < model.num_vars; ++v)
        if (chosen.test(static_cast<size_t>(v))) edges.push_back(model.pair_of(v));
    Graph g(p.m, std::move(edges));
    ensure_consistent(is_compatible(g, p), "greedy incumbent is not compatible");
    return g;
}

SolveReport branch_and_bound(const IlpInstance& inst, double time_limit_s) {
    const Profile& p = inst.profile;
    double t0 = now_seconds();
    SolveReport report;
    report.witness = Graph(p.m);
    if (p.m == 1 || p.entries.empty()) {
        report.objective_value = 0;
        report.proven_optimal = true;
        report.root_bound = 0.0;
        report.wall_seconds = now_seconds() - t0;
        return report;
    }

    LpModel model = inst.objective == Objective::MinEdges ? build_lp_sp(p)
                                                          : build_min_degree_lp(p);

    // fixings: necessary edges plus whatever the instance pins
    std::vector<int> lower(static_cast<size_t>(model.num_vars), 0);
    std::vector<int> upper(static_cast<size_t>(model.num_vars), 1);
    if (model.z_var >= 0) upper[static_cast<size_t>(model.z_var)] = std::max(0, p.m - 1);
    for (const Edge& e : necessary_edges(p))
        lower[static_cast<size_t>(model.var_of(e.first, e.second))] = 1;
    for (const Edge& e : inst.fixed_one)
        lower[static_cast<size_t>(model.var_of(e.first, e.second))] = 1;
    for (const Edge& e : inst.fixed_zero)
        upper[static_cast<size_t>(model.var_of(e.first, e.second))] = 0;
    for (int v = 0; v < model.num_vars; ++v)
        if (lower[static_cast<size_t>(v)] > upper[static_cast<size_t>(v)]) {
            report.feasible = false;
            report.wall_seconds = now_seconds() - t0;
            return report;
        }

    // drop rows already satisfied by fixed-to-1 edges, then drop rows whose
    // variable set contains another row's set (implied constraints)
    {
        std::vector<LpRow> kept;
        std::vector<VarMask> masks;
        for (const auto& row : model.rows) {
            if (model.z_var >= 0 &&
                std::any_of(row.terms.begin(), row.terms.end(),
                            [&](const auto& t) { return t.first == model.z_var; })) {
                kept.push_back(row);
                masks.emplace_back();  // degree rows are never dominated away
                continue;
            }
            VarMask mask;
            bool satisfied = false;
            for (const auto& [v, c] : row.terms) {
                mask.set(static_cast<size_t>(v));
                if (lower[static_cast<size_t>(v)] == 1) satisfied = true;
            }
            if (satisfied) continue;
            kept.push_back(row);
            masks.push_back(mask);
        }
        std::vector<char> drop(kept.size(), 0);
        for (size_t i = 0; i < kept.size(); ++i) {
            if (masks[i].none()) continue;
            for (size_t j = 0; j < kept.size(); ++j) {
                if (i == j || drop[j] || masks[j].none()) continue;
                if ((masks[j] & masks[i]) == masks[j] &&
                    (masks[i] != masks[j] || j < i)) {
                    drop[i] = 1;  // row i is a superset of row j
                    break;
                }
            }
        }
        std::vector<LpRow> reduced;
        for (size_t i = 0; i < kept.size(); ++i)
            if (!drop[i]) reduced.push_back(std::move(kept[i]));
        model.rows = std::move(reduced);
    }

    // incumbent from greedy, adjusted for instance fixings
    bool have_incumbent = false;
    int best_value = 0;
    Graph best_witness(p.m);
    if (inst.fixed_zero.empty()) {
        Graph greedy = greedy_incumbent(p);
        std::vector<Edge> edges = greedy.edges;
        for (const Edge& e : inst.fixed_one) edges.push_back(e);
        Graph g(p.m, std::move(edges));
        best_witness = g;
        best_value = objective_of(g, inst.objective);
        have_incumbent = true;
    }

    struct NodeFix {
        int var;
        int value;
    };
    struct Node {
        std::vector<NodeFix> fixes;
    };
    std::vector<Node> stack{Node{}};
    bool timed_out = false;
    bool first_node = true;

    while (!stack.empty()) {
        if (now_seconds() - t0 > time_limit_s) {
            timed_out = true;
            break;
        }
        Node node = std::move(stack.back());
        stack.pop_back();

        for (int v = 0; v < model.num_vars; ++v) {
            model.bounds[static_cast<size_t>(v)] = {lower[static_cast<size_t>(v)],
                                                    upper[static_cast<size_t>(v)]};
        }
        bool contradictory = false;
        for (const auto& f : node.fixes) {
            auto& b = model.bounds[static_cast<size_t>(f.var)];
            b.lower = std::max(b.lower, f.value);
            b.upper = std::min(b.upper, f.value);
            if (b.lower > b.upper) contradictory = true;
        }
        if (contradictory) continue;

        auto sol = simplex_solve(model);
        ++report.node_count;
        if (first_node) {
            report.root_bound = sol.status == SolveStatus::Optimal ? sol.objective : 0.0;
            first_node = false;
        }
        if (sol.status != SolveStatus::Optimal) continue;  // infeasible subtree
        int bound = static_cast<int>(std::llround(std::ceil(sol.objective - 1e-6)));
        if (have_incumbent && bound >= best_value) continue;

        // integral (within tolerance) edge part?
        int frac_var = -1;
        double frac_dist = 1.0;
        int num_edge_vars = static_cast<int>(model.var_pairs.size());
        for (int v = 0; v < num_edge_vars; ++v) {
            double x = sol.values[static_cast<size_t>(v)];
            double d = std::fabs(x - std::round(x));
            if (d > 1e-6) {
                double dist = std::fabs(x - 0.5);
                if (frac_var < 0 || dist < frac_dist - 1e-12) {
                    frac_var = v;
                    frac_dist = dist;
                }
            }
        }
        if (frac_var < 0) {
            std::vector<Edge> edges;
            for (int v = 0; v < num_edge_vars; ++v)
                if (sol.values[static_cast<size_t>(v)] > 0.5)
                    edges.push_back(model.pair_of(v));
            Graph g(p.m, std::move(edges));
            ensure_consistent(is_compatible(g, p),
                              "integral relaxation solution is not compatible");
            int value = objective_of(g, inst.objective);
            if (!have_incumbent || value < best_value) {
                best_value = value;
                best_witness = g;
                have_incumbent = true;
            }
            continue;
        }

        Node zero = node, one = node;
        zero.fixes.push_back({frac_var, 0});
        one.fixes.push_back({frac_var, 1});
        stack.push_back(std::move(zero));
        stack.push_back(std::move(one));  // 1-branch dives first
    }

    report.feasible = have_incumbent;
    if (have_incumbent) {
        report.objective_value = best_value;
        report.witness = best_witness;
    }
    report.proven_optimal = !timed_out && stack.empty() && have_incumbent;
    report.wall_seconds = now_seconds() - t0;
    return report;
}

SolveReport brute_force(const Profile& p, Objective objective) {
    if (p.m > 7) throw std::invalid_argument("brute force is guarded to m <= 7");
    double t0 = now_seconds();
    SolveReport report;
    report.witness = Graph(p.m);
    if (p.m == 1 || p.entries.empty()) {
        report.objective_value = 0;
        report.proven_optimal = true;
        report.wall_seconds = now_seconds() - t0;
        return report;
    }

    int nv = LpModel::pair_count(p.m);
    std::vector<Edge> pairs;
    for (int k = 1; k <= p.m; ++k)
        for (int l = k + 1; l <= p.m; ++l) pairs.push_back({k, l});

    // adjacency bitmask per candidate for fast prefix checks
    auto compatible_mask = [&](unsigned mask) {
        unsigned adj[8] = {0};
        for (int v = 0; v < nv; ++v)
            if (mask & (1u << v)) {
                adj[pairs[static_cast<size_t>(v)].first] |=
                    1u << pairs[static_cast<size_t>(v)].second;
                adj[pairs[static_cast<size_t>(v)].second] |=
                    1u << pairs[static_cast<size_t>(v)].first;
            }
        for (const auto& [r, mult] : p.entries) {
            unsigned prefix = 1u << r.at(0);
            for (int k = 1; k < p.m; ++k) {
                int c = r.at(k);
                if (!(adj[c] & prefix)) return false;
                prefix |= 1u << c;
            }
        }
        return true;
    };
    unsigned necessary = 0;
    for (const Edge& e : necessary_edges(p)) {
        for (int v = 0; v < nv; ++v)
            if (pairs[static_cast<size_t>(v)] == e) necessary |= 1u << v;
    }

    int best = -1;
    unsigned best_mask = 0;
    for (unsigned mask = 0; mask < (1u << nv); ++mask) {
        if ((mask & necessary) != necessary) continue;
        int value;
        if (objective == Objective::MinEdges) {
            value = static_cast<int>(std::popcount(mask));
        } else {
            int deg[8] = {0};
            for (int v = 0; v < nv; ++v)
                if (mask & (1u << v)) {
                    deg[pairs[static_cast<size_t>(v)].first]++;
                    deg[pairs[static_cast<size_t>(v)].second]++;
                }
            value = *std::max_element(deg + 1, deg + p.m + 1);
        }
        if (best >= 0 && value >= best) continue;
        if (!compatible_mask(mask)) continue;
        best = value;
        best_mask = mask;
    }
    ensure_consistent(best >= 0, "complete graph must be compatible");

    std::vector<Edge> edges;
    for (int v = 0; v < nv; ++v)
        if (best_mask & (1u << v)) edges.push_back(pairs[static_cast<size_t>(v)]);
    report.witness = Graph(p.m, std::move(edges));
    report.objective_value = best;
    report.proven_optimal = true;
    report.wall_seconds = now_seconds() - t0;
    return report;
}

std::string export_model(const IlpInstance& inst, const std::string& format) {
    if (format != "lp") throw std::invalid_argument("unsupported export format: " + format);
    const Profile& p = inst.profile;
    LpModel model = inst.objective == Objective::MinEdges ? build_lp_sp(p)
                                                          : build_min_degree_lp(p);
    auto var_name = [&](int v) {
        if (v == model.z_var) return std::string("z");
        Edge e = model.pair_of(v);
        return "x_" + std::to_string(e.first) + "_" + std::to_string(e.second);
    };

    std::ostringstream os;
    os << "Minimize\n obj:";
    bool first = true;
    for (int v = 0; v < model.num_vars; ++v) {
        if (model.objective[static_cast<size_t>(v)] == 0) continue;
        os << (first ? " " : " + ") << var_name(v);
        first = false;
    }
    os << "\nSubject To\n";
    size_t traversal_rows = static_cast<size_t>(p.distinct_count()) *
                            static_cast<size_t>(p.m - 1);
    size_t idx = 0;
    for (const auto& row : model.rows) {
        if (idx < traversal_rows) {
            size_t voter = idx / static_cast<size_t>(p.m - 1) + 1;
            size_t pos = idx % static_cast<size_t>(p.m - 1) + 2;
            os << " r" << voter << "_" << pos << ":";
        } else {
            os << " deg_" << (idx - traversal_rows + 1) << ":";
        }
        ++idx;
        bool f = true;
        for (const auto& [v, c] : row.terms) {
            if (c == 1)
                os << (f ? " " : " + ") << var_name(v);
            else if (c == -1)
                os << " - " << var_name(v);
            else
                os << (f ? " " : " + ") << c << " " << var_name(v);
            f = false;
        }
        os << (row.sense == RowSense::Ge ? " >= " : " <= ") << row.rhs << "\n";
    }
    os << "Bounds\n";
    std::vector<int> fixed(static_cast<size_t>(model.num_vars), -1);
    for (const Edge& e : inst.fixed_one)
        fixed[static_cast<size_t>(model.var_of(e.first, e.second))] = 1;
    for (const Edge& e : inst.fixed_zero)
        fixed[static_cast<size_t>(model.var_of(e.first, e.second))] = 0;
    for (int v = 0; v < model.num_vars; ++v) {
        if (fixed[static_cast<size_t>(v)] >= 0)
            os << " " << var_name(v) << " = " << fixed[static_cast<size_t>(v)] << "\n";
        else
            os << " " << model.bounds[static_cast<size_t>(v)].lower << " <= " << var_name(v)
               << " <= " << model.bounds[static_cast<size_t>(v)].upper << "\n";
    }
    os << "Binary\n";
    for (int v = 0; v < static_cast<int>(model.var_pairs.size()); ++v)
        os << " " << var_name(v) << "\n";
    if (model.z_var >= 0) os << "General\n z\n";
    os << "End\n";
    return os.str();
}

}  // namespace spg
