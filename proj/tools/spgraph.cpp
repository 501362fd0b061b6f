#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spg/generators.hpp"
#include "spg/lp.hpp"
#include "spg/mallows.hpp"
#include "spg/profile.hpp"
#include "spg/recognition.hpp"
#include "spg/rng.hpp"
#include "spg/soc.hpp"
#include "spg/solver.hpp"

namespace {

using namespace spg;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void print_result(const std::string& structure, const RecognitionResult& res) {
    std::cout << structure << ": "
              << (res.compatible() ? "COMPATIBLE" : "INCOMPATIBLE");
    if (res.compatible() && res.witness) {
        std::cout << ", " << res.witness->edge_count() << " edges";
        std::cout << ", witness " << edge_list_to_string(res.witness->edges);
    }
    std::cout << "\n";
}

RecognitionResult run_structure(const std::string& structure, const Profile& p) {
    if (structure == "axis") return recognize_path(p);
    if (structure == "tree") return recognize_tree(p);
    if (structure == "cycle") return recognize_cycle(p);
    if (structure == "pseudotree") return recognize_pseudotree(p);
    throw std::invalid_argument("unknown structure " + structure);
}

int cmd_recognize(const std::string& file, const std::string& structure) {
    Profile p = read_soc_file(file).profile;
    std::cout << "candidates: " << p.m << ", voters: " << p.voter_count() << "\n";
    if (structure != "auto") {
        print_result(structure, run_structure(structure, p));
        return 0;
    }
    const char* order[] = {"axis", "tree", "cycle", "pseudotree"};
    std::string found;
    for (const char* s : order) {
        if ((s == std::string("cycle") || s == std::string("pseudotree")) && p.m < 3)
            continue;
        auto res = run_structure(s, p);
        print_result(s, res);
        if (res.compatible()) {
            found = s;
            break;
        }
    }
    if (!found.empty())
        std::cout << "structure: " << found << "\n";
    else
        std::cout << "structure: none of axis/tree/cycle/pseudotree\n";
    return 0;
}

int cmd_minimize(const std::string& file, const std::string& objective,
                 const std::string& engine, double time_limit,
                 const std::string& out) {
    Profile p = read_soc_file(file).profile;
    IlpInstance inst;
    inst.profile = p;
    inst.objective = objective == "degree" ? Objective::MinMaxDegree : Objective::MinEdges;

    if (engine == "export") {
        std::string text = export_model(inst);
        if (out.empty()) {
            std::cout << text;
        } else {
            std::ofstream os(out);
            if (!os) throw std::runtime_error("cannot write " + out);
            os << text;
            std::cout << "model written to " << out << "\n";
        }
        return 0;
    }

    SolveReport rep = branch_and_bound(inst, time_limit);
    if (!rep.feasible) {
        std::cout << "infeasible\n";
        return 0;
    }
    std::cout << "objective: " << (objective == "degree" ? "max degree" : "edges")
              << "\nvalue: " << rep.objective_value
              << "\noptimal: " << (rep.proven_optimal ? "yes" : "no (time limit)")
              << "\nnodes: " << rep.node_count
              << "\nroot bound: " << fmt_double(rep.root_bound)
              << "\nruntime: " << fmt_double(rep.wall_seconds) << " s"
              << "\nwitness: " << edge_list_to_string(rep.witness.edges) << "\n";
    return 0;
}

int cmd_mallows_sample(int m, int n, double theta, std::uint64_t seed,
                       const std::string& out) {
    MallowsSpec spec{m, theta, {}, seed};
    Profile p = sample_profile(spec, n);
    if (out.empty()) {
        std::cout << serialize_soc(p);
    } else {
        write_soc_file(out, p);
        std::cout << "profile written to " << out << "\n";
    }
    return 0;
}

int cmd_mallows_expected(int m, const std::vector<double>& thetas,
                         const std::vector<long>& ns, const std::string& out) {
    std::ostringstream csv;
    csv << "m,theta,n,expected_necessary_edges\n";
    for (double theta : thetas) {
        MallowsAnalytics analytics(MallowsSpec{m, theta, {}, 0});
        for (long n : ns)
            csv << m << ',' << fmt_double(theta) << ',' << n << ','
                << fmt_double(analytics.expected_necessary_edges(n)) << "\n";
    }
    if (out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot write " + out);
        os << csv.str();
        std::cout << "csv written to " << out << "\n";
    }
    return 0;
}

int cmd_mallows_density(int m, const std::vector<double>& thetas,
                        const std::vector<long>& ns, int trials,
                        std::uint64_t seed, double time_limit,
                        const std::string& out) {
    std::ostringstream csv;
    csv << "theta,n,trials,mean_density,mean_necessary_density,seed,unproven_count\n";
    double pairs = static_cast<double>(m) * (m - 1) / 2.0;
    std::uint64_t stream = 0;
    for (double theta : thetas) {
        for (long n : ns) {
            double density_sum = 0.0, necessary_sum = 0.0;
            int unproven = 0;
            for (int trial = 0; trial < trials; ++trial) {
                MallowsSpec spec{m, theta, {}, Rng::derive(seed, stream++)};
                Profile p = sample_profile(spec, static_cast<int>(n));
                necessary_sum += static_cast<double>(necessary_edges(p).size()) / pairs;
                IlpInstance inst{p, Objective::MinEdges, {}, {}};
                SolveReport rep = branch_and_bound(inst, time_limit);
                density_sum += static_cast<double>(rep.objective_value) / pairs;
                if (!rep.proven_optimal) ++unproven;
            }
            csv << fmt_double(theta) << ',' << n << ',' << trials << ','
                << fmt_double(density_sum / trials) << ','
                << fmt_double(necessary_sum / trials) << ',' << seed << ','
                << unproven << "\n";
        }
    }
    if (out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot write " + out);
        os << csv.str();
        std::cout << "csv written to " << out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-peakedness on graphs: recognition, minimisation, Mallows experiments"};
    app.require_subcommand(1);

    std::string file, structure = "auto", objective = "edges", engine = "bb", out;
    double time_limit = 60.0;
    int m = 10, n = 20, trials = 50;
    std::uint64_t seed = 1;
    std::vector<double> thetas{0.0};
    std::vector<long> ns{20};

    auto* rec = app.add_subcommand("recognize", "test compatibility with a structure");
    rec->add_option("file", file, "input .soc file")->required();
    rec->add_option("--structure", structure,
                    "axis|tree|cycle|pseudotree|auto (default auto)");

    auto* min = app.add_subcommand("minimize", "minimise edges or maximum degree");
    min->add_option("file", file, "input .soc file")->required();
    min->add_option("--objective", objective, "edges|degree (default edges)");
    min->add_option("--engine", engine, "bb|export (default bb)");
    min->add_option("--time-limit", time_limit, "seconds per solve (default 60)");
    min->add_option("--out", out, "output path for --engine export");

    auto* mal = app.add_subcommand("mallows", "Mallows-model sampling and analytics");
    mal->require_subcommand(1);

    auto* sample = mal->add_subcommand("sample", "write a sampled profile as .soc");
    sample->add_option("--m", m, "candidates")->required();
    sample->add_option("--n", n, "voters")->required();
    sample->add_option("--theta", thetas, "dispersion")->delimiter(',');
    sample->add_option("--seed", seed, "random seed");
    sample->add_option("--out", out, "output file (stdout when omitted)");

    auto* expected = mal->add_subcommand("expected", "exact expected necessary edges as CSV");
    expected->add_option("--m", m, "candidates")->required();
    expected->add_option("--theta", thetas, "dispersion grid")->delimiter(',');
    expected->add_option("--n", ns, "voter grid")->delimiter(',');
    expected->add_option("--out", out, "output file (stdout when omitted)");

    auto* density = mal->add_subcommand("density-experiment",
                                        "sample profiles, minimise edges, report densities");
    density->add_option("--m", m, "candidates")->required();
    density->add_option("--theta", thetas, "dispersion grid")->delimiter(',');
    density->add_option("--n", ns, "voter grid")->delimiter(',');
    density->add_option("--trials", trials, "profiles per grid point");
    density->add_option("--seed", seed, "master seed");
    density->add_option("--time-limit", time_limit, "seconds per solve (default 60)");
    density->add_option("--out", out, "output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed()) return cmd_recognize(file, structure);
        if (min->parsed()) return cmd_minimize(file, objective, engine, time_limit, out);
        if (sample->parsed())
            return cmd_mallows_sample(m, n, thetas.front(), seed, out);
        if (expected->parsed()) return cmd_mallows_expected(m, thetas, ns, out);
        if (density->parsed())
            return cmd_mallows_density(m, thetas, ns, trials, seed, time_limit, out);
    } catch (const spg::ConsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
