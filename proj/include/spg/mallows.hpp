#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "spg/profile.hpp"

namespace spg {

struct MallowsSpec {
    int m = 0;
    double theta = 0.0;  // dispersion, >= 0; 0 is the uniform distribution
    Ranking central;     // defaults to the identity when empty
    std::uint64_t seed = 0;

    Ranking central_or_identity() const;
    void validate() const;
};

// Number of discordant pairs between two rankings of equal length.
int kendall_tau(const Ranking& a, const Ranking& b);

// counts[i][d] = permutations of length i at Kendall distance d from a fixed
// reference, for i = 1..m and d = 0..i(i-1)/2. Built by the insertion
// recursion counts[i][d] = sum_{d'=0}^{min(d,i-1)} counts[i-1][d-d'].
struct DistanceCountTable {
    int m = 0;
    std::vector<std::vector<mpz_class>> counts;

    const std::vector<mpz_class>& row(int i) const {
        return counts.at(static_cast<size_t>(i));
    }
};

DistanceCountTable distance_counts(int m);

// psi(theta) = sum_d counts[m][d] exp(-theta d), the normalisation constant.
double psi(double theta, int m);

// Precomputes the count table once; every pairwise probability afterwards
// costs O(m^2).
class MallowsAnalytics {
  public:
    explicit MallowsAnalytics(const MallowsSpec& spec);

    // probability that a sampled ranking has {j,k} in the first two positions
    double prob_first_two(int j, int k) const;

    // C(m,2) - sum_{j<k} (1 - P({j,k}))^n
    double expected_necessary_edges(long n) const;

    double psi_m() const { return psi_m_; }
    const DistanceCountTable& table() const { return table_; }

  private:
    MallowsSpec spec_;
    Ranking central_;
    DistanceCountTable table_;
    double psi_m_ = 0.0;
};

double prob_first_two(const MallowsSpec& spec, int j, int k);
double expected_necessary_edges(const MallowsSpec& spec, long n);

// Repeated-insertion sampler: item i of the central ranking is inserted with
// displacement q in {0..i-1} drawn proportional to exp(-theta q), which
// realises the Mallows distribution exactly. Deterministic for a fixed seed.
Profile sample_profile(const MallowsSpec& spec, int n);

}  // namespace spg
