#include "spg/mallows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spg/rng.hpp"

namespace spg {

Ranking MallowsSpec::central_or_identity() const {
    if (!central.order.empty()) return central;
    std::vector<int> o(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) o[static_cast<size_t>(i)] = i + 1;
    return Ranking{o};
}

void MallowsSpec::validate() const {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (theta < 0) throw std::invalid_argument("theta must be nonnegative");
    if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
    if (!central.order.empty() && !central.is_permutation_of(m))
        throw std::invalid_argument("central ranking is not a permutation of 1..m");
}

int kendall_tau(const Ranking& a, const Ranking& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rankings differ in length");
    int m = a.size();
    std::vector<int> pos_b(static_cast<size_t>(m) + 1, 0);
    for (int p = 0; p < m; ++p) pos_b[static_cast<size_t>(b.at(p))] = p;
    int discordant = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (pos_b[static_cast<size_t>(a.at(i))] > pos_b[static_cast<size_t>(a.at(j))])
                ++discordant;
    return discordant;
}

DistanceCountTable distance_counts(int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    DistanceCountTable table;
    table.m = m;
    table.counts.resize(static_cast<size_t>(m) + 1);
    table.counts[1] = {1};
    for (int i = 2; i <= m; ++i) {
        const auto& prev = table.counts[static_cast<size_t>(i - 1)];
        int maxd = i * (i - 1) / 2;
        auto& cur = table.counts[static_cast<size_t>(i)];
        cur.assign(static_cast<size_t>(maxd) + 1, 0);
        for (int d = 0; d <= maxd; ++d) {
            mpz_class total = 0;
            int lim = std::min(d, i - 1);
            for (int dp = 0; dp <= lim; ++dp) {
                int rest = d - dp;
                if (rest < static_cast<int>(prev.size())) total += prev[static_cast<size_t>(rest)];
            }
            cur[static_cast<size_t>(d)] = total;
        }
    }
    return table;
}

namespace {

double psi_from_row(const std::vector<mpz_class>& row, double theta) {
    double total = 0.0;
    for (size_t d = 0; d < row.size(); ++d)
        total += row[d].get_d() * std::exp(-theta * static_cast<double>(d));
    return total;
}

}  // namespace

double psi(double theta, int m) {
    if (theta < 0) throw std::invalid_argument("theta must be nonnegative");
    return psi_from_row(distance_counts(m).row(m), theta);
}

MallowsAnalytics::MallowsAnalytics(const MallowsSpec& spec) : spec_(spec) {
    spec_.validate();
    central_ = spec_.central_or_identity();
    table_ = distance_counts(std::max(2, spec_.m));
    psi_m_ = psi_from_row(table_.row(spec_.m), spec_.theta);
}

double MallowsAnalytics::prob_first_two(int j, int k) const {
    int m = spec_.m;
    if (j == k || j < 1 || k < 1 || j > m || k > m)
        throw std::invalid_argument("need two distinct candidates");
    if (m == 2) return 1.0;

    // R1: j then k then the rest in central order; R2 with j and k swapped
    auto fronted = [&](int first, int second) {
        std::vector<int> o{first, second};
        for (int c : central_.order)
            if (c != first && c != second) o.push_back(c);
        return Ranking{o};
    };
    int d1 = kendall_tau(central_, fronted(j, k));
    int d2 = kendall_tau(central_, fronted(k, j));

    // sum_d [N^{m-2}(d - d1) + N^{m-2}(d - d2)] exp(-theta d), negative
    // arguments counting as zero
    const auto& row = table_.row(m - 2);
    double total = 0.0;
    int maxd = m * (m - 1) / 2;
    for (int d = 0; d <= maxd; ++d) {
        double count = 0.0;
        if (d >= d1 && d - d1 < static_cast<int>(row.size()))
            count += row[static_cast<size_t>(d - d1)].get_d();
        if (d >= d2 && d - d2 < static_cast<int>(row.size()))
            count += row[static_cast<size_t>(d - d2)].get_d();
        if (count != 0.0) total += count * std::exp(-spec_.theta * static_cast<double>(d));
    }
    return total / psi_m_;
}

double MallowsAnalytics::expected_necessary_edges(long n) const {
    if (n < 1) throw std::invalid_argument("n must be positive");
    int m = spec_.m;
    double pairs = static_cast<double>(m) * (m - 1) / 2.0;
    double missing = 0.0;
    for (int j = 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k)
            missing += std::pow(1.0 - prob_first_two(j, k), static_cast<double>(n));
    return pairs - missing;
}

double prob_first_two(const MallowsSpec& spec, int j, int k) {
    return MallowsAnalytics(spec).prob_first_two(j, k);
}

double expected_necessary_edges(const MallowsSpec& spec, long n) {
    return MallowsAnalytics(spec).expected_necessary_edges(n);
}

Profile sample_profile(const MallowsSpec& spec, int n) {
    spec.validate();
    if (n < 1) throw std::invalid_argument("n must be positive");
    Ranking central = spec.central_or_identity();
    Rng rng(spec.seed);

    // per-step displacement weights exp(-theta q); the q = 0 anchor keeps
    // every weight representable for any theta
    std::vector<std::vector<double>> cumulative(static_cast<size_t>(spec.m) + 1);
    for (int i = 1; i <= spec.m; ++i) {
        auto& cum = cumulative[static_cast<size_t>(i)];
        cum.resize(static_cast<size_t>(i));
        double acc = 0.0;
        for (int q = 0; q < i; ++q) {
            acc += std::exp(-spec.theta * static_cast<double>(q));
            cum[static_cast<size_t>(q)] = acc;
        }
    }

    std::vector<std::vector<int>> orders;
    for (int s = 0; s < n; ++s) {
        std::vector<int> list;
        list.reserve(static_cast<size_t>(spec.m));
        for (int i = 1; i <= spec.m; ++i) {
            const auto& cum = cumulative[static_cast<size_t>(i)];
            double u = rng.next_double() * cum.back();
            int q = static_cast<int>(std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
            if (q >= i) q = i - 1;
            // displacement q from the bottom of the current list
            list.insert(list.end() - q, central.at(i - 1));
        }
        orders.push_back(std::move(list));
    }
    return Profile::from_orders(spec.m, orders);
}

}  // namespace spg
