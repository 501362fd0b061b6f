#pragma once

#include <algorithm>
#include <bit>
#include <vector>

#include "spg/profile.hpp"

namespace spg::test {

// Exhaustive sweep over all edge subsets (m <= 6): best objectives and
// structure existence, independent of every production code path except the
// shared data model.
struct OracleAnswers {
    bool tree = false;
    bool path = false;
    bool cycle = false;
    bool pseudotree = false;
    int min_edges = -1;
    int min_degree = -1;
};

inline OracleAnswers oracle_sweep(const Profile& p) {
    int m = p.m;
    int nv = m * (m - 1) / 2;
    std::vector<Edge> pairs;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) pairs.push_back({a, b});

    OracleAnswers ans;
    for (unsigned mask = 0; mask < (1u << nv); ++mask) {
        unsigned adj[7] = {0};
        int deg[7] = {0};
        for (int v = 0; v < nv; ++v)
            if (mask & (1u << v)) {
                int a = pairs[static_cast<size_t>(v)].first;
                int b = pairs[static_cast<size_t>(v)].second;
                adj[a] |= 1u << b;
                adj[b] |= 1u << a;
                deg[a]++;
                deg[b]++;
            }
        bool ok = true;
        for (const auto& [r, mult] : p.entries) {
            unsigned prefix = 1u << r.at(0);
            for (int k = 1; k < m && ok; ++k) {
                if (!(adj[r.at(k)] & prefix)) ok = false;
                prefix |= 1u << r.at(k);
            }
            if (!ok) break;
        }
        if (!ok) continue;

        int edges = std::popcount(mask);
        int maxdeg = *std::max_element(deg + 1, deg + m + 1);
        if (ans.min_edges < 0 || edges < ans.min_edges) ans.min_edges = edges;
        if (ans.min_degree < 0 || maxdeg < ans.min_degree) ans.min_degree = maxdeg;
        if (edges == m - 1) {
            ans.tree = true;  // compatibility forces connectivity
            if (maxdeg <= 2) ans.path = true;
        }
        if (edges == m && maxdeg == 2 && m >= 3) {
            bool all2 = true;
            for (int c = 1; c <= m; ++c) all2 = all2 && deg[c] == 2;
            if (all2) ans.cycle = true;
        }
        if (edges <= m) ans.pseudotree = true;
    }
    return ans;
}

// minimum cover size by subset enumeration; -1 when no cover exists
inline int min_cover_size(int universe_size, const std::vector<std::vector<int>>& sets) {
    int ns = static_cast<int>(sets.size());
    int best = -1;
    for (unsigned mask = 0; mask < (1u << ns); ++mask) {
        std::vector<char> covered(static_cast<size_t>(universe_size) + 1, 0);
        for (int i = 0; i < ns; ++i)
            if (mask & (1u << i))
                for (int e : sets[static_cast<size_t>(i)]) covered[static_cast<size_t>(e)] = 1;
        bool all = true;
        for (int e = 1; e <= universe_size; ++e) all = all && covered[static_cast<size_t>(e)];
        if (!all) continue;
        int size = std::popcount(mask);
        if (best < 0 || size < best) best = size;
    }
    return best;
}

}  // namespace spg::test
