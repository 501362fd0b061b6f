#include "spg/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spg/rng.hpp"

namespace spg {

Profile traversal_profile(const Graph& g, int n, std::uint64_t seed) {
    if (!g.connected()) throw std::invalid_argument("graph must be connected");
    if (n < 1) throw std::invalid_argument("n must be positive");
    Rng rng(seed);
    auto adj = g.adjacency();
    std::vector<std::vector<int>> orders;
    for (int s = 0; s < n; ++s) {
        std::vector<char> in_prefix(static_cast<size_t>(g.m) + 1, 0);
        std::vector<int> order;
        int start = 1 + rng.next_int(g.m);
        order.push_back(start);
        in_prefix[static_cast<size_t>(start)] = 1;
        while (static_cast<int>(order.size()) < g.m) {
            std::vector<int> frontier;
            for (int c = 1; c <= g.m; ++c) {
                if (in_prefix[static_cast<size_t>(c)]) continue;
                for (int u : adj[static_cast<size_t>(c)])
                    if (in_prefix[static_cast<size_t>(u)]) {
                        frontier.push_back(c);
                        break;
                    }
            }
            int pick = frontier[static_cast<size_t>(rng.next_int(static_cast<int>(frontier.size())))];
            order.push_back(pick);
            in_prefix[static_cast<size_t>(pick)] = 1;
        }
        orders.push_back(std::move(order));
    }
    Profile p = Profile::from_orders(g.m, orders);
    ensure_consistent(is_compatible(g, p), "traversal profile must be compatible");
    return p;
}

Graph random_tree(int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (m == 1) return Graph(1);
    if (m == 2) return Graph(2, {{1, 2}});
    Rng rng(seed);
    std::vector<int> pruefer(static_cast<size_t>(m - 2));
    for (auto& v : pruefer) v = 1 + rng.next_int(m);
    std::vector<int> degree(static_cast<size_t>(m) + 1, 1);
    for (int v : pruefer) degree[static_cast<size_t>(v)]++;
    std::set<int> leaves;
    for (int c = 1; c <= m; ++c)
        if (degree[static_cast<size_t>(c)] == 1) leaves.insert(c);
    std::vector<Edge> edges;
    for (int v : pruefer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(make_edge(leaf, v));
        if (--degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.push_back(make_edge(a, b));
    return Graph(m, std::move(edges));
}

namespace {

void check_cover(int universe_size, const std::vector<std::vector<int>>& sets) {
    if (sets.empty()) throw std::invalid_argument("need at least one set");
    if (universe_size < 1) throw std::invalid_argument("universe must be nonempty");
    std::vector<char> covered(static_cast<size_t>(universe_size) + 1, 0);
    for (const auto& s : sets) {
        if (s.empty()) throw std::invalid_argument("sets must be nonempty");
        for (int e : s) {
            if (e < 1 || e > universe_size)
                throw std::invalid_argument("element out of range");
            covered[static_cast<size_t>(e)] = 1;
        }
    }
    for (int e = 1; e <= universe_size; ++e)
        if (!covered[static_cast<size_t>(e)])
            throw std::invalid_argument("uncovered element " + std::to_string(e));
}

}  // namespace

Profile setcover_profile_edges(int universe_size, const std::vector<std::vector<int>>& sets) {
    check_cover(universe_size, sets);
    int ns = static_cast<int>(sets.size());
    int z = ns + 1;
    std::vector<std::vector<int>> orders;

    // element voters: sets containing the element, then z, then the others
    for (int e = 1; e <= universe_size; ++e) {
        std::vector<int> order;
        for (int i = 1; i <= ns; ++i)
            if (std::find(sets[static_cast<size_t>(i - 1)].begin(),
                          sets[static_cast<size_t>(i - 1)].end(),
                          e) != sets[static_cast<size_t>(i - 1)].end())
                order.push_back(i);
        order.push_back(z);
        for (int i = 1; i <= ns; ++i)
            if (std::find(order.begin(), order.end(), i) == order.end())
                order.push_back(i);
        orders.push_back(std::move(order));
    }
    // pair voters: {i,j} first, remaining sets, z last
    for (int i = 1; i <= ns; ++i)
        for (int j = i + 1; j <= ns; ++j) {
            std::vector<int> order{i, j};
            for (int k = 1; k <= ns; ++k)
                if (k != i && k != j) order.push_back(k);
            order.push_back(z);
            orders.push_back(std::move(order));
        }
    return Profile::from_orders(ns + 1, orders);
}

Profile setcover_profile_degree(int universe_size, const std::vector<std::vector<int>>& sets) {
    check_cover(universe_size, sets);
    int ns = static_cast<int>(sets.size());
    int z = ns + 1;
    auto t = [&](int i) { return ns + 1 + i; };
    std::vector<std::vector<int>> orders;

    for (int e = 1; e <= universe_size; ++e) {
        std::vector<int> order;
        for (int i = 1; i <= ns; ++i)
            if (std::find(sets[static_cast<size_t>(i - 1)].begin(),
                          sets[static_cast<size_t>(i - 1)].end(),
                          e) != sets[static_cast<size_t>(i - 1)].end())
                order.push_back(i);
        order.push_back(z);
        for (int i = 1; i <= ns; ++i)
            if (std::find(order.begin(), order.end(), i) == order.end())
                order.push_back(i);
        for (int i = 1; i <= ns; ++i) order.push_back(t(i));
        orders.push_back(std::move(order));
    }
    for (int i = 1; i <= ns; ++i)
        for (int j = i + 1; j <= ns; ++j) {
            std::vector<int> order{i, j};
            for (int k = 1; k <= ns; ++k)
                if (k != i && k != j) order.push_back(k);
            order.push_back(z);
            for (int k = 1; k <= ns; ++k) order.push_back(t(k));
            orders.push_back(std::move(order));
        }
    // one voter per t_i: z then t_i, the other t's, then all sets
    for (int i = 1; i <= ns; ++i) {
        std::vector<int> order{z, t(i)};
        for (int k = 1; k <= ns; ++k)
            if (k != i) order.push_back(t(k));
        for (int k = 1; k <= ns; ++k) order.push_back(k);
        orders.push_back(std::move(order));
    }
    // the anchoring voter tying t_1 to S_1
    {
        std::vector<int> order{t(1)};
        for (int k = 1; k <= ns; ++k) order.push_back(k);
        order.push_back(z);
        for (int k = 2; k <= ns; ++k) order.push_back(t(k));
        orders.push_back(std::move(order));
    }
    return Profile::from_orders(2 * ns + 1, orders);
}

}  // namespace spg
