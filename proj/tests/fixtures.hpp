#pragma once

#include <vector>

#include "spg/profile.hpp"
#include "spg/rng.hpp"

namespace spg::test {

// 4 voters on 5 candidates; necessary edges force the 4-cycle (1,2,5,3),
// adding {3,4} gives the unique 5-edge optimum.
inline Profile pseudotree5_profile() {
    return Profile::from_orders(5, {{1, 2, 3, 4, 5},
                                    {1, 3, 4, 2, 5},
                                    {2, 5, 3, 4, 1},
                                    {3, 5, 4, 2, 1}});
}

// 3 voters on 4 candidates; the relaxation has a half-integral optimum of
// 4.5 while every integral solution needs 5 edges.
inline Profile half_integral_profile() {
    return Profile::from_orders(4, {{1, 2, 4, 3}, {2, 3, 4, 1}, {1, 3, 4, 2}});
}

// 2 voters on 4 candidates; small export / model-shape fixture.
inline Profile two_voter_profile() {
    return Profile::from_orders(4, {{1, 4, 2, 3}, {3, 4, 2, 1}});
}

// tree-compatible but more than one witness tree exists
inline Profile star_profile() {
    return Profile::from_orders(4, {{1, 2, 3, 4}, {2, 1, 3, 4}, {4, 1, 2, 3}});
}

// necessary edges force a star centred at 1, so a tree exists but no axis
inline Profile forced_star_profile() {
    return Profile::from_orders(4, {{2, 1, 3, 4}, {3, 1, 2, 4}, {4, 1, 2, 3}});
}

inline Profile single_voter(const std::vector<int>& order) {
    return Profile::from_orders(static_cast<int>(order.size()), {order});
}

// uniform random profile: d distinct rankings, random multiplicities 1..3
inline Profile random_profile(int m, int d, Rng& rng) {
    std::vector<std::pair<Ranking, int>> entries;
    std::vector<std::vector<int>> seen;
    for (int i = 0; i < d; ++i) {
        auto order = rng.permutation(m);
        bool dup = false;
        for (const auto& s : seen) dup = dup || s == order;
        if (dup) continue;
        seen.push_back(order);
        entries.emplace_back(Ranking{order}, 1 + rng.next_int(3));
    }
    return Profile(m, std::move(entries));
}

}  // namespace spg::test
