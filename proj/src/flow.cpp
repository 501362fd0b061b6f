#include "spg/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace spg {

FlowNetwork FlowNetwork::from_ranks(int count, std::vector<std::vector<int>> attach) {
    FlowNetwork net;
    net.count = count;
    net.attach = std::move(attach);
    net.attach.resize(static_cast<size_t>(count) + 1);
    net.candidate.resize(static_cast<size_t>(count) + 1);
    for (int k = 1; k <= count; ++k) {
        net.candidate[static_cast<size_t>(k)] = k;
        for (int j : net.attach[static_cast<size_t>(k)])
            if (j < 1 || j >= k)
                throw std::invalid_argument("attachment must point to a lower rank");
    }
    return net;
}

FlowNetwork build_network(const Profile& p, const EliminationCertificate& cert) {
    if (cert.core.size() != 1 ||
        static_cast<int>(cert.steps.size()) != p.m - 1)
        throw std::invalid_argument("elimination certificate does not cover the profile");
    FlowNetwork net;
    net.count = p.m;
    net.attach.assign(static_cast<size_t>(p.m) + 1, {});
    net.candidate.assign(static_cast<size_t>(p.m) + 1, 0);

    // rank 1 = core, rank 2 = last removed, ..., rank m = first removed
    std::vector<int> rank_of(static_cast<size_t>(p.m) + 1, 0);
    net.candidate[1] = cert.core.front();
    rank_of[static_cast<size_t>(cert.core.front())] = 1;
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        int rank = 1 + static_cast<int>(cert.steps.size() - i);
        int cand = cert.steps[i].removed;
        net.candidate[static_cast<size_t>(rank)] = cand;
        rank_of[static_cast<size_t>(cand)] = rank;
    }
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        int rank = 1 + static_cast<int>(cert.steps.size() - i);
        for (int j : cert.steps[i].attach_set) {
            int jr = rank_of[static_cast<size_t>(j)];
            if (jr == 0 || jr >= rank)
                throw std::invalid_argument("attachment set points outside the remaining candidates");
            net.attach[static_cast<size_t>(rank)].push_back(jr);
        }
        std::sort(net.attach[static_cast<size_t>(rank)].begin(),
                  net.attach[static_cast<size_t>(rank)].end());
    }
    return net;
}

FlowResult max_flow(const FlowNetwork& net) {
    int m = net.count;
    // node layout: 0 = s, 1..m = ell, m+1..2m = r, 2m+1 = t
    int t = 2 * m + 1;
    struct Arc {
        int to, cap, flow = 0;
        size_t rev;
    };
    std::vector<std::vector<Arc>> adj(static_cast<size_t>(t) + 1);
    auto add_arc = [&](int a, int b, int cap) {
        adj[static_cast<size_t>(a)].push_back({b, cap, 0, adj[static_cast<size_t>(b)].size()});
        adj[static_cast<size_t>(b)].push_back({a, 0, 0, adj[static_cast<size_t>(a)].size() - 1});
    };
    for (int k = 1; k <= m; ++k) add_arc(0, k, 1);
    for (int j = 1; j <= m; ++j) add_arc(m + j, t, m);
    std::vector<std::pair<std::pair<int, int>, std::pair<size_t, size_t>>> middles;
    for (int k = 2; k <= m; ++k)
        for (int j : net.attach[static_cast<size_t>(k)]) {
            middles.push_back({{k, j}, {static_cast<size_t>(k), adj[static_cast<size_t>(k)].size()}});
            add_arc(k, m + j, 1);
        }

    FlowResult result;
    for (;;) {
        // BFS for a shortest augmenting path
        std::vector<std::pair<int, size_t>> pred(static_cast<size_t>(t) + 1, {-1, 0});
        std::queue<int> q;
        q.push(0);
        pred[0] = {0, 0};
        while (!q.empty() && pred[static_cast<size_t>(t)].first < 0) {
            int v = q.front();
            q.pop();
            for (size_t i = 0; i < adj[static_cast<size_t>(v)].size(); ++i) {
                const Arc& a = adj[static_cast<size_t>(v)][i];
                if (a.cap - a.flow > 0 && pred[static_cast<size_t>(a.to)].first < 0) {
                    pred[static_cast<size_t>(a.to)] = {v, i};
                    q.push(a.to);
                }
            }
        }
        if (pred[static_cast<size_t>(t)].first < 0) break;
        int push = std::numeric_limits<int>::max();
        for (int v = t; v != 0;) {
            auto [u, i] = pred[static_cast<size_t>(v)];
            push = std::min(push, adj[static_cast<size_t>(u)][i].cap - adj[static_cast<size_t>(u)][i].flow);
            v = u;
        }
        for (int v = t; v != 0;) {
            auto [u, i] = pred[static_cast<size_t>(v)];
            Arc& a = adj[static_cast<size_t>(u)][i];
            a.flow += push;
            adj[static_cast<size_t>(a.to)][a.rev].flow -= push;
            v = u;
        }
        result.value += push;
    }

    for (const auto& [ranks, loc] : middles) {
        const Arc& a = adj[loc.first][loc.second];
        if (a.flow > 0)
            result.tree_edges.push_back(
                make_edge(net.candidate[static_cast<size_t>(ranks.first)],
                          net.candidate[static_cast<size_t>(ranks.second)]));
    }
    std::sort(result.tree_edges.begin(), result.tree_edges.end());
    return result;
}

RecognitionResult flow_tree_recognize(const Profile& p) {
    if (p.m == 1)
        return {Verdict::Compatible, Graph(1), EliminationCertificate{{}, {1}}};
    auto comb = recognize_tree(p);
    if (!comb.compatible()) return comb;

    FlowNetwork net = build_network(p, *comb.certificate);
    FlowResult flow = max_flow(net);
    ensure_consistent(flow.value == p.m - 1,
                      "completed elimination must admit a flow of value m-1");
    Graph witness(p.m, flow.tree_edges);
    ensure_consistent(witness.is_tree() && is_compatible(witness, p),
                      "flow witness is not a compatible tree");
    return {Verdict::Compatible, std::move(witness), comb.certificate};
}

}  // namespace spg
