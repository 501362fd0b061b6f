#pragma once

#include <vector>

#include "spg/profile.hpp"
#include "spg/recognition.hpp"

namespace spg {

// Unit-capacity network from a completed leaf elimination. Candidates are
// renumbered by elimination rank: rank 1 is the core (never removed), rank 2
// the last removed, and so on. Nodes: source s, one ell_k and r_k per rank,
// sink t. Arcs: s->ell_k capacity 1; ell_k->r_j capacity 1 for j in
// attach[k] (so j has a lower rank than k); r_j->t capacity m (stands in for
// infinity, no r node can ever carry more). ell of the core has no outgoing
// arcs, so the maximum flow is at most m-1.
struct FlowNetwork {
    int count = 0;                         // number of candidates
    std::vector<std::vector<int>> attach;  // attach[k] for rank k in 2..count
    std::vector<int> candidate;            // original candidate per rank

    static FlowNetwork from_ranks(int count, std::vector<std::vector<int>> attach);
};

struct FlowResult {
    int value = 0;
    std::vector<Edge> tree_edges;  // candidate-id pair per saturated middle arc
};

FlowNetwork build_network(const Profile& p, const EliminationCertificate& cert);

// Breadth-first augmenting paths; capacities are integers so the flow is
// integral.
FlowResult max_flow(const FlowNetwork& net);

// Compatible iff leaf elimination completes and the maximum flow is m-1;
// the saturated middle arcs then spell out a witness tree.
RecognitionResult flow_tree_recognize(const Profile& p);

}  // namespace spg
