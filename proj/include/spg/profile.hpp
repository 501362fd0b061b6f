#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spg {

// Unordered candidate pair, stored with first < second. Candidates are 1-based.
using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Raised when two routes that must agree (combinatorial vs LP vs flow) do not.
// The CLI maps this to exit code 3.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void ensure_consistent(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError("internal consistency violation: " + what);
}

// A strict complete ranking: order[p] is the candidate at position p
// (position 0 = most preferred).
struct Ranking {
    std::vector<int> order;

    Ranking() = default;
    explicit Ranking(std::vector<int> o) : order(std::move(o)) {}

    int size() const { return static_cast<int>(order.size()); }
    int at(int pos) const { return order.at(static_cast<size_t>(pos)); }
    bool is_permutation_of(int m) const;

    bool operator==(const Ranking&) const = default;
};

// A profile: m candidates and distinct rankings with multiplicities.
struct Profile {
    int m = 0;
    std::vector<std::pair<Ranking, int>> entries;

    Profile() = default;
    Profile(int m_, std::vector<std::pair<Ranking, int>> e)
        : m(m_), entries(std::move(e)) {
        validate();
    }

    // Builds a profile from raw orders, merging duplicates (multiplicity 1 each).
    static Profile from_orders(int m, const std::vector<std::vector<int>>& orders);

    int voter_count() const;
    int distinct_count() const { return static_cast<int>(entries.size()); }
    void validate() const;  // throws std::invalid_argument
};

// Undirected simple graph on candidates 1..m; edges kept sorted and unique.
struct Graph {
    int m = 0;
    std::vector<Edge> edges;

    Graph() = default;
    explicit Graph(int m_) : m(m_) {}
    Graph(int m_, std::vector<Edge> e);

    static Graph path(int m);      // 1-2-...-m
    static Graph cycle(int m);     // 1-2-...-m-1
    static Graph star(int m, int center = 1);
    static Graph complete(int m);
    static Graph from_sequence(const std::vector<int>& verts, bool close_cycle);

    bool has_edge(int a, int b) const;
    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<int> degrees() const;
    int max_degree() const;
    std::vector<std::vector<int>> adjacency() const;

    bool connected() const;
    bool is_tree() const;        // connected, m-1 edges
    bool is_path_graph() const;  // tree with max degree <= 2
    bool is_cycle_graph() const; // connected, every degree exactly 2
    bool is_pseudotree() const;  // connected, at most m edges

    bool operator==(const Graph&) const = default;
};

// True iff every prefix of r induces a connected subgraph of g. Checked
// incrementally: each candidate after the first must be adjacent to an
// earlier one, which is equivalent to prefix connectivity.
bool is_traversal(const Graph& g, const Ranking& r);

// Reference check used as the oracle for the incremental formulation:
// explicitly tests connectivity of every induced prefix subgraph.
bool is_traversal_naive(const Graph& g, const Ranking& r);

bool is_compatible(const Graph& g, const Profile& p);

// Pairs {j,k} that some voter ranks in the first two positions. Every
// compatible graph contains all of them.
std::vector<Edge> necessary_edges(const Profile& p);

std::string edge_list_to_string(const std::vector<Edge>& edges);

}  // namespace spg
