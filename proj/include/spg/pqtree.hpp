#pragma once

#include <memory>
#include <vector>

namespace spg {

// PQ-tree over columns 0..n-1. Successive reduce(S) calls constrain the
// admissible leaf orders to those where each S is consecutive; frontier()
// reads one admissible order. P children permute freely, Q children only
// reverse. Used to test the consecutive-ones property exactly.
class PqTree {
  public:
    explicit PqTree(int num_cols);

    // Constrains S to be consecutive. Returns false (and invalidates the
    // tree) when no leaf order satisfies all constraints so far.
    bool reduce(const std::vector<int>& cols);

    bool valid() const { return valid_; }
    std::vector<int> frontier() const;

  private:
    struct Node;
    using NodePtr = std::unique_ptr<Node>;

    struct Node {
        enum Kind { Leaf, P, Q } kind;
        int col = -1;
        std::vector<NodePtr> kids;
        // per-reduce scratch, refreshed by annotate()
        int leaves = 0;
        int full = 0;
    };

    NodePtr root_;
    int n_;
    bool valid_ = true;
    std::vector<char> in_set_;

    void annotate(Node& nd);
    bool handle_root(NodePtr& slot, int s);
    bool make_chain(NodePtr node, std::vector<NodePtr>& out);
    static NodePtr group(std::vector<NodePtr> kids);
    static void normalize(NodePtr& node);
    static void collect(const Node& nd, std::vector<int>& out);
};

// Convenience: true iff some permutation of 0..n-1 makes every row
// consecutive; when order != nullptr and the answer is yes, one valid
// permutation is written there.
bool consecutive_ones(int num_cols, const std::vector<std::vector<int>>& rows,
                      std::vector<int>* order = nullptr);

}  // namespace spg
