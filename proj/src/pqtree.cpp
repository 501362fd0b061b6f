#include "spg/pqtree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace spg {

PqTree::PqTree(int num_cols) : n_(num_cols), in_set_(static_cast<size_t>(num_cols), 0) {
    if (num_cols < 1) throw std::invalid_argument("PqTree needs at least one column");
    root_ = std::make_unique<Node>();
    if (num_cols == 1) {
        root_->kind = Node::Leaf;
        root_->col = 0;
    } else {
        root_->kind = Node::P;
        for (int c = 0; c < num_cols; ++c) {
            auto leaf = std::make_unique<Node>();
            leaf->kind = Node::Leaf;
            leaf->col = c;
            root_->kids.push_back(std::move(leaf));
        }
    }
}

void PqTree::annotate(Node& nd) {
    if (nd.kind == Node::Leaf) {
        nd.leaves = 1;
        nd.full = in_set_[static_cast<size_t>(nd.col)] ? 1 : 0;
        return;
    }
    nd.leaves = 0;
    nd.full = 0;
    for (auto& k : nd.kids) {
        annotate(*k);
        nd.leaves += k->leaves;
        nd.full += k->full;
    }
}

PqTree::NodePtr PqTree::group(std::vector<NodePtr> kids) {
    if (kids.size() == 1) return std::move(kids.front());
    auto p = std::make_unique<Node>();
    p->kind = Node::P;
    p->kids = std::move(kids);
    return p;
}

void PqTree::normalize(NodePtr& node) {
    if (!node || node->kind == Node::Leaf) return;
    if (node->kids.size() == 1) {
        node = std::move(node->kids.front());
        return;
    }
    if (node->kind == Node::Q && node->kids.size() == 2) node->kind = Node::P;
}

// Turns a partial (mixed) subtree into a child sequence for a Q node:
// all-empty subtrees first, all-full subtrees last. Consumes the node.
bool PqTree::make_chain(NodePtr node, std::vector<NodePtr>& out) {
    Node& nd = *node;
    assert(nd.full > 0 && nd.full < nd.leaves);
    if (nd.kind == Node::Leaf) return false;  // a leaf is never mixed

    if (nd.kind == Node::P) {
        std::vector<NodePtr> empty, fullk;
        NodePtr mixed;
        for (auto& k : nd.kids) {
            if (k->full == 0)
                empty.push_back(std::move(k));
            else if (k->full == k->leaves)
                fullk.push_back(std::move(k));
            else if (!mixed)
                mixed = std::move(k);
            else
                return false;  // two partial children below the pertinent root
        }
        if (!empty.empty()) out.push_back(group(std::move(empty)));
        if (mixed && !make_chain(std::move(mixed), out)) return false;
        if (!fullk.empty()) out.push_back(group(std::move(fullk)));
        return true;
    }

    // Q node: children must read E* [partial] F* in one orientation.
    auto fits = [&](const std::vector<NodePtr>& kids) {
        size_t i = 0;
        while (i < kids.size() && kids[i]->full == 0) ++i;
        if (i < kids.size() && kids[i]->full < kids[i]->leaves) ++i;  // boundary partial
        while (i < kids.size() && kids[i]->full == kids[i]->leaves) ++i;
        return i == kids.size();
    };
    if (!fits(nd.kids)) {
        std::reverse(nd.kids.begin(), nd.kids.end());
        if (!fits(nd.kids)) return false;
    }
    for (auto& k : nd.kids) {
        if (k->full == 0 || k->full == k->leaves)
            out.push_back(std::move(k));
        else if (!make_chain(std::move(k), out))
            return false;
    }
    return true;
}

bool PqTree::handle_root(NodePtr& slot, int s) {
    Node& nd = *slot;
    if (nd.full == nd.leaves) return true;  // set occupies the whole subtree
    assert(nd.kind != Node::Leaf);

    if (nd.kind == Node::P) {
        std::vector<NodePtr> empty, fullk, mixed;
        for (auto& k : nd.kids) {
            if (k->full == 0)
                empty.push_back(std::move(k));
            else if (k->full == k->leaves)
                fullk.push_back(std::move(k));
            else
                mixed.push_back(std::move(k));
        }
        if (mixed.size() > 2) return false;

        if (mixed.empty()) {
            nd.kids = std::move(empty);
            nd.kids.push_back(group(std::move(fullk)));
            normalize(slot);
            return true;
        }

        std::vector<NodePtr> chain;
        if (!make_chain(std::move(mixed[0]), chain)) return false;
        if (!fullk.empty()) chain.push_back(group(std::move(fullk)));
        if (mixed.size() == 2) {
            std::vector<NodePtr> chain2;
            if (!make_chain(std::move(mixed[1]), chain2)) return false;
            std::reverse(chain2.begin(), chain2.end());
            for (auto& c : chain2) chain.push_back(std::move(c));
        }
        auto q = std::make_unique<Node>();
        q->kind = Node::Q;
        q->kids = std::move(chain);
        normalize(q);
        if (empty.empty()) {
            slot = std::move(q);
        } else {
            nd.kids = std::move(empty);
            nd.kids.push_back(std::move(q));
            normalize(slot);
        }
        return true;
    }

    // Q root: non-empty children must form one contiguous block whose
    // interior is full; a partial child may sit at each block boundary
    // with its full side facing inward.
    auto& kids = nd.kids;
    size_t a = 0, b = kids.size() - 1;
    while (a < kids.size() && kids[a]->full == 0) ++a;
    while (b > 0 && kids[b]->full == 0) --b;
    // the pertinent root has no child holding the whole set, so at least
    // two children are non-empty
    if (a >= kids.size() || a >= b)
        throw std::logic_error("PqTree: pertinent root invariant broken");
    for (size_t i = a + 1; i < b; ++i)
        if (kids[i]->full != kids[i]->leaves) return false;

    std::vector<NodePtr> rebuilt;
    for (size_t i = 0; i < a; ++i) rebuilt.push_back(std::move(kids[i]));
    if (kids[a]->full < kids[a]->leaves) {
        if (!make_chain(std::move(kids[a]), rebuilt)) return false;
    } else {
        rebuilt.push_back(std::move(kids[a]));
    }
    for (size_t i = a + 1; i < b; ++i) rebuilt.push_back(std::move(kids[i]));
    if (kids[b]->full < kids[b]->leaves) {
        std::vector<NodePtr> chain;
        if (!make_chain(std::move(kids[b]), chain)) return false;
        std::reverse(chain.begin(), chain.end());
        for (auto& c : chain) rebuilt.push_back(std::move(c));
    } else {
        rebuilt.push_back(std::move(kids[b]));
    }
    for (size_t i = b + 1; i < kids.size(); ++i) rebuilt.push_back(std::move(kids[i]));
    nd.kids = std::move(rebuilt);
    normalize(slot);
    (void)s;
    return true;
}

bool PqTree::reduce(const std::vector<int>& cols) {
    if (!valid_) return false;
    std::fill(in_set_.begin(), in_set_.end(), 0);
    int s = 0;
    for (int c : cols) {
        if (c < 0 || c >= n_) throw std::invalid_argument("column out of range");
        if (!in_set_[static_cast<size_t>(c)]) {
            in_set_[static_cast<size_t>(c)] = 1;
            ++s;
        }
    }
    if (s <= 1 || s == n_) return true;

    annotate(*root_);
    NodePtr* slot = &root_;
    for (;;) {
        Node* nd = slot->get();
        if (nd->kind == Node::Leaf) break;
        NodePtr* next = nullptr;
        for (auto& k : nd->kids)
            if (k->full == s) {
                next = &k;
                break;
            }
        if (!next) break;
        slot = next;
    }
    if (!handle_root(*slot, s)) {
        valid_ = false;
        return false;
    }
    return true;
}

void PqTree::collect(const Node& nd, std::vector<int>& out) {
    if (nd.kind == Node::Leaf) {
        out.push_back(nd.col);
        return;
    }
    for (const auto& k : nd.kids) collect(*k, out);
}

std::vector<int> PqTree::frontier() const {
    if (!valid_) throw std::logic_error("frontier of an invalid PqTree");
    std::vector<int> out;
    collect(*root_, out);
    return out;
}

bool consecutive_ones(int num_cols, const std::vector<std::vector<int>>& rows,
                      std::vector<int>* order) {
    PqTree tree(num_cols);
    for (const auto& row : rows)
        if (!tree.reduce(row)) return false;
    if (order) *order = tree.frontier();
    return true;
}

}  // namespace spg
