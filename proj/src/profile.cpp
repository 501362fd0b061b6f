#include "spg/profile.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spg {

bool Ranking::is_permutation_of(int m) const {
    if (static_cast<int>(order.size()) != m) return false;
    std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
    for (int c : order) {
        if (c < 1 || c > m || seen[static_cast<size_t>(c)]) return false;
        seen[static_cast<size_t>(c)] = 1;
    }
    return true;
}

Profile Profile::from_orders(int m, const std::vector<std::vector<int>>& orders) {
    Profile p;
    p.m = m;
    for (const auto& o : orders) {
        Ranking r{o};
        auto it = std::find_if(p.entries.begin(), p.entries.end(),
                               [&](const auto& e) { return e.first == r; });
        if (it != p.entries.end())
            it->second += 1;
        else
            p.entries.emplace_back(std::move(r), 1);
    }
    p.validate();
    return p;
}

int Profile::voter_count() const {
    int n = 0;
    for (const auto& [r, mult] : entries) n += mult;
    return n;
}

void Profile::validate() const {
    if (m < 1) throw std::invalid_argument("profile needs at least one candidate");
    for (const auto& [r, mult] : entries) {
        if (mult < 1) throw std::invalid_argument("multiplicity must be positive");
        if (!r.is_permutation_of(m))
            throw std::invalid_argument("ranking is not a permutation of 1..m");
    }
    for (size_t i = 0; i < entries.size(); ++i)
        for (size_t j = i + 1; j < entries.size(); ++j)
            if (entries[i].first == entries[j].first)
                throw std::invalid_argument("duplicate ranking entries");
}

Graph::Graph(int m_, std::vector<Edge> e) : m(m_), edges(std::move(e)) {
    for (auto& ed : edges) {
        if (ed.first > ed.second) std::swap(ed.first, ed.second);
        if (ed.first == ed.second || ed.first < 1 || ed.second > m)
            throw std::invalid_argument("bad edge");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Graph Graph::path(int m) {
    std::vector<Edge> e;
    for (int i = 1; i < m; ++i) e.push_back({i, i + 1});
    return Graph(m, std::move(e));
}

Graph Graph::cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    auto g = path(m);
    g.edges.push_back({1, m});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Graph Graph::star(int m, int center) {
    std::vector<Edge> e;
    for (int i = 1; i <= m; ++i)
        if (i != center) e.push_back(make_edge(center, i));
    return Graph(m, std::move(e));
}

Graph Graph::complete(int m) {
    std::vector<Edge> e;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) e.push_back({i, j});
    return Graph(m, std::move(e));
}

Graph Graph::from_sequence(const std::vector<int>& verts, bool close_cycle) {
    std::vector<Edge> e;
    for (size_t i = 0; i + 1 < verts.size(); ++i)
        e.push_back(make_edge(verts[i], verts[i + 1]));
    if (close_cycle && verts.size() >= 3)
        e.push_back(make_edge(verts.back(), verts.front()));
    int m = verts.empty() ? 0 : *std::max_element(verts.begin(), verts.end());
    return Graph(m, std::move(e));
}

bool Graph::has_edge(int a, int b) const {
    if (a == b) return false;
    Edge e = make_edge(a, b);
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<size_t>(m) + 1, 0);
    for (const auto& [a, b] : edges) {
        deg[static_cast<size_t>(a)]++;
        deg[static_cast<size_t>(b)]++;
    }
    deg.erase(deg.begin());
    return deg;
}

int Graph::max_degree() const {
    auto d = degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(m) + 1);
    for (const auto& [a, b] : edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    return adj;
}

bool Graph::connected() const {
    if (m <= 1) return true;
    auto adj = adjacency();
    std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = 1;
                ++visited;
                stack.push_back(u);
            }
    }
    return visited == m;
}

bool Graph::is_tree() const { return edge_count() == m - 1 && connected(); }

bool Graph::is_path_graph() const { return is_tree() && max_degree() <= 2; }

bool Graph::is_cycle_graph() const {
    if (m < 3 || edge_count() != m) return false;
    auto d = degrees();
    return connected() &&
           std::all_of(d.begin(), d.end(), [](int x) { return x == 2; });
}

bool Graph::is_pseudotree() const { return edge_count() <= m && connected(); }

bool is_traversal(const Graph& g, const Ranking& r) {
    if (g.m != r.size()) throw std::invalid_argument("graph/ranking size mismatch");
    auto adj = g.adjacency();
    std::vector<char> in_prefix(static_cast<size_t>(g.m) + 1, 0);
    in_prefix[static_cast<size_t>(r.at(0))] = 1;
    for (int k = 1; k < r.size(); ++k) {
        int c = r.at(k);
        bool attached = false;
        for (int u : adj[static_cast<size_t>(c)])
            if (in_prefix[static_cast<size_t>(u)]) {
                attached = true;
                break;
            }
        if (!attached) return false;
        in_prefix[static_cast<size_t>(c)] = 1;
    }
    return true;
}

bool is_traversal_naive(const Graph& g, const Ranking& r) {
    if (g.m != r.size()) throw std::invalid_argument("graph/ranking size mismatch");
    auto adj = g.adjacency();
    for (int k = 1; k <= r.size(); ++k) {
        std::vector<char> in_prefix(static_cast<size_t>(g.m) + 1, 0);
        for (int p = 0; p < k; ++p) in_prefix[static_cast<size_t>(r.at(p))] = 1;
        // BFS within the prefix from its first member
        std::vector<char> seen(static_cast<size_t>(g.m) + 1, 0);
        std::vector<int> stack{r.at(0)};
        seen[static_cast<size_t>(r.at(0))] = 1;
        int visited = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[static_cast<size_t>(v)])
                if (in_prefix[static_cast<size_t>(u)] && !seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    ++visited;
                    stack.push_back(u);
                }
        }
        if (visited != k) return false;
    }
    return true;
}

bool is_compatible(const Graph& g, const Profile& p) {
    if (g.m != p.m) throw std::invalid_argument("graph/profile size mismatch");
    for (const auto& [r, mult] : p.entries)
        if (!is_traversal(g, r)) return false;
    return true;
}

std::vector<Edge> necessary_edges(const Profile& p) {
    std::vector<Edge> out;
    for (const auto& [r, mult] : p.entries)
        if (r.size() >= 2) out.push_back(make_edge(r.at(0), r.at(1)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string edge_list_to_string(const std::vector<Edge>& edges) {
    std::ostringstream os;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ' ';
        os << '{' << edges[i].first << ',' << edges[i].second << '}';
    }
    return os.str();
}

}  // namespace spg
