#include "spg/recognition.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "spg/pqtree.hpp"

namespace spg {

namespace {

// Distinct rankings restricted to a shrinking candidate set.
class RestrictedProfile {
  public:
    explicit RestrictedProfile(const Profile& p)
        : m_(p.m), active_(static_cast<size_t>(p.m) + 1, 1), active_count_(p.m) {
        for (const auto& [r, mult] : p.entries) rankings_.push_back(r.order);
    }

    int active_count() const { return active_count_; }

    std::vector<int> active_candidates() const {
        std::vector<int> out;
        for (int c = 1; c <= m_; ++c)
            if (active_[static_cast<size_t>(c)]) out.push_back(c);
        return out;
    }

    void remove(int cand) {
        active_[static_cast<size_t>(cand)] = 0;
        --active_count_;
        for (auto& r : rankings_)
            r.erase(std::remove(r.begin(), r.end(), cand), r.end());
    }

    // candidates ranked last by at least one voter, ascending
    std::vector<int> last_ranked() const {
        std::set<int> out;
        for (const auto& r : rankings_)
            if (!r.empty()) out.insert(r.back());
        return {out.begin(), out.end()};
    }

    std::vector<int> a_set(int k) const {
        std::vector<char> in(static_cast<size_t>(m_) + 1, 0);
        for (int c = 1; c <= m_; ++c)
            in[static_cast<size_t>(c)] = (active_[static_cast<size_t>(c)] && c != k);
        for (const auto& r : rankings_) {
            std::vector<char> upper(static_cast<size_t>(m_) + 1, 0);
            if (r.front() == k) {
                if (r.size() >= 2) upper[static_cast<size_t>(r[1])] = 1;
            } else {
                for (int c : r) {
                    if (c == k) break;
                    upper[static_cast<size_t>(c)] = 1;
                }
            }
            for (int c = 1; c <= m_; ++c)
                if (in[static_cast<size_t>(c)] && !upper[static_cast<size_t>(c)])
                    in[static_cast<size_t>(c)] = 0;
        }
        std::vector<int> out;
        for (int c = 1; c <= m_; ++c)
            if (in[static_cast<size_t>(c)]) out.push_back(c);
        return out;
    }

    // Remaining rankings as a profile over candidates renumbered 1..count;
    // back_map[i] is the original id of renumbered candidate i+1.
    Profile to_profile(std::vector<int>& back_map) const {
        back_map = active_candidates();
        std::vector<int> fwd(static_cast<size_t>(m_) + 1, 0);
        for (size_t i = 0; i < back_map.size(); ++i)
            fwd[static_cast<size_t>(back_map[i])] = static_cast<int>(i) + 1;
        std::vector<std::vector<int>> orders;
        for (const auto& r : rankings_) {
            std::vector<int> o;
            for (int c : r) o.push_back(fwd[static_cast<size_t>(c)]);
            orders.push_back(std::move(o));
        }
        return Profile::from_orders(static_cast<int>(back_map.size()), orders);
    }

  private:
    int m_;
    std::vector<std::vector<int>> rankings_;
    std::vector<char> active_;
    int active_count_;
};

// Full elimination down to one candidate; nullopt when some last-ranked
// candidate has an empty attachment set.
std::optional<EliminationCertificate> eliminate(const Profile& p) {
    EliminationCertificate cert;
    RestrictedProfile rp(p);
    while (rp.active_count() > 1) {
        int k = rp.last_ranked().front();
        auto attach = rp.a_set(k);
        if (attach.empty()) return std::nullopt;
        cert.steps.push_back({k, attach, make_edge(k, attach.front())});
        rp.remove(k);
    }
    cert.core = rp.active_candidates();
    return cert;
}

}  // namespace

std::vector<int> a_set(const Profile& p, int k) {
    if (k < 1 || k > p.m) throw std::invalid_argument("candidate out of range");
    return RestrictedProfile(p).a_set(k);
}

RecognitionResult recognize_tree(const Profile& p) {
    if (p.m == 1)
        return {Verdict::Compatible, Graph(1), EliminationCertificate{{}, {1}}};
    auto cert = eliminate(p);
    if (!cert) return {Verdict::Incompatible, std::nullopt, std::nullopt};
    std::vector<Edge> edges;
    for (const auto& s : cert->steps) edges.push_back(s.chosen);
    Graph witness(p.m, std::move(edges));
    ensure_consistent(witness.is_tree() && is_compatible(witness, p),
                      "tree elimination produced a bad witness");
    return {Verdict::Compatible, std::move(witness), std::move(*cert)};
}

RecognitionResult recognize_path(const Profile& p) {
    if (p.m == 1)
        return {Verdict::Compatible, Graph(1), EliminationCertificate{{}, {1}}};
    auto cert = eliminate(p);
    if (!cert) return {Verdict::Incompatible, std::nullopt, std::nullopt};

    // Rebuild in reverse elimination order. Removing a leaf from a path
    // leaves a path, so every intermediate graph is a path and a candidate
    // may only attach to one of the two current ends. Only the end pair of
    // the path matters for the remaining steps; propagate reachable pairs.
    int core = cert->core.front();
    size_t nsteps = cert->steps.size();

    // true iff steps next_lev-1 .. 0 can all attach starting from endpair
    auto feasible_from = [&](std::pair<int, int> endpair, size_t next_lev) {
        std::set<std::pair<int, int>> cur{endpair};
        for (size_t lev = next_lev; lev-- > 0;) {
            const auto& st = cert->steps[lev];
            std::set<int> at(st.attach_set.begin(), st.attach_set.end());
            std::set<std::pair<int, int>> nxt;
            for (const auto& e : cur) {
                if (at.count(e.first)) nxt.insert(std::minmax(st.removed, e.second));
                if (at.count(e.second)) nxt.insert(std::minmax(st.removed, e.first));
            }
            if (nxt.empty()) return false;
            cur = std::move(nxt);
        }
        return true;
    };

    if (!feasible_from({core, core}, nsteps))
        return {Verdict::Incompatible, std::nullopt, std::nullopt};

    std::deque<int> axis{core};
    for (size_t lev = nsteps; lev-- > 0;) {
        const auto& step = cert->steps[lev];
        std::set<int> attach(step.attach_set.begin(), step.attach_set.end());
        if (attach.count(axis.back()) &&
            feasible_from(std::minmax(step.removed, axis.front()), lev)) {
            axis.push_back(step.removed);
        } else if (attach.count(axis.front()) &&
                   feasible_from(std::minmax(step.removed, axis.back()), lev)) {
            axis.push_front(step.removed);
        } else {
            ensure_consistent(false, "path reconstruction lost a feasible state");
        }
    }

    Graph witness = Graph::from_sequence({axis.begin(), axis.end()}, false);
    witness.m = p.m;
    ensure_consistent(witness.is_path_graph() && is_compatible(witness, p),
                      "path reconstruction produced a bad witness");
    cert->steps.clear();  // attachment choices are embodied by the axis
    for (size_t i = 0; i + 1 < axis.size(); ++i)
        cert->steps.push_back({axis[i], {axis[i + 1]}, make_edge(axis[i], axis[i + 1])});
    cert->core = {axis.back()};
    return {Verdict::Compatible, std::move(witness), std::move(*cert)};
}

RecognitionResult recognize_cycle(const Profile& p) {
    if (p.m < 3) throw std::invalid_argument("cycle recognition needs m >= 3");

    // Rows: prefix sets of sizes 2..m-1. Arcs of a cycle become intervals of
    // a linear order once rows containing the cut candidate are complemented.
    const int cut = 1;
    std::set<std::vector<int>> rows;
    for (const auto& [r, mult] : p.entries) {
        std::vector<char> in(static_cast<size_t>(p.m) + 1, 0);
        in[static_cast<size_t>(r.at(0))] = 1;
        for (int k = 2; k <= p.m - 1; ++k) {
            in[static_cast<size_t>(r.at(k - 1))] = 1;
            std::vector<int> row;
            bool has_cut = in[static_cast<size_t>(cut)];
            for (int c = 1; c <= p.m; ++c) {
                bool member = in[static_cast<size_t>(c)];
                if (has_cut ? !member : member) row.push_back(c - 1);
            }
            if (row.size() >= 2) rows.insert(std::move(row));
        }
    }

    std::vector<int> order;
    if (!consecutive_ones(p.m, {rows.begin(), rows.end()}, &order))
        return {Verdict::Incompatible, std::nullopt, std::nullopt};

    std::vector<int> cycle_seq;
    for (int c : order) cycle_seq.push_back(c + 1);
    Graph witness = Graph::from_sequence(cycle_seq, true);
    witness.m = p.m;
    ensure_consistent(witness.is_cycle_graph() && is_compatible(witness, p),
                      "cycle recognition produced a bad witness");
    return {Verdict::Compatible, std::move(witness), std::nullopt};
}

RecognitionResult recognize_pseudotree(const Profile& p,
                                       const std::vector<int>* scan_order) {
    if (p.m < 3) throw std::invalid_argument("pseudotree recognition needs m >= 3");
    std::vector<int> scan;
    if (scan_order) {
        scan = *scan_order;
    } else {
        for (int c = 1; c <= p.m; ++c) scan.push_back(c);
    }

    RestrictedProfile rp(p);
    EliminationCertificate cert;
    // Any candidate with a nonempty attachment set can be detached as a
    // leaf; last-ranked candidates alone are not enough here.
    while (rp.active_count() >= 4) {
        std::vector<char> active(static_cast<size_t>(p.m) + 1, 0);
        for (int c : rp.active_candidates()) active[static_cast<size_t>(c)] = 1;
        bool found = false;
        for (int c : scan) {
            if (!active[static_cast<size_t>(c)]) continue;
            auto attach = rp.a_set(c);
            if (!attach.empty()) {
                cert.steps.push_back({c, attach, make_edge(c, attach.front())});
                rp.remove(c);
                found = true;
                break;
            }
        }
        if (!found) break;
    }

    std::vector<int> back_map;
    Profile residual = rp.to_profile(back_map);
    cert.core = back_map;
    auto cyc = recognize_cycle(residual);
    if (!cyc.compatible()) return {Verdict::Incompatible, std::nullopt, std::nullopt};

    std::vector<Edge> edges;
    for (const auto& s : cert.steps) edges.push_back(s.chosen);
    for (const auto& [a, b] : cyc.witness->edges)
        edges.push_back(make_edge(back_map[static_cast<size_t>(a - 1)],
                                  back_map[static_cast<size_t>(b - 1)]));
    Graph witness(p.m, std::move(edges));
    ensure_consistent(witness.is_pseudotree() && is_compatible(witness, p),
                      "pseudotree recognition produced a bad witness");
    return {Verdict::Compatible, std::move(witness), std::move(cert)};
}

}  // namespace spg
