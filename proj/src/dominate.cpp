#include "mgdom/dominate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace mgdom {

bool is_paired(DominationKind k) {
    return k == DominationKind::Paired || k == DominationKind::PairedDisjunctive;
}

bool is_total(DominationKind k) {
    return k == DominationKind::TotalDominating || k == DominationKind::TotalDisjunctive;
}

bool is_disjunctive(DominationKind k) {
    return k == DominationKind::Disjunctive || k == DominationKind::TotalDisjunctive ||
           k == DominationKind::PairedDisjunctive;
}

const char* kind_name(DominationKind k) {
    switch (k) {
        case DominationKind::Dominating: return "dominating";
        case DominationKind::TotalDominating: return "total_dominating";
        case DominationKind::Disjunctive: return "disjunctive";
        case DominationKind::TotalDisjunctive: return "total_disjunctive";
        case DominationKind::Paired: return "paired";
        case DominationKind::PairedDisjunctive: return "paired_disjunctive";
    }
    return "?";
}

std::optional<DominationKind> parse_kind(const std::string& name) {
    for (DominationKind k : kAllKinds)
        if (name == kind_name(k)) return k;
    return std::nullopt;
}

void require_isolate_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("domination is undefined on graphs with isolated vertices "
                                        "(vertex " + std::to_string(v) + " has degree 0)");
}

namespace {

// Per-vertex counts of set members adjacent to v (adj) and at distance
// exactly two from v (d2). These are all any coverage rule needs.
struct CoverageCounts {
    std::vector<int> adj;
    std::vector<int> d2;
};

CoverageCounts coverage_counts(const Graph& g, const VertexSet& d) {
    const int n = g.order();
    CoverageCounts c{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    std::vector<char> near(n, 0);
    d.for_each([&](int u) {
        for (int w : g.neighbors(u)) c.adj[w]++;
        // Mark the closed neighborhood of u, then walk two steps out.
        std::fill(near.begin(), near.end(), 0);
        near[u] = 1;
        for (int w : g.neighbors(u)) near[w] = 1;
        for (int w : g.neighbors(u))
            for (int x : g.neighbors(w))
                if (!near[x]) {
                    near[x] = 1;
                    c.d2[x]++;
                }
    });
    return c;
}

}  // namespace

bool coverage_rule(DominationKind kind, bool member, int adj_members, int dist2_members) {
    const bool self_ok = member && !is_total(kind);
    if (self_ok || adj_members >= 1) return true;
    return is_disjunctive(kind) && dist2_members >= 2;
}

Matching induced_perfect_matching(const Graph& g, const VertexSet& d) {
    if (d.universe() != g.order())
        throw std::invalid_argument("induced_perfect_matching: set universe does not match graph order");
    const std::vector<int> members = d.to_vector();
    const int k = static_cast<int>(members.size());
    if (k % 2 != 0) return {};
    if (k == 0) return {true, {}};
    if (k > 64)
        throw std::invalid_argument("induced_perfect_matching: sets larger than 64 are not supported");

    // Adjacency among members, as bitmasks over member positions.
    std::vector<std::uint64_t> nbr(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(members[i], members[j])) {
                nbr[i] |= std::uint64_t{1} << j;
                nbr[j] |= std::uint64_t{1} << i;
            }

    // Always pair off the lowest unmatched position; memoize on the
    // unmatched mask. The replay below re-derives one concrete pairing.
    std::unordered_map<std::uint64_t, bool> memo;
    std::function<bool(std::uint64_t)> can_pair = [&](std::uint64_t mask) -> bool {
        if (mask == 0) return true;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const int v = std::countr_zero(mask);
        const std::uint64_t rest = mask & (mask - 1);
        std::uint64_t cand = nbr[v] & rest;
        bool ok = false;
        while (cand && !ok) {
            const int u = std::countr_zero(cand);
            cand &= cand - 1;
            ok = can_pair(rest & ~(std::uint64_t{1} << u));
        }
        memo.emplace(mask, ok);
        return ok;
    };

    const std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    if (!can_pair(full)) return {};

    Matching m;
    m.exists = true;
    std::uint64_t mask = full;
    while (mask) {
        const int v = std::countr_zero(mask);
        const std::uint64_t rest = mask & (mask - 1);
        std::uint64_t cand = nbr[v] & rest;
        while (cand) {
            const int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (can_pair(rest & ~(std::uint64_t{1} << u))) {
                m.pairs.push_back({members[v], members[u]});
                mask = rest & ~(std::uint64_t{1} << u);
                break;
            }
        }
    }
    return m;
}

DominationVerdict check(const Graph& g, const VertexSet& d, DominationKind kind) {
    require_isolate_free(g);
    if (d.universe() != g.order())
        throw std::invalid_argument("check: set universe does not match graph order");

    DominationVerdict verdict;
    verdict.violators = VertexSet(g.order());
    const CoverageCounts counts = coverage_counts(g, d);
    for (int v = 0; v < g.order(); ++v)
        if (!coverage_rule(kind, d.contains(v), counts.adj[v], counts.d2[v]))
            verdict.violators.add(v);
    verdict.satisfied = verdict.violators.empty();

    if (is_paired(kind)) {
        verdict.matching = induced_perfect_matching(g, d);
        if (!verdict.matching.exists) {
            verdict.matching_failed = true;
            verdict.satisfied = false;
            if (verdict.violators.empty()) verdict.violators = d;
        }
    }
    return verdict;
}

VertexSet uncovered(const Graph& g, const VertexSet& d, DominationKind kind) {
    require_isolate_free(g);
    if (d.universe() != g.order())
        throw std::invalid_argument("uncovered: set universe does not match graph order");
    VertexSet out(g.order());
    const CoverageCounts counts = coverage_counts(g, d);
    for (int v = 0; v < g.order(); ++v)
        if (!coverage_rule(kind, d.contains(v), counts.adj[v], counts.d2[v])) out.add(v);
    return out;
}

}  // namespace mgdom
