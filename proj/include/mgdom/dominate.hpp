#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgdom/graph.hpp"
#include "mgdom/vertex_set.hpp"

namespace mgdom {

// The six set conditions the solver can minimize. "Disjunctive" relaxes
// plain domination: a vertex outside the set is also satisfied when at
// least two set members sit at distance exactly two from it. "Total"
// variants demand the coverage rule for set members too (membership alone
// never counts). "Paired" variants additionally require the chosen set to
// induce a perfect matching, so their sizes are always even.
enum class DominationKind {
    Dominating,
    TotalDominating,
    Disjunctive,
    TotalDisjunctive,
    Paired,
    PairedDisjunctive,
};

inline constexpr DominationKind kAllKinds[] = {
    DominationKind::Dominating,       DominationKind::TotalDominating,
    DominationKind::Disjunctive,      DominationKind::TotalDisjunctive,
    DominationKind::Paired,           DominationKind::PairedDisjunctive,
};

bool is_paired(DominationKind k);
bool is_total(DominationKind k);
bool is_disjunctive(DominationKind k);

const char* kind_name(DominationKind k);  // "dominating", ..., "paired_disjunctive"
std::optional<DominationKind> parse_kind(const std::string& name);

// Pointwise coverage rule: is a vertex satisfied given its membership, the
// number of set members adjacent to it, and the number of set members at
// distance exactly two? (The matching requirement of paired kinds is a
// property of the whole set and lives in check().)
bool coverage_rule(DominationKind kind, bool member, int adj_members, int dist2_members);

// Perfect matching inside the subgraph induced by d. When one exists the
// returned pairing lists its edges with ascending first endpoints; the
// pairing found is the same on every run.
struct Matching {
    bool exists = false;
    std::vector<std::pair<int, int>> pairs;
};

Matching induced_perfect_matching(const Graph& g, const VertexSet& d);

// Full verdict for "does d satisfy this kind on g". Coverage violators are
// reported per vertex; a coverage-clean paired set whose induced subgraph
// has no perfect matching reports matching_failed with the set itself as
// the violating part.
struct DominationVerdict {
    bool satisfied = false;
    VertexSet violators;
    bool matching_failed = false;
    Matching matching;
};

// Domination is undefined on graphs with isolated vertices; throws
// std::invalid_argument naming the first isolated vertex.
void require_isolate_free(const Graph& g);

DominationVerdict check(const Graph& g, const VertexSet& d, DominationKind kind);

// Vertices violating the coverage rule only (matching ignored).
VertexSet uncovered(const Graph& g, const VertexSet& d, DominationKind kind);

}  // namespace mgdom
