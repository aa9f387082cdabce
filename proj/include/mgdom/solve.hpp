#pragma once

#include <string>

#include "mgdom/dominate.hpp"
#include "mgdom/graph.hpp"
#include "mgdom/vertex_set.hpp"

namespace mgdom {

enum class SolveStatus {
    Optimal,         // value is the exact minimum and witness attains it
    BudgetExceeded,  // search stopped early; value is the best known upper
                     // bound (-1 when no feasible set was found at all)
    Infeasible,      // exhaustive search proved no feasible set exists
                     // (possible only under a restricted candidate universe)
};

const char* status_name(SolveStatus s);

struct SolveOptions {
    long long time_budget_ms = 60'000;
    long long node_budget = 100'000'000;
    // Re-derive the lexicographically least optimal witness in a second
    // bounded pass, so equal-value ties never depend on search order. If
    // the budget expires during that pass the incumbent witness is kept.
    bool deterministic = true;
};

struct SolveResult {
    DominationKind kind = DominationKind::Dominating;
    int value = -1;
    VertexSet witness;
    long long nodes = 0;
    long long millis = 0;
    SolveStatus status = SolveStatus::Infeasible;
};

std::string solve_result_to_json(const SolveResult& r);

// Feasible starting set built greedily (largest coverage gain first, ties to
// the smallest index / smallest edge). Paired kinds grow by vertex-disjoint
// edges, so the matching requirement holds by construction. Never minimal in
// general, but always feasible on an isolate-free graph.
VertexSet greedy_upper_bound(const Graph& g, DominationKind kind);

// Exact minimum via include/exclude branch and bound. Branch order is
// descending degree (ties to the smaller index); the incumbent comes from
// greedy_upper_bound; subtrees die when even full use of the best remaining
// per-vertex coverage cannot beat the incumbent, or when some uncovered
// vertex has no undecided potential coverer left.
SolveResult minimum(const Graph& g, DominationKind kind, const SolveOptions& opts = {});

// Same search restricted to subsets of `allowed`. May be Infeasible.
SolveResult minimum_restricted(const Graph& g, DominationKind kind, const VertexSet& allowed,
                               const SolveOptions& opts = {});

// Independent exhaustive reference for cross-checking the solver: tries
// subsets in (cardinality, lexicographic) order and returns the first one
// that satisfies check(). Limited to 20 vertices. nodes = sets examined.
SolveResult brute_force_oracle(const Graph& g, DominationKind kind);

// Same answer as brute_force_oracle, computed by splitting each
// cardinality's combination ranks into contiguous per-thread blocks and
// taking the minimum satisfying rank. With threads == 1 this is the serial
// scan. nodes may exceed the serial count (late blocks keep scanning), but
// value and witness are always identical to the serial reference.
SolveResult brute_force_oracle_parallel(const Graph& g, DominationKind kind, int threads);

}  // namespace mgdom
