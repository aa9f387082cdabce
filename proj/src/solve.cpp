#include "mgdom/solve.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <optional>
#include <stdexcept>

#include "json.hpp"

namespace mgdom {

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::BudgetExceeded: return "budget_exceeded";
        case SolveStatus::Infeasible: return "infeasible";
    }
    return "?";
}

std::string solve_result_to_json(const SolveResult& r) {
    nlohmann::json j;
    j["kind"] = kind_name(r.kind);
    if (r.value < 0)
        j["value"] = nullptr;
    else
        j["value"] = r.value;
    j["witness"] = r.witness.to_vector();
    j["nodes"] = r.nodes;
    j["millis"] = r.millis;
    j["status"] = status_name(r.status);
    return j.dump();
}

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    Clock::time_point deadline;
    long long node_budget = 0;
    long long nodes = 0;
    bool exceeded = false;

    // Counts one search node; false once the budget is spent. The wall
    // clock is only sampled every 1024 nodes.
    bool tick() {
        if (exceeded) return false;
        ++nodes;
        if (nodes > node_budget) {
            exceeded = true;
            return false;
        }
        if ((nodes & 1023) == 0 && Clock::now() > deadline) {
            exceeded = true;
            return false;
        }
        return true;
    }
};

// Vertices at distance exactly two, per vertex.
std::vector<std::vector<int>> two_balls(const Graph& g) {
    std::vector<std::vector<int>> out(g.order());
    std::vector<char> near(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        std::fill(near.begin(), near.end(), 0);
        near[v] = 1;
        for (int w : g.neighbors(v)) near[w] = 1;
        for (int w : g.neighbors(v))
            for (int x : g.neighbors(w))
                if (!near[x]) {
                    near[x] = 1;
                    out[v].push_back(x);
                }
        std::sort(out[v].begin(), out[v].end());
    }
    return out;
}

// Immutable per-solve data. `candidates` fixes the branch order; the
// suffix maxima make the coverage bound exact for the undecided tail.
struct Ctx {
    const Graph* g = nullptr;
    DominationKind kind = DominationKind::Dominating;
    bool paired = false, total = false, disj = false;
    int n = 0;
    std::vector<std::vector<int>> d2;         // distance-2 lists (disjunctive kinds)
    std::vector<std::vector<int>> influence;  // vertices whose coverage v can change
    std::vector<char> allowed;
    std::vector<int> candidates;
    std::vector<int> cover_potential;      // most vertices one pick can newly cover
    std::vector<int> suffix_max_potential;  // over candidates[i..]
};

enum class BranchOrder { DegreeDescending, IndexAscending };

Ctx make_ctx(const Graph& g, DominationKind kind, const std::vector<char>& allowed,
             BranchOrder order) {
    Ctx ctx;
    ctx.g = &g;
    ctx.kind = kind;
    ctx.paired = is_paired(kind);
    ctx.total = is_total(kind);
    ctx.disj = is_disjunctive(kind);
    ctx.n = g.order();
    ctx.allowed = allowed;
    if (ctx.disj) ctx.d2 = two_balls(g);

    ctx.influence.resize(ctx.n);
    ctx.cover_potential.resize(ctx.n);
    for (int v = 0; v < ctx.n; ++v) {
        auto& inf = ctx.influence[v];
        if (!ctx.total) inf.push_back(v);
        for (int w : g.neighbors(v)) inf.push_back(w);
        if (ctx.disj)
            for (int w : ctx.d2[v]) inf.push_back(w);
        std::sort(inf.begin(), inf.end());
        ctx.cover_potential[v] = static_cast<int>(inf.size());
    }

    for (int v = 0; v < ctx.n; ++v)
        if (allowed[v]) ctx.candidates.push_back(v);
    if (order == BranchOrder::DegreeDescending)
        std::stable_sort(ctx.candidates.begin(), ctx.candidates.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });

    ctx.suffix_max_potential.assign(ctx.candidates.size() + 1, 0);
    for (int i = static_cast<int>(ctx.candidates.size()) - 1; i >= 0; --i)
        ctx.suffix_max_potential[i] =
            std::max(ctx.cover_potential[ctx.candidates[i]], ctx.suffix_max_potential[i + 1]);
    return ctx;
}

// Mutable search state with incremental coverage bookkeeping. rem_cover[v]
// counts the undecided allowed vertices that could still change v's
// coverage; when it hits zero for an uncovered vertex the branch is dead.
struct Search {
    const Ctx& ctx;
    Budget& budget;
    std::vector<int> adj_cnt, d2_cnt, rem_cover;
    std::vector<char> in_d, covered;
    int deficit = 0;
    std::vector<int> chosen;

    int best = std::numeric_limits<int>::max();
    std::vector<int> best_set;
    bool have_best = false;

    Search(const Ctx& c, Budget& b)
        : ctx(c),
          budget(b),
          adj_cnt(c.n, 0),
          d2_cnt(c.n, 0),
          rem_cover(c.n, 0),
          in_d(c.n, 0),
          covered(c.n, 0),
          deficit(c.n) {
        for (int v : c.candidates)
            for (int w : c.influence[v]) rem_cover[w]++;
    }

    void refresh(int v) {
        const bool c = coverage_rule(ctx.kind, in_d[v], adj_cnt[v], d2_cnt[v]);
        if (c && !covered[v]) {
            covered[v] = 1;
            --deficit;
        } else if (!c && covered[v]) {
            covered[v] = 0;
            ++deficit;
        }
    }

    void add_vertex(int v) {
        in_d[v] = 1;
        chosen.push_back(v);
        refresh(v);
        for (int w : ctx.g->neighbors(v)) {
            adj_cnt[w]++;
            refresh(w);
        }
        if (ctx.disj)
            for (int w : ctx.d2[v]) {
                d2_cnt[w]++;
                refresh(w);
            }
    }

    void remove_vertex(int v) {
        in_d[v] = 0;
        chosen.pop_back();
        refresh(v);
        for (int w : ctx.g->neighbors(v)) {
            adj_cnt[w]--;
            refresh(w);
        }
        if (ctx.disj)
            for (int w : ctx.d2[v]) {
                d2_cnt[w]--;
                refresh(w);
            }
    }

    // Marks v decided (either way). True when some still-uncovered vertex
    // just lost its last potential coverer.
    bool retire(int v) {
        bool dead = false;
        for (int w : ctx.influence[v]) {
            rem_cover[w]--;
            if (!covered[w] && rem_cover[w] == 0) dead = true;
        }
        return dead;
    }

    void unretire(int v) {
        for (int w : ctx.influence[v]) rem_cover[w]++;
    }

    void record_if_better() {
        const int size = static_cast<int>(chosen.size());
        if (size < best) {
            best = size;
            best_set = chosen;
            std::sort(best_set.begin(), best_set.end());
            have_best = true;
        }
    }

    VertexSet chosen_set() const {
        VertexSet d(ctx.n);
        for (int v : chosen) d.add(v);
        return d;
    }

    void dfs(int depth) {
        if (!budget.tick()) return;
        const int size = static_cast<int>(chosen.size());

        if (deficit == 0) {
            if (!ctx.paired) {
                record_if_better();
                return;
            }
            if (size >= best) return;
            if (size % 2 == 0) {
                if (induced_perfect_matching(*ctx.g, chosen_set()).exists) {
                    record_if_better();
                    return;
                }
            }
            // Coverage holds but the matching does not (or parity is off);
            // only adding more vertices can help.
        }

        if (depth == static_cast<int>(ctx.candidates.size())) return;

        int need = 0;
        if (deficit > 0) {
            const int cap = ctx.suffix_max_potential[depth];
            if (cap == 0) return;
            need = (deficit + cap - 1) / cap;
        }
        if (ctx.paired) {
            if (deficit == 0 && need == 0) need = 1;
            if ((size + need) % 2 != 0) need++;
        }
        if (size + need >= best) return;

        const int v = ctx.candidates[depth];

        add_vertex(v);
        if (!retire(v)) dfs(depth + 1);
        unretire(v);
        remove_vertex(v);

        if (!retire(v)) dfs(depth + 1);
        unretire(v);
    }

    // Lexicographically least feasible set of exactly `target` vertices.
    // Requires IndexAscending candidate order; include-first then makes the
    // first feasible leaf the lexicographic minimum.
    bool lex_dfs(int depth, int target) {
        if (!budget.tick()) return false;
        const int size = static_cast<int>(chosen.size());
        if (size == target) {
            if (deficit != 0) return false;
            if (ctx.paired && !induced_perfect_matching(*ctx.g, chosen_set()).exists) return false;
            best_set = chosen;
            have_best = true;
            return true;
        }
        if (depth == static_cast<int>(ctx.candidates.size())) return false;
        const int remaining = target - size;
        if (static_cast<int>(ctx.candidates.size()) - depth < remaining) return false;
        if (deficit > 0) {
            const int cap = ctx.suffix_max_potential[depth];
            if (cap == 0) return false;
            if ((deficit + cap - 1) / cap > remaining) return false;
        }

        const int v = ctx.candidates[depth];

        add_vertex(v);
        bool found = !retire(v) && lex_dfs(depth + 1, target);
        unretire(v);
        remove_vertex(v);
        if (found) return true;

        found = !retire(v) && lex_dfs(depth + 1, target);
        unretire(v);
        return found;
    }
};

// Marginal coverage gain of adding v, against the current search state.
int gain_of(const Search& s, int v) {
    const Ctx& ctx = s.ctx;
    int gain = 0;
    if (!ctx.total && !s.covered[v]) gain++;  // v covers itself on joining
    for (int w : ctx.g->neighbors(v))
        if (!s.covered[w]) gain++;  // one adjacent member always suffices
    if (ctx.disj)
        for (int w : ctx.d2[v])
            if (!s.covered[w] && s.d2_cnt[w] + 1 >= 2) gain++;
    return gain;
}

// Greedy feasible set over an allowed universe; nullopt when it stalls
// (possible only when the universe is restricted).
std::optional<VertexSet> greedy_cover(const Ctx& ctx, Budget& budget) {
    Search s(ctx, budget);
    if (ctx.n == 0) return VertexSet(0);

    if (!ctx.paired) {
        while (s.deficit > 0) {
            int best_v = -1, best_gain = 0;
            for (int v = 0; v < ctx.n; ++v) {
                if (!ctx.allowed[v] || s.in_d[v]) continue;
                const int gv = gain_of(s, v);
                if (gv > best_gain) {
                    best_gain = gv;
                    best_v = v;
                }
            }
            if (best_v < 0) return std::nullopt;
            s.add_vertex(best_v);
        }
        return s.chosen_set();
    }

    // Paired kinds grow by vertex-disjoint edges; the chosen edges are a
    // perfect matching of the set by construction.
    while (s.deficit > 0) {
        int best_u = -1, best_v = -1, best_gain = 0;
        for (auto [u, v] : ctx.g->edges()) {
            if (!ctx.allowed[u] || !ctx.allowed[v] || s.in_d[u] || s.in_d[v]) continue;
            const int gu = gain_of(s, u);
            s.add_vertex(u);
            const int gv_after_u = gain_of(s, v);
            s.remove_vertex(u);
            const int total_gain = gu + gv_after_u;
            if (total_gain > best_gain) {
                best_gain = total_gain;
                best_u = u;
                best_v = v;
            }
        }
        if (best_u < 0) return std::nullopt;
        s.add_vertex(best_u);
        s.add_vertex(best_v);
    }
    return s.chosen_set();
}

std::vector<char> all_allowed(int n) { return std::vector<char>(n, 1); }

SolveResult run_minimum(const Graph& g, DominationKind kind, const std::vector<char>& allowed,
                        const SolveOptions& opts) {
    require_isolate_free(g);
    const auto start = Clock::now();
    Budget budget{start + std::chrono::milliseconds(opts.time_budget_ms), opts.node_budget};

    SolveResult result;
    result.kind = kind;
    result.witness = VertexSet(g.order());

    Ctx ctx = make_ctx(g, kind, allowed, BranchOrder::DegreeDescending);
    Search search(ctx, budget);

    if (auto seed = greedy_cover(ctx, budget)) {
        search.best = seed->count();
        search.best_set = seed->to_vector();
        search.have_best = true;
    }

    if (g.order() == 0) {
        result.value = 0;
        result.status = SolveStatus::Optimal;
        result.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        return result;
    }

    search.dfs(0);

    if (budget.exceeded) {
        result.status = SolveStatus::BudgetExceeded;
        if (search.have_best) {
            result.value = search.best;
            for (int v : search.best_set) result.witness.add(v);
        }
    } else if (!search.have_best) {
        result.status = SolveStatus::Infeasible;
    } else {
        result.status = SolveStatus::Optimal;
        result.value = search.best;
        if (opts.deterministic && result.value > 0) {
            Ctx lex_ctx = make_ctx(g, kind, allowed, BranchOrder::IndexAscending);
            Search lex(lex_ctx, budget);
            if (lex.lex_dfs(0, result.value))
                search.best_set = lex.best_set;
            // On budget exhaustion the incumbent witness stands; the value
            // itself is already proven optimal.
        }
        for (int v : search.best_set) result.witness.add(v);
    }

    result.nodes = budget.nodes;
    result.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return result;
}

}  // namespace

VertexSet greedy_upper_bound(const Graph& g, DominationKind kind) {
    require_isolate_free(g);
    Budget budget{Clock::now() + std::chrono::hours(1), std::numeric_limits<long long>::max()};
    Ctx ctx = make_ctx(g, kind, all_allowed(g.order()), BranchOrder::DegreeDescending);
    auto d = greedy_cover(ctx, budget);
    if (!d)
        throw std::logic_error("greedy_upper_bound: stalled on an isolate-free graph");
    return *d;
}

SolveResult minimum(const Graph& g, DominationKind kind, const SolveOptions& opts) {
    return run_minimum(g, kind, all_allowed(g.order()), opts);
}

SolveResult minimum_restricted(const Graph& g, DominationKind kind, const VertexSet& allowed,
                               const SolveOptions& opts) {
    if (allowed.universe() != g.order())
        throw std::invalid_argument("minimum_restricted: universe does not match graph order");
    std::vector<char> mask(g.order(), 0);
    allowed.for_each([&](int v) { mask[v] = 1; });
    return run_minimum(g, kind, mask, opts);
}

}  // namespace mgdom
