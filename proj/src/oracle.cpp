#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mgdom/solve.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mgdom {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kOracleMaxVertices = 20;

// Binomial table big enough for C(20, k).
struct Binomials {
    long long c[kOracleMaxVertices + 1][kOracleMaxVertices + 1] = {};
    Binomials() {
        for (int i = 0; i <= kOracleMaxVertices; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
        }
    }
    long long operator()(int a, int b) const {
        if (a < 0 || b < 0 || b > a) return 0;
        return c[a][b];
    }
};

const Binomials kBinom;

// Advance a k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) return false;
    comb[i]++;
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

// Combination with the given lexicographic rank.
std::vector<int> unrank_combination(long long rank, int n, int k) {
    std::vector<int> comb(k);
    int lo = 0;
    for (int i = 0; i < k; ++i) {
        for (int v = lo;; ++v) {
            const long long with_v = kBinom(n - 1 - v, k - 1 - i);
            if (rank < with_v) {
                comb[i] = v;
                lo = v + 1;
                break;
            }
            rank -= with_v;
        }
    }
    return comb;
}

VertexSet to_set(int n, const std::vector<int>& comb) {
    VertexSet d(n);
    for (int v : comb) d.add(v);
    return d;
}

void check_oracle_preconditions(const Graph& g) {
    require_isolate_free(g);
    if (g.order() > kOracleMaxVertices)
        throw std::invalid_argument("brute_force_oracle: limited to " +
                                    std::to_string(kOracleMaxVertices) + " vertices (got " +
                                    std::to_string(g.order()) + ")");
}

std::vector<int> cardinalities(DominationKind kind, int n) {
    std::vector<int> ks;
    for (int k = 0; k <= n; ++k)
        if (!is_paired(kind) || k % 2 == 0) ks.push_back(k);
    return ks;
}

}  // namespace

SolveResult brute_force_oracle(const Graph& g, DominationKind kind) {
    check_oracle_preconditions(g);
    const auto start = Clock::now();
    const int n = g.order();

    SolveResult result;
    result.kind = kind;
    result.witness = VertexSet(n);

    for (int k : cardinalities(kind, n)) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        do {
            result.nodes++;
            const VertexSet d = to_set(n, comb);
            if (check(g, d, kind).satisfied) {
                result.value = k;
                result.witness = d;
                result.status = SolveStatus::Optimal;
                result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    Clock::now() - start)
                                    .count();
                return result;
            }
        } while (next_combination(comb, n));
    }

    result.status = SolveStatus::Infeasible;
    result.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return result;
}

SolveResult brute_force_oracle_parallel(const Graph& g, DominationKind kind, int threads) {
    check_oracle_preconditions(g);
    if (threads < 1) throw std::invalid_argument("brute_force_oracle_parallel: need threads >= 1");
    const auto start = Clock::now();
    const int n = g.order();

    SolveResult result;
    result.kind = kind;
    result.witness = VertexSet(n);

    for (int k : cardinalities(kind, n)) {
        const long long total = kBinom(n, k);
        // Contiguous rank blocks, one per block index. Each block records
        // the first satisfying rank it contains; the global winner is the
        // minimum, which is exactly the serial first hit. Blocks are dealt
        // to however many threads the runtime actually grants, so every
        // block is always scanned.
        std::vector<long long> hit(threads, -1);
        std::vector<long long> examined(threads, 0);

        const auto scan_block = [&](int t) {
            const long long lo = total * t / threads;
            const long long hi = total * (t + 1) / threads;
            if (lo >= hi) return;
            std::vector<int> comb = unrank_combination(lo, n, k);
            for (long long r = lo; r < hi; ++r) {
                examined[t]++;
                if (check(g, to_set(n, comb), kind).satisfied) {
                    hit[t] = r;
                    break;
                }
                if (r + 1 < hi) next_combination(comb, n);
            }
        };

#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
        {
            const int team = omp_get_num_threads();
            for (int t = omp_get_thread_num(); t < threads; t += team) scan_block(t);
        }
#else
        for (int t = 0; t < threads; ++t) scan_block(t);
#endif

        for (long long e : examined) result.nodes += e;
        long long best_rank = -1;
        for (long long h : hit)
            if (h >= 0 && (best_rank < 0 || h < best_rank)) best_rank = h;
        if (best_rank >= 0) {
            result.value = k;
            result.witness = to_set(n, unrank_combination(best_rank, n, k));
            result.status = SolveStatus::Optimal;
            result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                                  start)
                                .count();
            return result;
        }
    }

    result.status = SolveStatus::Infeasible;
    result.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return result;
}

}  // namespace mgdom
