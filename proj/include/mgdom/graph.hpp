#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mgdom/vertex_set.hpp"

namespace mgdom {

// Marker for "no path" in distance vectors. Kept distinct from any real
// distance so callers cannot mistake it for a long path.
inline constexpr int kUnreachable = -1;

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1.
//
// Construction normalizes every edge to (min,max), rejects self-loops,
// duplicates and out-of-range endpoints, and keeps both the edge list
// (lexicographically sorted) and each neighbor list (ascending) in a
// canonical order. Every traversal in the library is therefore
// deterministic for a given vertex count + edge set.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Named families

enum class Family {
    Path,              // P_n: vertices 0..n-1 in path order, n >= 1
    Cycle,             // C_n: path 0..n-1 plus edge {n-1,0}, n >= 3
    Complete,          // K_n, n >= 1
    CompleteBipartite, // K_{m,n}: sides 0..m-1 and m..m+n-1, m,n >= 1
    Star,              // K_{1,q}: hub 0, leaves 1..q, q >= 1
    Wheel,             // hub 0 joined to a rim cycle 1..h, h >= 3
    DoubleStar,        // centers a=0, b=1, edge {0,1}; n leaves 2..n+1 on a,
                       // m leaves n+2..n+m+1 on b; requires n >= m >= 0, n >= 1
    Friendship,        // F_k: hub 0 plus triangle edges {2i-1,2i}, k >= 1
};

struct FamilySpec {
    Family family;
    int p1 = 0;  // main size parameter (n, q, h, k, or m of K_{m,n})
    int p2 = 0;  // second parameter where the family needs one
};

Graph generate(const FamilySpec& spec);

const char* family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

// ---------------------------------------------------------------------------
// Deterministic randomness
//
// Wraps std::mt19937_64 and only consumes raw engine output, never the
// standard distributions (their mapping is implementation-defined). The
// same seed yields the same graphs on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, bound), bound >= 1, by rejection sampling.
    std::uint64_t next_below(std::uint64_t bound);

    int next_int(int lo, int hi);  // uniform in [lo, hi], inclusive

    // Uniform in [0,1) with 53 random bits.
    double next_unit();

private:
    std::mt19937_64 engine_;
};

// Splitmix-style mixer for deriving decorrelated per-instance sub-seeds
// from one campaign seed. Pure function of its inputs.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// Uniform random labeled tree on n >= 1 vertices (Pruefer decoding for n >= 3).
Graph random_tree(Rng& rng, int n);

// Random connected graph: random tree plus each non-tree pair added
// independently with probability extra_edge_prob.
Graph random_connected_graph(Rng& rng, int n, double extra_edge_prob);

// Random graph with no isolated vertex: G(n,p) edges, then every isolated
// vertex gets one edge to a random other vertex. Requires n >= 2.
Graph random_isolate_free_graph(Rng& rng, int n, double edge_prob);

// ---------------------------------------------------------------------------
// Structure queries

// BFS distances from src; kUnreachable where no path exists.
std::vector<int> distances_from(const Graph& g, int src);

bool is_connected(const Graph& g);

// Longest shortest path over all pairs. Requires a connected graph with
// at least one vertex; returns 0 for the single-vertex graph.
int diameter(const Graph& g);

struct DegreeProfile {
    std::vector<int> degrees;
    int min_degree = 0;
    int max_degree = 0;
    VertexSet leaves;     // degree exactly 1
    VertexSet isolated;   // degree 0
};

DegreeProfile degree_profile(const Graph& g);

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   n m
//   u v        (one line per edge, m lines)
//
// parse_edge_list reports malformed input with 1-based line numbers;
// serialize_edge_list emits edges lexicographically with a trailing newline.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);
std::string serialize_edge_list(const Graph& g);

}  // namespace mgdom
