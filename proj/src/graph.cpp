#include "mgdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mgdom {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(n);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.push_back({u, v});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge {" + std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) + "}");
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("Graph: vertex " + std::to_string(v) + " outside 0.." +
                                std::to_string(n_ - 1));
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

// ---------------------------------------------------------------------------
// Families

namespace {

[[noreturn]] void bad_family(const std::string& msg) {
    throw std::invalid_argument("generate: " + msg);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    const int a = spec.p1;
    const int b = spec.p2;
    std::vector<Edge> es;
    switch (spec.family) {
        case Family::Path: {
            if (a < 1) bad_family("path requires n >= 1 (got " + std::to_string(a) + ")");
            for (int i = 0; i + 1 < a; ++i) es.push_back({i, i + 1});
            return Graph(a, es);
        }
        case Family::Cycle: {
            if (a < 3) bad_family("cycle requires n >= 3 (got " + std::to_string(a) + ")");
            for (int i = 0; i + 1 < a; ++i) es.push_back({i, i + 1});
            es.push_back({a - 1, 0});
            return Graph(a, es);
        }
        case Family::Complete: {
            if (a < 1) bad_family("complete graph requires n >= 1 (got " + std::to_string(a) + ")");
            for (int i = 0; i < a; ++i)
                for (int j = i + 1; j < a; ++j) es.push_back({i, j});
            return Graph(a, es);
        }
        case Family::CompleteBipartite: {
            if (a < 1 || b < 1)
                bad_family("complete bipartite requires m, n >= 1 (got " + std::to_string(a) + ", " +
                           std::to_string(b) + ")");
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) es.push_back({i, a + j});
            return Graph(a + b, es);
        }
        case Family::Star: {
            if (a < 1) bad_family("star requires q >= 1 leaves (got " + std::to_string(a) + ")");
            for (int i = 1; i <= a; ++i) es.push_back({0, i});
            return Graph(a + 1, es);
        }
        case Family::Wheel: {
            if (a < 3) bad_family("wheel requires rim length h >= 3 (got " + std::to_string(a) + ")");
            for (int i = 1; i <= a; ++i) es.push_back({0, i});
            for (int i = 1; i < a; ++i) es.push_back({i, i + 1});
            es.push_back({1, a});
            return Graph(a + 1, es);
        }
        case Family::DoubleStar: {
            if (a < b || b < 0)
                bad_family("double star requires n >= m >= 0 (got n=" + std::to_string(a) +
                           ", m=" + std::to_string(b) + ")");
            es.push_back({0, 1});
            for (int i = 0; i < a; ++i) es.push_back({0, 2 + i});
            for (int i = 0; i < b; ++i) es.push_back({1, 2 + a + i});
            return Graph(2 + a + b, es);
        }
        case Family::Friendship: {
            if (a < 1) bad_family("friendship graph requires k >= 1 triangles (got " + std::to_string(a) + ")");
            for (int i = 1; i <= a; ++i) {
                es.push_back({0, 2 * i - 1});
                es.push_back({0, 2 * i});
                es.push_back({2 * i - 1, 2 * i});
            }
            return Graph(2 * a + 1, es);
        }
    }
    bad_family("unknown family");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::CompleteBipartite: return "complete_bipartite";
        case Family::Star: return "star";
        case Family::Wheel: return "wheel";
        case Family::DoubleStar: return "double_star";
        case Family::Friendship: return "friendship";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& name) {
    for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::CompleteBipartite,
                     Family::Star, Family::Wheel, Family::DoubleStar, Family::Friendship})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Deterministic randomness

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng: zero bound");
    // Reject the tail that would bias the modulus (2^64 mod bound values).
    const std::uint64_t cutoff = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = engine_();
        if (x >= cutoff) return x % bound;
    }
}

int Rng::next_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("Rng: empty range");
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_tree(Rng& rng, int n) {
    if (n < 1) throw std::invalid_argument("random_tree: need n >= 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    // Uniform over labeled trees via Pruefer decoding, smallest-leaf rule.
    std::vector<int> seq(n - 2);
    for (auto& a : seq) a = static_cast<int>(rng.next_below(n));
    std::vector<int> deg(n, 1);
    for (int a : seq) deg[a]++;
    std::vector<char> done(n, 0);
    std::vector<Edge> es;
    for (int a : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && deg[v] == 1) { leaf = v; break; }
        es.push_back({leaf, a});
        done[leaf] = 1;
        deg[a]--;
    }
    int u = -1, v = -1;
    for (int w = 0; w < n; ++w)
        if (!done[w] && deg[w] == 1) (u < 0 ? u : v) = w;
    es.push_back({u, v});
    return Graph(n, es);
}

Graph random_connected_graph(Rng& rng, int n, double extra_edge_prob) {
    Graph tree = random_tree(rng, n);
    std::vector<Edge> es = tree.edges();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (tree.has_edge(u, v)) continue;
            if (rng.next_unit() < extra_edge_prob) es.push_back({u, v});
        }
    return Graph(n, es);
}

Graph random_isolate_free_graph(Rng& rng, int n, double edge_prob) {
    if (n < 2) throw std::invalid_argument("random_isolate_free_graph: need n >= 2");
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < edge_prob) es.push_back({u, v});
    std::vector<int> deg(n, 0);
    for (auto [u, v] : es) {
        deg[u]++;
        deg[v]++;
    }
    for (int v = 0; v < n; ++v) {
        if (deg[v]) continue;
        int u = static_cast<int>(rng.next_below(n - 1));
        if (u >= v) ++u;
        es.push_back({std::min(u, v), std::max(u, v)});
        deg[u]++;
        deg[v]++;
    }
    return Graph(n, es);
}

// ---------------------------------------------------------------------------
// Structure queries

std::vector<int> distances_from(const Graph& g, int src) {
    if (src < 0 || src >= g.order())
        throw std::out_of_range("distances_from: bad source vertex " + std::to_string(src));
    std::vector<int> dist(g.order(), kUnreachable);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto dist = distances_from(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

int diameter(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("diameter: empty graph");
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto dist = distances_from(g, v);
        for (int d : dist) {
            if (d == kUnreachable)
                throw std::invalid_argument("diameter: graph is not connected");
            best = std::max(best, d);
        }
    }
    return best;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.resize(g.order());
    p.leaves = VertexSet(g.order());
    p.isolated = VertexSet(g.order());
    for (int v = 0; v < g.order(); ++v) {
        p.degrees[v] = g.degree(v);
        if (p.degrees[v] == 1) p.leaves.add(v);
        if (p.degrees[v] == 0) p.isolated.add(v);
    }
    if (g.order() > 0) {
        p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
        p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
    }
    return p;
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("edge list: line " + std::to_string(line) + ": " + msg);
}

// Splits one line into integer tokens; rejects any non-integer garbage.
// Everything after '#' is a comment.
std::optional<std::vector<long long>> int_tokens(const std::string& line) {
    const auto hash = line.find('#');
    std::istringstream ss(hash == std::string::npos ? line : line.substr(0, hash));
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t used = 0;
            long long val = std::stoll(tok, &used);
            if (used != tok.size()) return std::nullopt;
            out.push_back(val);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = 0, m = 0;
    bool have_header = false;

    // Header: first non-blank line must be "n m".
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = int_tokens(line);
        if (!toks) parse_fail(lineno, "expected header 'n m', got '" + line + "'");
        if (toks->empty()) continue;
        if (toks->size() != 2) parse_fail(lineno, "expected header 'n m', got '" + line + "'");
        n = (*toks)[0];
        m = (*toks)[1];
        have_header = true;
        break;
    }
    if (!have_header) parse_fail(lineno + 1, "missing header 'n m'");
    if (n < 0) parse_fail(lineno, "vertex count must be >= 0");
    if (m < 0) parse_fail(lineno, "edge count must be >= 0");

    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = int_tokens(line);
        if (!toks) parse_fail(lineno, "expected edge 'u v', got '" + line + "'");
        if (toks->empty()) continue;
        if (toks->size() != 2) parse_fail(lineno, "expected edge 'u v', got '" + line + "'");
        if (static_cast<long long>(edges.size()) >= m)
            parse_fail(lineno, "more than the declared " + std::to_string(m) + " edges");
        long long u = (*toks)[0], v = (*toks)[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            parse_fail(lineno, "endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) parse_fail(lineno, "self-loop at vertex " + std::to_string(u));
        if (u > v) parse_fail(lineno, "endpoints must satisfy u < v");
        Edge e{static_cast<int>(u), static_cast<int>(v)};
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            parse_fail(lineno, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        edges.push_back(e);
    }
    if (static_cast<long long>(edges.size()) != m)
        parse_fail(lineno + 1, "declared " + std::to_string(m) + " edges but found " +
                                   std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("edge list: cannot open file: " + path);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace mgdom
