#include "mgdom/transform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace mgdom {

namespace {

// Edge vertices in base-edge order; edge k of the base becomes vertex n+k.
std::vector<Edge> middle_edges(const Graph& base) {
    const int n = base.order();
    std::vector<Edge> es;
    for (int k = 0; k < base.size(); ++k) {
        auto [u, v] = base.edges()[k];
        es.push_back({u, n + k});
        es.push_back({v, n + k});
    }
    // Edge vertices of a common endpoint are pairwise adjacent.
    for (int k = 0; k < base.size(); ++k)
        for (int l = k + 1; l < base.size(); ++l) {
            auto [a, b] = base.edges()[k];
            auto [c, d] = base.edges()[l];
            if (a == c || a == d || b == c || b == d) es.push_back({n + k, n + l});
        }
    return es;
}

}  // namespace

MiddleGraph::MiddleGraph(const Graph& base)
    : base_(base), graph_(base.order() + base.size(), middle_edges(base)) {
    provenance_.reserve(graph_.order());
    for (int v = 0; v < base_.order(); ++v)
        provenance_.push_back({Provenance::Kind::Original, v, -1});
    for (auto [u, v] : base_.edges())
        provenance_.push_back({Provenance::Kind::Subdivision, u, v});
}

int MiddleGraph::original_vertex(int i) const {
    if (i < 0 || i >= base_.order())
        throw std::out_of_range("MiddleGraph: no original vertex " + std::to_string(i));
    return i;
}

int MiddleGraph::subdivision_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    const auto& es = base_.edges();
    auto it = std::lower_bound(es.begin(), es.end(), Edge{i, j});
    if (it == es.end() || *it != Edge{i, j})
        throw std::invalid_argument("MiddleGraph: base graph has no edge {" + std::to_string(i) +
                                    "," + std::to_string(j) + "}");
    return base_.order() + static_cast<int>(it - es.begin());
}

bool MiddleGraph::is_subdivision(int v) const {
    if (v < 0 || v >= graph_.order())
        throw std::out_of_range("MiddleGraph: vertex " + std::to_string(v) + " out of range");
    return v >= base_.order();
}

VertexSet subdivision_vertices(const MiddleGraph& mg) {
    VertexSet s(mg.graph().order());
    for (int v = mg.base_order(); v < mg.graph().order(); ++v) s.add(v);
    return s;
}

Graph line_graph(const Graph& g) {
    std::vector<Edge> es;
    for (int k = 0; k < g.size(); ++k)
        for (int l = k + 1; l < g.size(); ++l) {
            auto [a, b] = g.edges()[k];
            auto [c, d] = g.edges()[l];
            if (a == c || a == d || b == c || b == d) es.push_back({k, l});
        }
    return Graph(g.size(), es);
}

Graph join(const Graph& g, const Graph& h) {
    const int n = g.order();
    std::vector<Edge> es = g.edges();
    for (auto [u, v] : h.edges()) es.push_back({n + u, n + v});
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < h.order(); ++v) es.push_back({u, n + v});
    return Graph(n + h.order(), es);
}

DeletionResult delete_vertex(const Graph& g, int t) {
    if (t < 0 || t >= g.order())
        throw std::out_of_range("delete_vertex: vertex " + std::to_string(t) + " out of range");
    std::vector<int> old_to_new(g.order());
    for (int v = 0; v < g.order(); ++v)
        old_to_new[v] = v == t ? kDeletedVertex : (v < t ? v : v - 1);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (u != t && v != t) es.push_back({old_to_new[u], old_to_new[v]});
    return {Graph(g.order() - 1, es), old_to_new};
}

std::string middle_graph_to_json(const MiddleGraph& mg) {
    nlohmann::json j;
    j["n"] = mg.graph().order();
    j["m"] = mg.graph().size();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : mg.graph().edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    auto prov = nlohmann::json::array();
    for (const auto& p : mg.provenance()) {
        if (p.kind == Provenance::Kind::Original)
            prov.push_back({{"kind", "orig"}, {"i", p.i}});
        else
            prov.push_back({{"kind", "sub"}, {"i", p.i}, {"j", p.j}});
    }
    j["provenance"] = std::move(prov);
    return j.dump();
}

}  // namespace mgdom
