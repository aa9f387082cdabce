#pragma once

#include <string>
#include <vector>

#include "mgdom/graph.hpp"
#include "mgdom/vertex_set.hpp"

namespace mgdom {

// Where a vertex of a derived graph came from.
struct Provenance {
    enum class Kind { Original, Subdivision };
    Kind kind = Kind::Original;
    int i = -1;  // original vertex, or smaller endpoint of the subdivided edge
    int j = -1;  // larger endpoint of the subdivided edge (Subdivision only)

    bool operator==(const Provenance&) const = default;
};

// Middle graph of a base graph: one extra vertex per edge, placed "on" that
// edge, with the edge vertices of a common endpoint also joined to each
// other. Vertices 0..n-1 are the originals (same labels as the base graph);
// vertices n..n+m-1 are the edge vertices, appended in lexicographic order
// of the base edge list.
//
// Originals keep their base-graph degree but form an independent set here;
// the edge vertices induce the line graph of the base.
class MiddleGraph {
public:
    explicit MiddleGraph(const Graph& base);

    const Graph& graph() const { return graph_; }
    const Graph& base() const { return base_; }
    const std::vector<Provenance>& provenance() const { return provenance_; }

    int base_order() const { return base_.order(); }
    int base_size() const { return base_.size(); }

    // Vertex of the middle graph carrying original vertex i (identity map).
    int original_vertex(int i) const;

    // Vertex of the middle graph carrying base edge {i,j}; endpoint order
    // does not matter. Throws if the base has no such edge.
    int subdivision_index(int i, int j) const;

    bool is_subdivision(int v) const;

private:
    Graph base_;
    Graph graph_;
    std::vector<Provenance> provenance_;
};

// All edge vertices of a middle graph, as a set over its vertex universe.
VertexSet subdivision_vertices(const MiddleGraph& mg);

// Line graph: one vertex per base edge (lexicographic edge order), adjacent
// when the base edges share an endpoint.
Graph line_graph(const Graph& g);

// Join: disjoint union of g (labels kept) and h (labels shifted by |V(g)|),
// plus every cross edge.
Graph join(const Graph& g, const Graph& h);

// Vertex deletion with the induced relabeling: vertices above t shift down
// by one. old_to_new[t] == kDeletedVertex.
inline constexpr int kDeletedVertex = -1;

struct DeletionResult {
    Graph graph;
    std::vector<int> old_to_new;
};

DeletionResult delete_vertex(const Graph& g, int t);

// JSON round-trip for a middle graph, including provenance:
//   {"n":…, "m":…, "edges":[[u,v],…], "provenance":[{"kind":"orig","i":…} |
//    {"kind":"sub","i":…,"j":…}, …]}
std::string middle_graph_to_json(const MiddleGraph& mg);

}  // namespace mgdom
