#pragma once

#include <utility>
#include <vector>

#include "eumin/errors.hpp"

namespace eumin {

using VertexId = int;
using EdgeId = int;
using HalfEdgeId = int;

inline HalfEdgeId twin_half_edge(HalfEdgeId h) { return h ^ 1; }
inline EdgeId half_edge_owner(HalfEdgeId h) { return h >> 1; }

/// Undirected multigraph with dense vertex ids 0..n-1 and dense edge ids
/// 0..m-1. Edge e owns half-edges 2e (at endpoint a) and 2e+1 (at endpoint
/// b); for a loop both sit at the same vertex. free_loops counts
/// closed-curve components carrying no vertex and no edge.
///
/// Values are immutable in practice: mutating operations live as free
/// functions returning new graphs, so instances can be shared across
/// threads read-only.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertices, int free_loops = 0);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int half_edge_count() const { return 2 * edge_count(); }
    int free_loops() const { return free_loops_; }

    VertexId add_vertex();
    EdgeId add_edge(VertexId a, VertexId b);
    void set_free_loops(int k);

    std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
    bool is_loop(EdgeId e) const;
    bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }
    bool has_edge(EdgeId e) const { return e >= 0 && e < edge_count(); }

    /// Vertex a half-edge sits at.
    VertexId half_edge_vertex(HalfEdgeId h) const;
    /// The v-side half-edge of edge e. For a loop this is 2e.
    HalfEdgeId half_edge_at(EdgeId e, VertexId v) const;

    /// Number of half-edges at v; a loop contributes 2.
    int degree(VertexId v) const;
    std::vector<int> degrees() const;

    /// Incident edges in ascending id order; a loop appears once.
    std::vector<EdgeId> incident_edges(VertexId v) const;
    /// u != w: number of u-w edges. u == w: number of loops at u.
    int multiplicity(VertexId u, VertexId w) const;
    int loop_count(VertexId v) const;

    bool operator==(const Multigraph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    int free_loops_ = 0;

    void check_vertex(VertexId v) const;
    void check_edge(EdgeId e) const;
};

/// Sorted degree multiset; length equals vertex_count, sum is 2*edge_count.
std::vector<int> degree_sequence(const Multigraph& g);

/// Vertex components only; free-loops are not counted here.
int component_count(const Multigraph& g);
/// Component index per vertex, in discovery order from vertex 0.
std::vector<int> component_labels(const Multigraph& g);
/// One vertex component and no free-loops.
bool is_connected(const Multigraph& g);

bool is_k_regular(const Multigraph& g, int k);

/// Contract a non-loop edge e = xy into a new vertex z. z takes the slot
/// min(x,y); vertices above max(x,y) shift down by one; edge e is removed
/// and edges above it shift down by one. Other x-y parallels become loops
/// at z. degree(z) = degree(x) + degree(y) - 2.
Multigraph contract_edge(const Multigraph& g, EdgeId e);

/// Delete a degree-0 vertex; vertices above it shift down by one.
Multigraph delete_isolated_vertex(const Multigraph& g, VertexId v);

/// Delete a set of distinct edges; surviving edges keep relative order and
/// are renumbered densely.
Multigraph delete_edges(const Multigraph& g, std::vector<EdgeId> edges);

/// Replace edge e = (u,w) by a path u - z - w through a fresh vertex
/// z = n. Edge e keeps its id and becomes (u,z); the new edge (z,w) gets
/// id m. Subdividing a loop yields a digon.
std::pair<Multigraph, VertexId> subdivide_edge(const Multigraph& g, EdgeId e);

/// Consume one free-loop, producing a fresh vertex carrying one loop.
std::pair<Multigraph, VertexId> subdivide_free_loop(const Multigraph& g);

/// Merge two distinct degree-2 vertices into one degree-4 vertex (slot
/// min(u,w), shift above max). A u-w edge becomes a loop.
Multigraph merge_degree2_vertices(const Multigraph& g, VertexId u, VertexId w);

} // namespace eumin
