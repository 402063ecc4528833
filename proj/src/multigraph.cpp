#include "eumin/multigraph.hpp"

#include <algorithm>
#include <numeric>

namespace eumin {

Multigraph::Multigraph(int vertices, int free_loops)
    : n_(vertices), free_loops_(free_loops) {
    if (vertices < 0 || free_loops < 0)
        throw PreconditionError("vertex and free-loop counts must be non-negative");
}

VertexId Multigraph::add_vertex() { return n_++; }

EdgeId Multigraph::add_edge(VertexId a, VertexId b) {
    check_vertex(a);
    check_vertex(b);
    edges_.emplace_back(a, b);
    return edge_count() - 1;
}

void Multigraph::set_free_loops(int k) {
    if (k < 0) throw PreconditionError("free-loop count must be non-negative");
    free_loops_ = k;
}

std::pair<VertexId, VertexId> Multigraph::endpoints(EdgeId e) const {
    check_edge(e);
    return edges_[e];
}

bool Multigraph::is_loop(EdgeId e) const {
    check_edge(e);
    return edges_[e].first == edges_[e].second;
}

VertexId Multigraph::half_edge_vertex(HalfEdgeId h) const {
    EdgeId e = half_edge_owner(h);
    check_edge(e);
    return (h & 1) ? edges_[e].second : edges_[e].first;
}

HalfEdgeId Multigraph::half_edge_at(EdgeId e, VertexId v) const {
    check_edge(e);
    if (edges_[e].first == v) return 2 * e;
    if (edges_[e].second == v) return 2 * e + 1;
    throw PreconditionError("edge " + std::to_string(e) + " is not incident to vertex " +
                            std::to_string(v));
}

int Multigraph::degree(VertexId v) const {
    check_vertex(v);
    int d = 0;
    for (const auto& [a, b] : edges_) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& [a, b] : edges_) {
        ++d[a];
        ++d[b];
    }
    return d;
}

std::vector<EdgeId> Multigraph::incident_edges(VertexId v) const {
    check_vertex(v);
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edge_count(); ++e)
        if (edges_[e].first == v || edges_[e].second == v) out.push_back(e);
    return out;
}

int Multigraph::multiplicity(VertexId u, VertexId w) const {
    check_vertex(u);
    check_vertex(w);
    int c = 0;
    for (const auto& [a, b] : edges_) {
        if (u == w) {
            if (a == u && b == u) ++c;
        } else if ((a == u && b == w) || (a == w && b == u)) {
            ++c;
        }
    }
    return c;
}

int Multigraph::loop_count(VertexId v) const { return multiplicity(v, v); }

void Multigraph::check_vertex(VertexId v) const {
    if (!has_vertex(v))
        throw PreconditionError("unknown vertex id " + std::to_string(v));
}

void Multigraph::check_edge(EdgeId e) const {
    if (!has_edge(e))
        throw PreconditionError("unknown edge id " + std::to_string(e));
}

std::vector<int> degree_sequence(const Multigraph& g) {
    std::vector<int> d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<int> component_labels(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<VertexId>> adj(n);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (a != b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    std::vector<int> label(n, -1);
    int next = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        std::vector<VertexId> stack{s};
        label[s] = next;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : adj[v])
                if (label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

int component_count(const Multigraph& g) {
    auto label = component_labels(g);
    return label.empty() ? 0 : 1 + *std::max_element(label.begin(), label.end());
}

bool is_connected(const Multigraph& g) {
    return g.free_loops() == 0 && g.vertex_count() >= 1 && component_count(g) == 1;
}

bool is_k_regular(const Multigraph& g, int k) {
    auto d = g.degrees();
    return std::all_of(d.begin(), d.end(), [&](int x) { return x == k; });
}

Multigraph contract_edge(const Multigraph& g, EdgeId e) {
    auto [x, y] = g.endpoints(e);
    if (x == y) throw PreconditionError("cannot contract a loop");
    VertexId lo = std::min(x, y), hi = std::max(x, y);
    auto map_v = [&](VertexId v) {
        if (v == x || v == y) return lo;
        return v > hi ? v - 1 : v;
    };
    Multigraph out(g.vertex_count() - 1, g.free_loops());
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (f == e) continue;
        auto [a, b] = g.endpoints(f);
        out.add_edge(map_v(a), map_v(b));
    }
    return out;
}

Multigraph delete_isolated_vertex(const Multigraph& g, VertexId v) {
    if (g.degree(v) != 0)
        throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g.degree(v)) + ", expected 0");
    Multigraph out(g.vertex_count() - 1, g.free_loops());
    auto map_v = [&](VertexId u) { return u > v ? u - 1 : u; };
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        auto [a, b] = g.endpoints(f);
        out.add_edge(map_v(a), map_v(b));
    }
    return out;
}

Multigraph delete_edges(const Multigraph& g, std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw PreconditionError("duplicate edge id in deletion set");
    for (EdgeId e : edges)
        if (!g.has_edge(e)) throw PreconditionError("unknown edge id " + std::to_string(e));
    Multigraph out(g.vertex_count(), g.free_loops());
    std::size_t k = 0;
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (k < edges.size() && edges[k] == f) {
            ++k;
            continue;
        }
        auto [a, b] = g.endpoints(f);
        out.add_edge(a, b);
    }
    return out;
}

std::pair<Multigraph, VertexId> subdivide_edge(const Multigraph& g, EdgeId e) {
    auto [u, w] = g.endpoints(e);
    Multigraph out(g.vertex_count(), g.free_loops());
    VertexId z = out.add_vertex();
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        auto [a, b] = g.endpoints(f);
        if (f == e)
            out.add_edge(u, z); // keeps id e; half-edge 2e stays at u
        else
            out.add_edge(a, b);
    }
    out.add_edge(z, w);
    return {out, z};
}

std::pair<Multigraph, VertexId> subdivide_free_loop(const Multigraph& g) {
    if (g.free_loops() < 1) throw PreconditionError("no free-loop to subdivide");
    Multigraph out(g.vertex_count(), g.free_loops() - 1);
    VertexId z = out.add_vertex();
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        auto [a, b] = g.endpoints(f);
        out.add_edge(a, b);
    }
    out.add_edge(z, z);
    return {out, z};
}

Multigraph merge_degree2_vertices(const Multigraph& g, VertexId u, VertexId w) {
    if (u == w) throw PreconditionError("merge requires two distinct vertices");
    if (g.degree(u) != 2 || g.degree(w) != 2)
        throw PreconditionError("merge requires both vertices to have degree 2");
    VertexId lo = std::min(u, w), hi = std::max(u, w);
    auto map_v = [&](VertexId v) {
        if (v == u || v == w) return lo;
        return v > hi ? v - 1 : v;
    };
    Multigraph out(g.vertex_count() - 1, g.free_loops());
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        auto [a, b] = g.endpoints(f);
        out.add_edge(map_v(a), map_v(b));
    }
    return out;
}

} // namespace eumin
