#include "eumin/cycle.hpp"

#include <algorithm>
#include <set>

namespace eumin {

Cycle cycle_from_edges(const Multigraph& g, const std::vector<EdgeId>& edges) {
    if (edges.empty()) throw PreconditionError("a cycle has at least one edge");
    for (EdgeId e : edges)
        if (!g.has_edge(e)) throw PreconditionError("unknown edge id " + std::to_string(e));
    {
        std::set<EdgeId> s(edges.begin(), edges.end());
        if (s.size() != edges.size()) throw PreconditionError("cycle reuses an edge");
    }
    Cycle c;
    c.edges = edges;
    if (edges.size() == 1) {
        auto [a, b] = g.endpoints(edges[0]);
        if (a != b) throw PreconditionError("a length-1 cycle must be a loop");
        c.vertices = {a};
        return c;
    }
    // orient the first edge so that it meets the second
    auto [a0, b0] = g.endpoints(edges[0]);
    auto [a1, b1] = g.endpoints(edges[1]);
    VertexId start, next;
    if (b0 == a1 || b0 == b1) {
        start = a0;
        next = b0;
    } else if (a0 == a1 || a0 == b1) {
        start = b0;
        next = a0;
    } else {
        throw PreconditionError("cycle edges 0 and 1 do not share a vertex");
    }
    c.vertices.push_back(start);
    VertexId cur = next;
    for (std::size_t i = 1; i < edges.size(); ++i) {
        c.vertices.push_back(cur);
        auto [a, b] = g.endpoints(edges[i]);
        if (a == cur)
            cur = b;
        else if (b == cur)
            cur = a;
        else
            throw PreconditionError("cycle is an open walk at edge index " + std::to_string(i));
    }
    if (cur != start) throw PreconditionError("cycle does not return to its start");
    std::set<VertexId> vs(c.vertices.begin(), c.vertices.end());
    if (vs.size() != c.vertices.size()) throw PreconditionError("cycle repeats a vertex");
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (g.is_loop(edges[i]) && edges.size() > 1)
            throw PreconditionError("a loop cannot lie on a longer cycle");
    return c;
}

bool is_valid_cycle(const Multigraph& g, const Cycle& c) {
    try {
        Cycle rebuilt = cycle_from_edges(g, c.edges);
        // same cyclic vertex set and consistent length
        if (rebuilt.vertices.size() != c.vertices.size()) return false;
        std::set<VertexId> a(rebuilt.vertices.begin(), rebuilt.vertices.end());
        std::set<VertexId> b(c.vertices.begin(), c.vertices.end());
        return a == b;
    } catch (const PreconditionError&) {
        return false;
    }
}

void check_cycle(const Multigraph& g, const Cycle& c) {
    Cycle rebuilt = cycle_from_edges(g, c.edges);
    std::set<VertexId> a(rebuilt.vertices.begin(), rebuilt.vertices.end());
    std::set<VertexId> b(c.vertices.begin(), c.vertices.end());
    if (a != b) throw PreconditionError("cycle vertex list does not match its edges");
}

bool cycle_routes_through(const Cycle& c, VertexId v, EdgeId e1, EdgeId e2) {
    int k = c.length();
    if (k == 1) return c.vertices[0] == v && c.edges[0] == e1 && c.edges[0] == e2;
    for (int i = 0; i < k; ++i) {
        if (c.vertices[i] != v) continue;
        EdgeId in = c.edges[(i + k - 1) % k], out = c.edges[i];
        if ((in == e1 && out == e2) || (in == e2 && out == e1)) return true;
    }
    return false;
}

std::vector<EdgeId> cycle_canonical_key(const Cycle& c) {
    const auto& e = c.edges;
    int k = static_cast<int>(e.size());
    std::vector<EdgeId> best;
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<EdgeId> seq(e);
        if (dir) std::reverse(seq.begin(), seq.end());
        for (int r = 0; r < k; ++r) {
            std::rotate(seq.begin(), seq.begin() + 1, seq.end());
            if (best.empty() || seq < best) best = seq;
        }
    }
    return best;
}

namespace {

void cycles_from(const Multigraph& g, VertexId s,
                 const std::vector<std::vector<std::pair<VertexId, EdgeId>>>& adj,
                 std::vector<Cycle>& out) {
    // vertex-simple cycles of length >= 3 whose minimum vertex is s,
    // one orientation each (second vertex < last vertex)
    std::vector<VertexId> path{s};
    std::vector<EdgeId> edges;
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[s] = 1;

    auto rec = [&](auto&& self, VertexId cur) -> void {
        for (auto [w, e] : adj[cur]) {
            if (w < s) continue;
            if (w == s) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    Cycle c;
                    c.vertices = path;
                    c.edges = edges;
                    c.edges.push_back(e);
                    out.push_back(std::move(c));
                }
                continue;
            }
            if (on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            edges.push_back(e);
            self(self, w);
            edges.pop_back();
            path.pop_back();
            on_path[w] = 0;
        }
    };
    rec(rec, s);
}

} // namespace

std::vector<Cycle> enumerate_cycles(const Multigraph& g) {
    if (g.vertex_count() > 10)
        throw BoundError("cycle enumeration is bounded to graphs with at most 10 vertices");
    std::vector<Cycle> out;
    // loops
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) out.push_back(Cycle{{e}, {g.endpoints(e).first}});
    // digons: unordered pairs of distinct parallel edges
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e)) continue;
        auto [u, w] = g.endpoints(e);
        for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
            auto [a, b] = g.endpoints(f);
            if ((a == u && b == w) || (a == w && b == u))
                out.push_back(Cycle{{e, f}, {std::min(u, w), std::max(u, w)}});
        }
    }
    // longer cycles
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (a == b) continue;
        adj[a].emplace_back(b, e);
        adj[b].emplace_back(a, e);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    for (VertexId s = 0; s < g.vertex_count(); ++s) cycles_from(g, s, adj, out);

    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.edges < b.edges;
    });
    return out;
}

Multigraph delete_cycle(const Multigraph& g, const Cycle& c) {
    check_cycle(g, c);
    return delete_edges(g, c.edges);
}

} // namespace eumin
