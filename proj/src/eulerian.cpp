#include "eumin/eulerian.hpp"

#include <algorithm>
#include <map>

namespace eumin {

bool is_eulerian(const Multigraph& g) {
    auto d = g.degrees();
    return std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; });
}

namespace {

void require_no_free_loops(const Multigraph& g, const char* what) {
    if (g.free_loops() != 0)
        throw PreconditionError(std::string(what) + " is not defined on graphs with free-loops");
}

} // namespace

std::vector<Cycle> cycle_decomposition_on(const Multigraph& g, const std::set<EdgeId>& edges) {
    for (EdgeId e : edges)
        if (!g.has_edge(e)) throw PreconditionError("unknown edge id " + std::to_string(e));
    // degrees within the subset must all be even
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId e : edges) {
        auto [a, b] = g.endpoints(e);
        ++deg[a];
        ++deg[b];
    }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d % 2; }))
        throw PreconditionError("edge set does not span an Eulerian subgraph");

    std::set<EdgeId> remaining(edges);
    std::vector<Cycle> out;
    std::vector<VertexId> walk;
    std::vector<EdgeId> walk_edges;

    auto incident_remaining = [&](VertexId v) -> EdgeId {
        for (EdgeId e : remaining) {
            auto [a, b] = g.endpoints(e);
            if (a == v || b == v) return e;
        }
        return -1;
    };

    while (!remaining.empty()) {
        if (walk.empty()) {
            EdgeId e0 = *remaining.begin();
            walk.push_back(g.endpoints(e0).first);
        }
        VertexId u = walk.back();
        EdgeId e = incident_remaining(u);
        if (e < 0) throw PreconditionError("walk stalled; edge set is not Eulerian");
        auto [a, b] = g.endpoints(e);
        VertexId w = (a == u) ? b : a;
        remaining.erase(e);
        auto it = std::find(walk.begin(), walk.end(), w);
        if (it != walk.end()) {
            // close the cycle from the previous occurrence of w
            std::size_t i = static_cast<std::size_t>(it - walk.begin());
            Cycle c;
            c.vertices.assign(walk.begin() + i, walk.end());
            c.edges.assign(walk_edges.begin() + i, walk_edges.end());
            c.edges.push_back(e);
            out.push_back(std::move(c));
            walk.resize(i + 1);
            walk_edges.resize(i);
            if (walk.size() == 1 && incident_remaining(walk[0]) < 0) walk.clear();
        } else {
            walk.push_back(w);
            walk_edges.push_back(e);
        }
    }
    return out;
}

std::vector<Cycle> cycle_decomposition(const Multigraph& g) {
    require_no_free_loops(g, "cycle decomposition");
    if (!is_eulerian(g)) throw PreconditionError("graph is not Eulerian");
    std::set<EdgeId> all;
    for (EdgeId e = 0; e < g.edge_count(); ++e) all.insert(e);
    return cycle_decomposition_on(g, all);
}

Trace eulerian_subgraph_as_minor(const Multigraph& g, const std::set<EdgeId>& h_edges) {
    require_no_free_loops(g, "subgraph-as-minor");
    if (!is_eulerian(g)) throw PreconditionError("graph is not Eulerian");
    std::set<EdgeId> complement;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!h_edges.count(e)) complement.insert(e);
    for (EdgeId e : h_edges)
        if (!g.has_edge(e)) throw PreconditionError("unknown edge id " + std::to_string(e));

    // validates that h spans an Eulerian subgraph (complement of Eulerian)
    std::vector<int> hdeg(g.vertex_count(), 0);
    for (EdgeId e : h_edges) {
        auto [a, b] = g.endpoints(e);
        ++hdeg[a];
        ++hdeg[b];
    }
    if (std::any_of(hdeg.begin(), hdeg.end(), [](int d) { return d % 2; }))
        throw PreconditionError("edge set does not span an Eulerian subgraph");

    auto cycles = cycle_decomposition_on(g, complement);
    TraceBuilder tb(g);
    // edge ids shift as cycles are deleted; remap the pending ones
    std::vector<std::vector<EdgeId>> pending;
    for (const Cycle& c : cycles) pending.push_back(c.edges);
    for (std::size_t i = 0; i < pending.size(); ++i) {
        IdMaps maps = tb.push(DeleteCycleOp{pending[i]});
        for (std::size_t j = i + 1; j < pending.size(); ++j)
            for (EdgeId& e : pending[j]) e = maps.edge[e];
    }
    // delete isolated vertices not meeting h, in decreasing id order
    const Multigraph& cur = tb.current();
    std::vector<char> keeps(cur.vertex_count(), 0);
    for (EdgeId e = 0; e < cur.edge_count(); ++e) {
        auto [a, b] = cur.endpoints(e);
        keeps[a] = keeps[b] = 1;
    }
    for (VertexId v = cur.vertex_count() - 1; v >= 0; --v)
        if (!keeps[v]) tb.push(DeleteVertexOp{v});
    return tb.finish();
}

Trace k2_obstruction(const Multigraph& g) {
    require_no_free_loops(g, "the K2 obstruction");
    if (is_eulerian(g)) throw PreconditionError("graph is Eulerian; no K2 obstruction exists");
    TraceBuilder tb(g);
    // delete edge-disjoint cycles until none remain
    for (;;) {
        auto cycles = enumerate_cycles(tb.current());
        if (cycles.empty()) break;
        tb.push(DeleteCycleOp{cycles.front().edges});
    }
    // forest with at least one edge; contract everything except edge 0.
    // Forest edges are never loops, and taking the largest id keeps edge 0
    // stable under renumbering.
    while (tb.current().edge_count() > 1) tb.push(ContractOp{tb.current().edge_count() - 1});
    // delete every isolated vertex
    for (;;) {
        const Multigraph& cur = tb.current();
        VertexId victim = -1;
        for (VertexId v = cur.vertex_count() - 1; v >= 0; --v)
            if (cur.degree(v) == 0) {
                victim = v;
                break;
            }
        if (victim < 0) break;
        tb.push(DeleteVertexOp{victim});
    }
    return tb.finish();
}

} // namespace eumin
