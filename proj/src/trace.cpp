#include "eumin/trace.hpp"

#include <algorithm>

#include "eumin/isomorphism.hpp"
#include "eumin/peripheral.hpp"

namespace eumin {

bool is_minor_op(const TraceOp& op) {
    return std::holds_alternative<ContractOp>(op) || std::holds_alternative<DeleteCycleOp>(op) ||
           std::holds_alternative<DeleteVertexOp>(op);
}

bool is_minor_star_op(const TraceOp& op) {
    return is_minor_op(op) || std::holds_alternative<DemoteOp>(op);
}

Multigraph apply_op(const Multigraph& g, const TraceOp& op) {
    return std::visit(
        [&](const auto& o) -> Multigraph {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, ContractOp>) {
                return contract_edge(g, o.edge);
            } else if constexpr (std::is_same_v<T, DeleteCycleOp>) {
                return delete_cycle(g, cycle_from_edges(g, o.edges));
            } else if constexpr (std::is_same_v<T, DeleteVertexOp>) {
                return delete_isolated_vertex(g, o.vertex);
            } else if constexpr (std::is_same_v<T, DemoteOp>) {
                Cycle w = cycle_from_edges(g, o.witness);
                return admissible_demotion(g, o.vertex, o.h1, o.h2, w);
            } else if constexpr (std::is_same_v<T, SubdivideOp>) {
                return subdivide_edge(g, o.edge).first;
            } else if constexpr (std::is_same_v<T, SubdivideFreeLoopOp>) {
                return subdivide_free_loop(g).first;
            } else {
                static_assert(std::is_same_v<T, MergeOp>);
                return merge_degree2_vertices(g, o.u, o.w);
            }
        },
        op);
}

Multigraph apply_trace(const Trace& t) {
    Multigraph g = t.source;
    for (std::size_t k = 0; k < t.ops.size(); ++k) {
        try {
            g = apply_op(g, t.ops[k]);
        } catch (const PreconditionError& e) {
            throw TraceError(static_cast<int>(k), e.what());
        }
    }
    if (!is_isomorphic(g, t.target))
        throw TraceError(static_cast<int>(t.ops.size()),
                         "final graph is not isomorphic to the recorded target");
    return g;
}

IdMaps id_maps(const Multigraph& pre, const TraceOp& op) {
    IdMaps m;
    int n = pre.vertex_count(), me = pre.edge_count();
    m.vertex.resize(n);
    m.edge.resize(me);
    for (int v = 0; v < n; ++v) m.vertex[v] = v;
    for (int e = 0; e < me; ++e) m.edge[e] = e;

    auto shift_vertex_removed = [&](VertexId gone) {
        for (int v = 0; v < n; ++v) {
            if (v == gone)
                m.vertex[v] = -1;
            else if (m.vertex[v] > gone)
                --m.vertex[v];
        }
    };
    auto shift_edges_removed = [&](std::vector<EdgeId> gone) {
        std::sort(gone.begin(), gone.end());
        for (int e = 0; e < me; ++e) {
            if (std::binary_search(gone.begin(), gone.end(), e)) {
                m.edge[e] = -1;
            } else {
                int below = static_cast<int>(
                    std::lower_bound(gone.begin(), gone.end(), e) - gone.begin());
                m.edge[e] = e - below;
            }
        }
    };

    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, ContractOp>) {
                auto [x, y] = pre.endpoints(o.edge);
                VertexId lo = std::min(x, y), hi = std::max(x, y);
                for (int v = 0; v < n; ++v) {
                    if (v == x || v == y)
                        m.vertex[v] = lo;
                    else if (v > hi)
                        --m.vertex[v];
                }
                shift_edges_removed({o.edge});
            } else if constexpr (std::is_same_v<T, DeleteCycleOp>) {
                shift_edges_removed(o.edges);
            } else if constexpr (std::is_same_v<T, DeleteVertexOp>) {
                shift_vertex_removed(o.vertex);
            } else if constexpr (std::is_same_v<T, DemoteOp>) {
                EdgeId e1 = half_edge_owner(o.h1), e2 = half_edge_owner(o.h2);
                if (e1 == e2)
                    shift_edges_removed({e1});
                else
                    shift_edges_removed({e1, e2}); // fused edge appended as id m-2
            } else if constexpr (std::is_same_v<T, SubdivideOp>) {
                // edge keeps its id; new vertex n, new edge m appended
            } else if constexpr (std::is_same_v<T, SubdivideFreeLoopOp>) {
                // new vertex n, new edge m appended
            } else {
                static_assert(std::is_same_v<T, MergeOp>);
                VertexId lo = std::min(o.u, o.w), hi = std::max(o.u, o.w);
                for (int v = 0; v < n; ++v) {
                    if (v == o.u || v == o.w)
                        m.vertex[v] = lo;
                    else if (v > hi)
                        --m.vertex[v];
                }
            }
        },
        op);
    return m;
}

IdMaps TraceBuilder::push(const TraceOp& op) {
    IdMaps maps = id_maps(current_, op);
    current_ = apply_op(current_, op);
    ops_.push_back(op);
    return maps;
}

} // namespace eumin
