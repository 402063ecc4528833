#include "eumin/fourreg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eumin/enumerate.hpp"
#include "eumin/eulerian.hpp"
#include "eumin/isomorphism.hpp"
#include "eumin/obstructions.hpp"
#include "eumin/peripheral.hpp"

namespace eumin {
namespace {

void check_reducible(const Multigraph& g) {
    if (g.free_loops() != 0) throw PreconditionError("reduction expects no free-loops");
    if (!is_connected(g)) throw PreconditionError("graph is not connected");
    if (!is_k_regular(g, 4)) throw PreconditionError("graph is not 4-regular");
    if (!planar(g)) throw PreconditionError("graph is not planar");
}

bool good_reduced(const Multigraph& g) {
    return is_connected(g) && is_k_regular(g, 4) && planar(g);
}

} // namespace

std::pair<Multigraph, ReductionStep> reduce_step(const Multigraph& g) {
    check_reducible(g);
    if (g.vertex_count() < 2)
        throw PreconditionError("graph is already the one-vertex double loop");
    for (const DemotionSite& site : enumerate_demotions(g)) {
        Multigraph demoted = admissible_demotion(g, site.vertex, site.h1, site.h2, site.witness);
        // demotion never renumbers vertices
        VertexId v = site.vertex;
        for (EdgeId f : demoted.incident_edges(v)) {
            if (demoted.is_loop(f)) continue;
            Multigraph result = contract_edge(demoted, f);
            if (!good_reduced(result)) continue;
            ReductionStep step;
            step.demote = DemoteOp{site.vertex, site.h1, site.h2, site.witness.edges};
            step.contracted = f;
            // replay metadata: ids in the result graph
            IdMaps cmap = id_maps(demoted, ContractOp{f});
            EdgeId e1 = half_edge_owner(site.h1), e2 = half_edge_owner(site.h2);
            if (e1 != e2) {
                EdgeId fused = demoted.edge_count() - 1; // appended by the demotion
                step.fused_image = cmap.edge[fused];
            }
            EdgeId other = -1;
            for (EdgeId h : demoted.incident_edges(v))
                if (h != f) other = h;
            step.other_image = other >= 0 ? cmap.edge[other] : -1;
            return {result, step};
        }
    }
    throw PreconditionError("no reduction step applies"); // contradicts 4-regular planarity
}

ReductionTrace reduce_to_b2(const Multigraph& g) {
    check_reducible(g);
    ReductionTrace out;
    TraceBuilder tb(g);
    while (tb.current().vertex_count() > 1) {
        auto [next, step] = reduce_step(tb.current());
        tb.push(step.demote);
        tb.push(ContractOp{step.contracted});
        if (!(tb.current() == next)) throw PreconditionError("reduction replay mismatch");
        out.steps.push_back(step);
    }
    out.trace = tb.finish();
    return out;
}

int free_loop_seeds_required(const ReductionTrace& t) {
    int k = 0;
    for (const ReductionStep& s : t.steps)
        if (s.fused_image < 0) ++k;
    return k;
}

namespace {

// forward intermediates: graph after each full reduction step
std::vector<Multigraph> forward_states(const ReductionTrace& t) {
    std::vector<Multigraph> states{t.trace.source};
    Multigraph cur = t.trace.source;
    for (const ReductionStep& s : t.steps) {
        cur = apply_op(cur, s.demote);
        cur = apply_op(cur, ContractOp{s.contracted});
        states.push_back(cur);
    }
    return states;
}

// rotation updates that keep an embedding planar through the replay ops
RotationSystem rot_after_subdivide(const Multigraph& pre, const RotationSystem& rot, EdgeId e) {
    // pre has edge e = (u, w); after: e = (u, z), new edge m = (z, w).
    // u keeps half-edge 2e in place; w's old 2e+1 slot now holds 2m+1.
    EdgeId m = pre.edge_count();
    RotationSystem out = rot;
    out.order.emplace_back(); // vertex z
    out.order.back() = {2 * e + 1, 2 * m};
    for (auto& cyc : out.order)
        for (HalfEdgeId& h : cyc)
            if (h == 2 * e + 1 && &cyc != &out.order.back()) h = 2 * m + 1; // w keeps its slot
    return out;
}

RotationSystem rot_after_subdivide_free_loop(const Multigraph& pre, const RotationSystem& rot) {
    EdgeId m = pre.edge_count();
    RotationSystem out = rot;
    out.order.push_back({2 * m, 2 * m + 1});
    return out;
}

RotationSystem rot_after_merge(const Multigraph& pre, const RotationSystem& rot, VertexId u,
                               VertexId w) {
    VertexId lo = std::min(u, w), hi = std::max(u, w);
    RotationSystem out;
    out.order.assign(pre.vertex_count() - 1, {});
    for (VertexId v = 0; v < pre.vertex_count(); ++v) {
        if (v == u || v == w) continue;
        out.order[v > hi ? v - 1 : v] = rot.order[v];
    }
    // interleave the two degree-2 fans; verified and re-embedded on failure
    std::vector<HalfEdgeId> fan = rot.order[u];
    fan.insert(fan.end(), rot.order[w].rbegin(), rot.order[w].rend());
    out.order[lo] = fan;
    return out;
}

} // namespace

ConstructionReplay construct_replay(const ReductionTrace& t, int free_loop_seeds) {
    // validate the reduction trace itself first
    apply_trace(t.trace);
    if (free_loop_seeds != free_loop_seeds_required(t))
        throw PreconditionError("free-loop seed count does not match the trace");
    std::vector<Multigraph> states = forward_states(t);
    const Multigraph& b2 = states.back();
    if (!is_isomorphic(b2, make_bouquet(2)))
        throw PreconditionError("reduction trace does not end at the one-vertex double loop");

    Multigraph cur(1, free_loop_seeds);
    cur.add_edge(0, 0);
    cur.add_edge(0, 0);
    RotationSystem rot;
    rot.order = {{0, 1, 2, 3}};
    std::vector<ConstructionStep> steps;
    TraceBuilder construction(cur);

    // unconsumed seeds ride along as free-loops; strip them for comparisons
    auto sans_seeds = [](Multigraph g) {
        g.set_free_loops(0);
        return g;
    };

    for (int k = static_cast<int>(t.steps.size()) - 1; k >= 0; --k) {
        const ReductionStep& rstep = t.steps[k];
        const Multigraph& pre_state = states[k + 1]; // the step's result graph
        // translate recorded ids into the replayed labeling
        std::vector<int> vmap = isomorphism_map(pre_state, sans_seeds(cur));
        auto edge_image = [&](EdgeId e) {
            auto [a, b] = pre_state.endpoints(e);
            VertexId u = vmap[a], w = vmap[b];
            int skip = 0;
            for (EdgeId f = 0; f < e; ++f) {
                auto [p, q] = pre_state.endpoints(f);
                if ((vmap[p] == u && vmap[q] == w) || (vmap[p] == w && vmap[q] == u)) ++skip;
            }
            for (EdgeId f = 0; f < cur.edge_count(); ++f) {
                auto [p, q] = cur.endpoints(f);
                if ((p == u && q == w) || (p == w && q == u)) {
                    if (skip == 0) return f;
                    --skip;
                }
            }
            throw PreconditionError("edge image not found");
        };

        ConstructionStep cstep;
        // 1. un-contract: subdivide the image of the demoted vertex's other edge
        EdgeId other = edge_image(rstep.other_image);
        cstep.subdivide_coface = other;
        Multigraph pre1 = cur;
        VertexId v1 = pre1.vertex_count();
        construction.push(SubdivideOp{other});
        Multigraph g1 = construction.current();
        RotationSystem rot1 = rot_after_subdivide(pre1, rot, other);
        // 2. un-demote: subdivide the fused edge's image, or consume a seed
        VertexId v2 = g1.vertex_count();
        RotationSystem rot2;
        if (rstep.fused_image >= 0) {
            EdgeId fused = edge_image(rstep.fused_image);
            cstep.subdivide_peripheral = fused;
            // find a peripheral cycle through the fused edge for the record
            for (const Cycle& c : enumerate_cycles(pre1)) {
                if (std::find(c.edges.begin(), c.edges.end(), fused) == c.edges.end()) continue;
                if (is_peripheral(pre1, c)) {
                    cstep.witness = c.edges;
                    break;
                }
            }
            construction.push(SubdivideOp{fused});
            rot2 = rot_after_subdivide(g1, rot1, fused);
        } else {
            construction.push(SubdivideFreeLoopOp{});
            rot2 = rot_after_subdivide_free_loop(g1, rot1);
        }
        Multigraph g2 = construction.current();
        // 3. merge the two fresh degree-2 vertices
        construction.push(MergeOp{v1, v2});
        Multigraph merged = construction.current();
        RotationSystem rotm = rot_after_merge(g2, rot2, v1, v2);
        if (!rotation_is_planar(merged, rotm)) {
            PlanarityResult p = is_planar(merged);
            if (!std::holds_alternative<RotationSystem>(p))
                throw PreconditionError("construction step left the plane");
            rotm = std::get<RotationSystem>(p);
        }
        // record the co-face boundary through the first subdivided edge
        for (const auto& walk : faces(merged, rotm)) {
            bool touches = false;
            for (HalfEdgeId h : walk) touches |= (half_edge_owner(h) == cstep.subdivide_coface);
            if (touches) {
                cstep.coface_walk = walk;
                break;
            }
        }
        cur = std::move(merged);
        rot = std::move(rotm);
        // cross-check against the forward intermediate
        if (!is_isomorphic(sans_seeds(cur), states[k]))
            throw PreconditionError("construction replay diverged from the reduction");
        steps.push_back(std::move(cstep));
    }
    std::reverse(steps.begin(), steps.end());
    ConstructionReplay out;
    out.graph = cur;
    out.steps = std::move(steps);
    out.trace = construction.finish();
    return out;
}

std::vector<Multigraph> generate_4rp(int n) {
    if (n < 1 || n > 6) throw BoundError("generation is bounded to 1 <= n <= 6");
    std::map<std::string, Multigraph> level;
    Multigraph b2 = make_bouquet(2);
    level.emplace(canonical_code(b2), b2);
    for (int k = 1; k < n; ++k) {
        std::map<std::string, Multigraph> next;
        for (auto& [code, g] : level) {
            // subdivide e and e', merge the two new vertices
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                for (EdgeId f = 0; f < g.edge_count(); ++f) {
                    if (e == f) continue;
                    auto [g1, v1] = subdivide_edge(g, e);
                    auto [g2, v2] = subdivide_edge(g1, f);
                    Multigraph h = merge_degree2_vertices(g2, v1, v2);
                    if (!is_k_regular(h, 4) || !is_connected(h) || !planar(h)) continue;
                    Multigraph canon = canonical_graph(h);
                    next.emplace(canonical_code(canon), std::move(canon));
                }
            // subdivide e and a free-loop seed, merge (pendant loop)
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                Multigraph seeded = g;
                seeded.set_free_loops(1);
                auto [g1, v1] = subdivide_edge(seeded, e);
                auto [g2, v2] = subdivide_free_loop(g1);
                Multigraph h = merge_degree2_vertices(g2, v1, v2);
                if (!is_k_regular(h, 4) || !is_connected(h) || !planar(h)) continue;
                Multigraph canon = canonical_graph(h);
                next.emplace(canonical_code(canon), std::move(canon));
            }
        }
        level = std::move(next);
    }
    std::vector<Multigraph> out;
    for (auto& [code, g] : level) out.push_back(g);
    return out;
}

} // namespace eumin
