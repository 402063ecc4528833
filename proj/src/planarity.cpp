#include "eumin/planarity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "eumin/peripheral.hpp"

namespace eumin {

void check_rotation_system(const Multigraph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.order.size()) != g.vertex_count())
        throw PreconditionError("rotation system has the wrong number of vertices");
    std::vector<char> seen(g.half_edge_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (HalfEdgeId h : rot.order[v]) {
            if (h < 0 || h >= g.half_edge_count() || seen[h])
                throw PreconditionError("rotation system repeats or misses a half-edge");
            if (g.half_edge_vertex(h) != v)
                throw PreconditionError("half-edge listed at the wrong vertex");
            seen[h] = 1;
        }
    if (std::count(seen.begin(), seen.end(), 1) != g.half_edge_count())
        throw PreconditionError("rotation system misses a half-edge");
}

std::vector<std::vector<HalfEdgeId>> faces(const Multigraph& g, const RotationSystem& rot) {
    check_rotation_system(g, rot);
    // position of each half-edge within its vertex rotation
    std::vector<int> pos(g.half_edge_count(), -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (std::size_t i = 0; i < rot.order[v].size(); ++i) pos[rot.order[v][i]] = static_cast<int>(i);
    auto next_at_vertex = [&](HalfEdgeId h) {
        VertexId v = g.half_edge_vertex(h);
        const auto& cyc = rot.order[v];
        return cyc[(pos[h] + 1) % cyc.size()];
    };
    std::vector<std::vector<HalfEdgeId>> out;
    std::vector<char> visited(g.half_edge_count(), 0);
    for (HalfEdgeId h0 = 0; h0 < g.half_edge_count(); ++h0) {
        if (visited[h0]) continue;
        std::vector<HalfEdgeId> walk;
        HalfEdgeId h = h0;
        do {
            visited[h] = 1;
            walk.push_back(h);
            h = next_at_vertex(twin_half_edge(h));
        } while (h != h0);
        out.push_back(std::move(walk));
    }
    return out;
}

namespace {

int components_with_edges(const Multigraph& g) {
    auto label = component_labels(g);
    std::set<int> with_edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) with_edges.insert(label[g.endpoints(e).first]);
    return static_cast<int>(with_edges.size());
}

} // namespace

int plane_face_count(const Multigraph& g, const RotationSystem& rot) {
    int traced = static_cast<int>(faces(g, rot).size());
    return traced - components_with_edges(g) + 1;
}

bool rotation_is_planar(const Multigraph& g, const RotationSystem& rot) {
    auto walks = faces(g, rot);
    auto label = component_labels(g);
    int ncomp = component_count(g);
    std::vector<int> V(ncomp, 0), E(ncomp, 0), F(ncomp, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) ++V[label[v]];
    for (EdgeId e = 0; e < g.edge_count(); ++e) ++E[label[g.endpoints(e).first]];
    for (const auto& w : walks) ++F[label[g.half_edge_vertex(w[0])]];
    for (int c = 0; c < ncomp; ++c)
        if (E[c] > 0 && V[c] - E[c] + F[c] != 2) return false;
    return true;
}

namespace {

// Simplification: one representative edge per adjacent vertex pair, loops
// dropped. rep[(u,w)] = smallest multigraph edge id.
struct SimpleView {
    std::vector<std::pair<VertexId, VertexId>> edges; // u < w
    std::map<std::pair<VertexId, VertexId>, EdgeId> rep;
};

SimpleView simplify(const Multigraph& g) {
    SimpleView s;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (a == b) continue;
        auto key = std::minmax(a, b);
        if (!s.rep.count(key)) {
            s.rep[{key.first, key.second}] = e;
            s.edges.emplace_back(key.first, key.second);
        }
    }
    return s;
}

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

// Kuratowski witness structuring: classify the edge set of a subdivision,
// find branch vertices and the subdivision paths between them. The raw
// edge set may carry pendant edges; trim vertices of degree <= 1 first.
KuratowskiWitness structure_witness(const Multigraph& g,
                                    const std::vector<std::pair<VertexId, VertexId>>& wit_edges) {
    int n = g.vertex_count();
    SimpleView sv = simplify(g);
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    for (auto [u, w] : wit_edges) {
        auto key = std::minmax(u, w);
        used[key.first][key.second] = 1;
    }
    std::vector<int> deg(n, 0);
    auto recount = [&]() {
        std::fill(deg.begin(), deg.end(), 0);
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w)
                if (used[u][w]) {
                    ++deg[u];
                    ++deg[w];
                }
    };
    recount();
    for (bool trimmed = true; trimmed;) {
        trimmed = false;
        for (int u = 0; u < n; ++u) {
            if (deg[u] > 1 || deg[u] == 0) continue;
            for (int w = 0; w < n; ++w) {
                auto key = std::minmax(u, w);
                if (u != w && used[key.first][key.second]) used[key.first][key.second] = 0;
            }
            trimmed = true;
        }
        if (trimmed) recount();
    }
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (used[u][w]) {
                EdgeId e = sv.rep.at({u, w});
                adj[u].emplace_back(w, e);
                adj[w].emplace_back(u, e);
            }
    KuratowskiWitness out;
    for (VertexId v = 0; v < n; ++v)
        if (deg[v] >= 3) out.branch_vertices.push_back(v);
    int nb = static_cast<int>(out.branch_vertices.size());
    bool all4 = std::all_of(out.branch_vertices.begin(), out.branch_vertices.end(),
                            [&](VertexId v) { return deg[v] == 4; });
    if (nb == 5 && all4)
        out.kind = KuratowskiWitness::Kind::k5_subdivision;
    else if (nb == 6)
        out.kind = KuratowskiWitness::Kind::k33_subdivision;
    else
        throw PreconditionError("kuratowski edge set does not form a subdivision");
    // walk paths from each branch vertex through degree-2 interiors
    std::set<std::pair<VertexId, EdgeId>> taken; // (vertex, first edge) starts
    std::vector<char> branch(n, 0);
    for (VertexId v : out.branch_vertices) branch[v] = 1;
    for (VertexId s : out.branch_vertices)
        for (auto [first_nbr, first_edge] : adj[s]) {
            if (taken.count({s, first_edge})) continue;
            std::vector<EdgeId> path{first_edge};
            VertexId prev = s, cur = first_nbr;
            EdgeId cur_edge = first_edge;
            while (!branch[cur]) {
                for (auto [w, e] : adj[cur])
                    if (e != cur_edge) {
                        path.push_back(e);
                        prev = cur;
                        cur = w;
                        cur_edge = e;
                        break;
                    }
            }
            (void)prev;
            taken.insert({s, first_edge});
            taken.insert({cur, cur_edge});
            out.paths.push_back(std::move(path));
        }
    return out;
}

// Exhaustive subdivision search over the simplification: branch vertex
// choices plus internally-disjoint path backtracking. Certain at desk
// scale; used when the fast extraction's edge set does not structure.
std::optional<KuratowskiWitness> find_subdivision_exhaustive(const Multigraph& g) {
    SimpleView sv = simplify(g);
    int n = g.vertex_count();
    std::vector<std::vector<VertexId>> adj(n);
    for (auto [u, w] : sv.edges) {
        adj[u].push_back(w);
        adj[w].push_back(u);
    }
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());

    // connect the required pairs by paths with unused interiors
    struct State {
        std::vector<char> interior_used;
        std::vector<std::vector<VertexId>> paths;
    };
    auto solve = [&](const std::vector<VertexId>& branch,
                     const std::vector<std::pair<int, int>>& pairs)
        -> std::optional<std::vector<std::vector<VertexId>>> {
        std::vector<char> blocked(n, 0);
        for (VertexId b : branch) blocked[b] = 1;
        std::vector<std::vector<VertexId>> paths;
        std::vector<char> interior(n, 0);
        auto rec = [&](auto&& self, std::size_t idx) -> bool {
            if (idx == pairs.size()) return true;
            VertexId s = branch[pairs[idx].first], t = branch[pairs[idx].second];
            std::vector<VertexId> path{s};
            auto dfs = [&](auto&& dself, VertexId cur) -> bool {
                for (VertexId w : adj[cur]) {
                    if (w == t) {
                        path.push_back(t);
                        paths.push_back(path);
                        for (std::size_t i = 1; i + 1 < path.size(); ++i) interior[path[i]] = 1;
                        if (self(self, idx + 1)) return true;
                        for (std::size_t i = 1; i + 1 < path.size(); ++i) interior[path[i]] = 0;
                        paths.pop_back();
                        path.pop_back();
                        continue;
                    }
                    if (blocked[w] || interior[w]) continue;
                    bool on_path = false;
                    for (VertexId p : path) on_path |= (p == w);
                    if (on_path) continue;
                    path.push_back(w);
                    if (dself(dself, w)) return true;
                    path.pop_back();
                }
                return false;
            };
            return dfs(dfs, s);
        };
        if (rec(rec, 0)) return paths;
        return std::nullopt;
    };

    auto lift = [&](KuratowskiWitness::Kind kind, const std::vector<VertexId>& branch,
                    const std::vector<std::vector<VertexId>>& vpaths) {
        KuratowskiWitness w;
        w.kind = kind;
        w.branch_vertices = branch;
        for (const auto& vp : vpaths) {
            std::vector<EdgeId> path;
            for (std::size_t i = 0; i + 1 < vp.size(); ++i) {
                auto key = std::minmax(vp[i], vp[i + 1]);
                path.push_back(sv.rep.at({key.first, key.second}));
            }
            w.paths.push_back(std::move(path));
        }
        return w;
    };

    // K5: five branch vertices of degree >= 4, all pairs connected
    std::vector<VertexId> cand5;
    for (int v = 0; v < n; ++v)
        if (deg[v] >= 4) cand5.push_back(v);
    std::vector<std::pair<int, int>> k5_pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5_pairs.emplace_back(i, j);
    std::vector<int> pick;
    auto choose = [&](auto&& self, const std::vector<VertexId>& cand, std::size_t k,
                      std::size_t start, auto&& on_choice) -> bool {
        if (pick.size() == k) return on_choice();
        for (std::size_t i = start; i < cand.size(); ++i) {
            pick.push_back(cand[i]);
            if (self(self, cand, k, i + 1, on_choice)) return true;
            pick.pop_back();
        }
        return false;
    };
    std::optional<KuratowskiWitness> found;
    choose(choose, cand5, 5, 0, [&]() {
        std::vector<VertexId> branch(pick.begin(), pick.end());
        if (auto paths = solve(branch, k5_pairs)) {
            found = lift(KuratowskiWitness::Kind::k5_subdivision, branch, *paths);
            return true;
        }
        return false;
    });
    if (found) return found;

    // K33: six branch vertices of degree >= 3, split 3 + 3
    std::vector<VertexId> cand33;
    for (int v = 0; v < n; ++v)
        if (deg[v] >= 3) cand33.push_back(v);
    choose(choose, cand33, 6, 0, [&]() {
        std::vector<VertexId> six(pick.begin(), pick.end());
        // all 3+3 splits with six[0] on the first side
        for (int mask = 0; mask < 32; ++mask) {
            std::vector<int> a{0}, b;
            for (int i = 1; i < 6; ++i)
                if (mask & (1 << (i - 1)))
                    a.push_back(i);
                else
                    b.push_back(i);
            if (a.size() != 3) continue;
            std::vector<std::pair<int, int>> pairs;
            for (int i : a)
                for (int j : b) pairs.emplace_back(i, j);
            if (auto paths = solve(six, pairs)) {
                found = lift(KuratowskiWitness::Kind::k33_subdivision, six, *paths);
                return true;
            }
        }
        return false;
    });
    return found;
}

RotationSystem lift_embedding(const Multigraph& g, const std::vector<int>& comp_of,
                              const std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>>&
                                  simple_rotation) {
    (void)comp_of;
    RotationSystem rot;
    rot.order.assign(g.vertex_count(), {});
    // parallel groups per pair, ascending edge id
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> group;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (a == b) continue;
        auto key = std::minmax(a, b);
        group[{key.first, key.second}].push_back(e);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto it = simple_rotation.find(v);
        if (it != simple_rotation.end()) {
            for (auto [w, rep_edge] : it->second) {
                (void)rep_edge;
                auto key = std::minmax(v, w);
                const auto& par = group.at({key.first, key.second});
                // ascending at the smaller endpoint, descending at the larger,
                // so parallels nest without crossing
                if (v == key.first)
                    for (EdgeId e : par) rot.order[v].push_back(g.half_edge_at(e, v));
                else
                    for (auto rit = par.rbegin(); rit != par.rend(); ++rit)
                        rot.order[v].push_back(g.half_edge_at(*rit, v));
            }
        }
        // loops appended last, both half-edges adjacent
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.endpoints(e);
            if (a == v && b == v) {
                rot.order[v].push_back(2 * e);
                rot.order[v].push_back(2 * e + 1);
            }
        }
    }
    return rot;
}

} // namespace

PlanarityResult is_planar(const Multigraph& g) {
    // test the simplification of each component; lift the embedding back
    SimpleView sv = simplify(g);
    BoostGraph bg(g.vertex_count());
    for (std::size_t i = 0; i < sv.edges.size(); ++i)
        boost::add_edge(sv.edges[i].first, sv.edges[i].second, static_cast<int>(i), bg);

    std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>> embedding(
        g.vertex_count());
    std::vector<boost::graph_traits<BoostGraph>::edge_descriptor> kuratowski;
    bool ok = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    if (!ok) {
        std::vector<std::pair<VertexId, VertexId>> wit;
        for (auto ed : kuratowski)
            wit.emplace_back(static_cast<VertexId>(boost::source(ed, bg)),
                             static_cast<VertexId>(boost::target(ed, bg)));
        try {
            KuratowskiWitness w = structure_witness(g, wit);
            check_kuratowski_witness(g, w);
            return w;
        } catch (const PreconditionError&) {
            // the fast extraction's edge set did not structure; fall back to
            // the exhaustive subdivision search
            auto w = find_subdivision_exhaustive(g);
            if (!w) throw PreconditionError("non-planar graph without a subdivision witness");
            check_kuratowski_witness(g, *w);
            return *w;
        }
    }
    std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> simple_rot;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::pair<VertexId, EdgeId>> cyc;
        for (auto ed : embedding[v]) {
            VertexId a = static_cast<VertexId>(boost::source(ed, bg));
            VertexId b = static_cast<VertexId>(boost::target(ed, bg));
            VertexId w = (a == v) ? b : a;
            auto key = std::minmax(v, w);
            cyc.emplace_back(w, sv.rep.at({key.first, key.second}));
        }
        if (!cyc.empty()) simple_rot[v] = std::move(cyc);
    }
    RotationSystem rot = lift_embedding(g, component_labels(g), simple_rot);
    if (!rotation_is_planar(g, rot))
        throw PreconditionError("lifted embedding failed Euler verification");
    return rot;
}

void check_kuratowski_witness(const Multigraph& g, const KuratowskiWitness& w) {
    int expected_branches = (w.kind == KuratowskiWitness::Kind::k5_subdivision) ? 5 : 6;
    int expected_paths = (w.kind == KuratowskiWitness::Kind::k5_subdivision) ? 10 : 9;
    if (static_cast<int>(w.branch_vertices.size()) != expected_branches ||
        static_cast<int>(w.paths.size()) != expected_paths)
        throw PreconditionError("kuratowski witness has the wrong shape");
    std::set<VertexId> branch(w.branch_vertices.begin(), w.branch_vertices.end());
    std::set<EdgeId> all_edges;
    std::set<VertexId> interiors;
    std::vector<std::pair<VertexId, VertexId>> path_ends;
    for (const auto& path : w.paths) {
        // follow the path, collecting interior vertices
        std::vector<VertexId> verts;
        if (path.empty()) throw PreconditionError("empty subdivision path");
        for (EdgeId e : path) {
            if (!g.has_edge(e) || g.is_loop(e))
                throw PreconditionError("subdivision path uses an invalid edge");
            if (!all_edges.insert(e).second)
                throw PreconditionError("subdivision paths share an edge");
        }
        // orient: endpoints are the branch vertices of degree 1 within the path
        std::map<VertexId, int> deg;
        for (EdgeId e : path) {
            auto [a, b] = g.endpoints(e);
            ++deg[a];
            ++deg[b];
        }
        VertexId ends[2];
        int k = 0;
        for (auto [v, d] : deg) {
            if (d == 1) {
                if (k == 2) throw PreconditionError("subdivision path is not a path");
                ends[k++] = v;
            } else if (d != 2) {
                throw PreconditionError("subdivision path is not a path");
            }
        }
        if (k != 2 || !branch.count(ends[0]) || !branch.count(ends[1]))
            throw PreconditionError("subdivision path does not join branch vertices");
        for (auto [v, d] : deg)
            if (d == 2) {
                if (branch.count(v))
                    throw PreconditionError("subdivision path passes through a branch vertex");
                if (!interiors.insert(v).second)
                    throw PreconditionError("subdivision paths share an interior vertex");
            }
        path_ends.emplace_back(std::min(ends[0], ends[1]), std::max(ends[0], ends[1]));
    }
    // contraction of path interiors yields K5 or K3,3
    std::set<std::pair<VertexId, VertexId>> pairs(path_ends.begin(), path_ends.end());
    if (pairs.size() != path_ends.size())
        throw PreconditionError("two subdivision paths join the same branch pair");
    if (w.kind == KuratowskiWitness::Kind::k5_subdivision) {
        if (pairs.size() != 10) throw PreconditionError("K5 subdivision must cover all pairs");
    } else {
        // 2-color the 6 branch vertices: adjacency must be complete bipartite
        std::map<VertexId, int> side;
        std::vector<VertexId> stack{w.branch_vertices[0]};
        side[w.branch_vertices[0]] = 0;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (auto [a, b] : pairs) {
                VertexId other = (a == v) ? b : (b == v ? a : -1);
                if (other < 0) continue;
                if (!side.count(other)) {
                    side[other] = 1 - side[v];
                    stack.push_back(other);
                } else if (side[other] == side[v]) {
                    throw PreconditionError("K33 subdivision is not bipartite");
                }
            }
        }
        int zeros = 0;
        for (auto [v, s] : side) zeros += (s == 0);
        if (side.size() != 6 || (zeros != 3))
            throw PreconditionError("K33 subdivision has the wrong bipartition");
    }
}

bool planar_by_rotation_search(const Multigraph& g, long rotation_cap) {
    if (g.edge_count() == 0) return true;
    // search each vertex component independently
    auto label = component_labels(g);
    int ncomp = component_count(g);
    for (int comp = 0; comp < ncomp; ++comp) {
        std::vector<EdgeId> edges;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (label[g.endpoints(e).first] == comp) edges.push_back(e);
        if (edges.empty()) continue;
        // incident half-edges per vertex of the component
        std::map<VertexId, std::vector<HalfEdgeId>> at;
        for (EdgeId e : edges) {
            auto [a, b] = g.endpoints(e);
            at[a].push_back(2 * e);
            at[b].push_back(2 * e + 1);
        }
        long rotations = 1;
        for (auto& [v, hs] : at) {
            long f = 1;
            for (int i = 2; i < static_cast<int>(hs.size()); ++i) f *= i;
            if (rotations > rotation_cap / std::max(f, 1L)) {
                rotations = rotation_cap + 1;
                break;
            }
            rotations *= f;
        }
        if (rotations > rotation_cap) {
            // too many rotations: fall back to the simplification (planarity
            // is invariant under removing parallels and loops)
            SimpleView sv = simplify(g);
            Multigraph simple(g.vertex_count());
            for (auto [u, w] : sv.edges) simple.add_edge(u, w);
            if (simple.edge_count() == g.edge_count() && g.free_loops() == 0)
                throw BoundError("rotation search bound exceeded on a simple graph");
            return planar_by_rotation_search(simple, rotation_cap);
        }
        // odometer over per-vertex permutations with the first half-edge fixed
        int nv = static_cast<int>(at.size());
        std::vector<VertexId> verts;
        for (auto& [v, hs] : at) verts.push_back(v);
        std::vector<std::vector<int>> perm(nv); // permutation of tail indices
        for (int i = 0; i < nv; ++i) {
            int d = static_cast<int>(at[verts[i]].size());
            perm[i].resize(std::max(d - 1, 0));
            std::iota(perm[i].begin(), perm[i].end(), 1);
        }
        int V = 0, E = static_cast<int>(edges.size());
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (label[v] == comp) ++V;
        bool found = false;
        for (;;) {
            // count faces under the current rotation of this component
            std::map<HalfEdgeId, HalfEdgeId> next;
            for (int i = 0; i < nv; ++i) {
                const auto& hs = at[verts[i]];
                if (hs.size() == 1) {
                    next[hs[0]] = hs[0];
                    continue;
                }
                std::vector<HalfEdgeId> cyc{hs[0]};
                for (int idx : perm[i]) cyc.push_back(hs[idx]);
                for (std::size_t k = 0; k < cyc.size(); ++k) next[cyc[k]] = cyc[(k + 1) % cyc.size()];
            }
            int F = 0;
            std::set<HalfEdgeId> visited;
            for (EdgeId e : edges)
                for (HalfEdgeId h0 : {2 * e, 2 * e + 1}) {
                    if (visited.count(h0)) continue;
                    ++F;
                    HalfEdgeId h = h0;
                    do {
                        visited.insert(h);
                        h = next[twin_half_edge(h)];
                    } while (h != h0);
                }
            if (V - E + F == 2) {
                found = true;
                break;
            }
            // advance the odometer
            int i = 0;
            while (i < nv && !std::next_permutation(perm[i].begin(), perm[i].end())) ++i;
            if (i == nv) break;
        }
        if (!found) return false;
    }
    return true;
}

bool is_outerplanar(const Multigraph& g) {
    Multigraph apexed = g;
    apexed.set_free_loops(0);
    VertexId apex = apexed.add_vertex();
    for (VertexId v = 0; v < g.vertex_count(); ++v) apexed.add_edge(v, apex);
    return planar(apexed);
}

std::pair<Multigraph, RotationSystem> demote_in_embedding(const Multigraph& g,
                                                          const RotationSystem& rot, VertexId v,
                                                          HalfEdgeId h1, HalfEdgeId h2,
                                                          const Cycle& witness) {
    check_rotation_system(g, rot);
    if (!rotation_is_planar(g, rot))
        throw PreconditionError("rotation system is not a planar embedding");
    check_demotion(g, v, h1, h2, witness);
    Multigraph out = admissible_demotion(g, v, h1, h2, witness);
    EdgeId e1 = half_edge_owner(h1), e2 = half_edge_owner(h2);
    RotationSystem rot2;
    rot2.order.assign(out.vertex_count(), {});
    if (e1 == e2) {
        // loop deletion: drop the two half-edges, remap ids above e1
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (HalfEdgeId h : rot.order[u]) {
                EdgeId e = half_edge_owner(h);
                if (e == e1) continue;
                EdgeId e_new = e > e1 ? e - 1 : e;
                rot2.order[u].push_back(2 * e_new + (h & 1));
            }
    } else {
        // fused edge id: edges minus {e1,e2}, appended last
        EdgeId fused = out.edge_count() - 1;
        VertexId a = g.half_edge_vertex(twin_half_edge(h1));
        VertexId b = g.half_edge_vertex(twin_half_edge(h2));
        auto remap = [&](EdgeId e) {
            int below = (e > e1) + (e > e2);
            return e - below;
        };
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (HalfEdgeId h : rot.order[u]) {
                EdgeId e = half_edge_owner(h);
                if (u == v && (h == h1 || h == h2)) continue; // deleted half-edges
                if (h == twin_half_edge(h1)) {
                    rot2.order[u].push_back(2 * fused); // a-side of the fused edge
                    continue;
                }
                if (h == twin_half_edge(h2)) {
                    rot2.order[u].push_back(2 * fused + 1); // b-side
                    continue;
                }
                rot2.order[u].push_back(2 * remap(e) + (h & 1));
            }
        (void)a;
        (void)b;
    }
    if (!rotation_is_planar(out, rot2)) {
        // the two half-edges were not consecutive at v in this embedding;
        // re-embed (the demoted graph is planar by minor monotonicity)
        PlanarityResult p = is_planar(out);
        if (!std::holds_alternative<RotationSystem>(p))
            throw PreconditionError("demotion produced a non-planar graph");
        rot2 = std::get<RotationSystem>(p);
    }
    return {out, rot2};
}

} // namespace eumin
