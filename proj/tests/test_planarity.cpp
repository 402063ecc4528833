#include <doctest.h>

#include <algorithm>
#include <random>

#include "eumin/enumerate.hpp"
#include "eumin/eulerian.hpp"
#include "eumin/isomorphism.hpp"
#include "eumin/obstructions.hpp"
#include "eumin/peripheral.hpp"
#include "eumin/planarity.hpp"
#include "eumin/trace.hpp"

using namespace eumin;

TEST_CASE("is_planar on the classics") {
    SUBCASE("K4 embeds with 4 faces") {
        Multigraph k4 = make_complete(4);
        PlanarityResult r = is_planar(k4);
        REQUIRE(std::holds_alternative<RotationSystem>(r));
        const auto& rot = std::get<RotationSystem>(r);
        CHECK(faces(k4, rot).size() == 4);
        CHECK(plane_face_count(k4, rot) == 4);
        // V - E + F = 2
        CHECK(4 - 6 + 4 == 2);
    }
    SUBCASE("K5 yields a K5 witness") {
        PlanarityResult r = is_planar(make_complete(5));
        REQUIRE(std::holds_alternative<KuratowskiWitness>(r));
        const auto& w = std::get<KuratowskiWitness>(r);
        CHECK(w.kind == KuratowskiWitness::Kind::k5_subdivision);
        CHECK(w.paths.size() == 10);
    }
    SUBCASE("K33 with a doubled edge yields a K33 witness") {
        Multigraph g = make_complete_bipartite(3, 3);
        g.add_edge(0, 3);
        PlanarityResult r = is_planar(g);
        REQUIRE(std::holds_alternative<KuratowskiWitness>(r));
        CHECK(std::get<KuratowskiWitness>(r).kind == KuratowskiWitness::Kind::k33_subdivision);
    }
    SUBCASE("empty and tiny graphs") {
        CHECK(planar(Multigraph(0)));
        CHECK(planar(Multigraph(3)));
        CHECK(planar(make_bouquet(5)));
    }
}

TEST_CASE("faces") {
    SUBCASE("triangle: two faces of length 3") {
        Multigraph tri = make_cycle_graph(3);
        auto rot = std::get<RotationSystem>(is_planar(tri));
        auto walks = faces(tri, rot);
        REQUIRE(walks.size() == 2);
        CHECK(walks[0].size() == 3);
        CHECK(walks[1].size() == 3);
    }
    SUBCASE("double loop embeds with 3 faces") {
        Multigraph b2 = make_bouquet(2);
        auto rot = std::get<RotationSystem>(is_planar(b2));
        CHECK(faces(b2, rot).size() == 3); // 1 - 2 + 3 = 2
    }
    SUBCASE("octahedron: 8 triangular faces") {
        Multigraph oct = make_octahedron();
        auto rot = std::get<RotationSystem>(is_planar(oct));
        auto walks = faces(oct, rot);
        REQUIRE(walks.size() == 8);
        for (const auto& w : walks) CHECK(w.size() == 3);
    }
    SUBCASE("face walks cover each half-edge once") {
        for (const Multigraph& g : enumerate_multigraphs(4, 6)) {
            PlanarityResult r = is_planar(g);
            if (!std::holds_alternative<RotationSystem>(r)) continue;
            auto walks = faces(g, std::get<RotationSystem>(r));
            std::size_t total = 0;
            for (const auto& w : walks) total += w.size();
            CHECK(total == static_cast<std::size_t>(2 * g.edge_count()));
        }
    }
    SUBCASE("bad rotation systems are rejected") {
        Multigraph tri = make_cycle_graph(3);
        RotationSystem bogus;
        bogus.order = {{0, 1}, {2}, {3}};
        CHECK_THROWS_AS(faces(tri, bogus), PreconditionError);
    }
}

TEST_CASE("Euler relation V - E + F = 1 + C for planar verdicts") {
    for (const Multigraph& g : enumerate_multigraphs(5, 6)) {
        PlanarityResult r = is_planar(g);
        if (!std::holds_alternative<RotationSystem>(r)) continue;
        int F = plane_face_count(g, std::get<RotationSystem>(r));
        CHECK(g.vertex_count() - g.edge_count() + F == 1 + component_count(g));
    }
}

TEST_CASE("planarity is invariant under parallel copies and loops") {
    std::mt19937 rng(5);
    for (const Multigraph& base : enumerate_multigraphs(5, 7)) {
        if (base.edge_count() == 0) continue;
        bool was = planar(base);
        std::uniform_int_distribution<EdgeId> pick(0, base.edge_count() - 1);
        auto [u, w] = base.endpoints(pick(rng));
        Multigraph with_parallel = base;
        with_parallel.add_edge(u, w);
        CHECK(planar(with_parallel) == was);
        Multigraph with_loop = base;
        with_loop.add_edge(0, 0);
        CHECK(planar(with_loop) == was);
    }
}

TEST_CASE("minor operations preserve planarity on a small family") {
    for (const Multigraph& g : enumerate_multigraphs(4, 6)) {
        if (!planar(g)) continue;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!g.is_loop(e)) CHECK(planar(contract_edge(g, e)));
        for (const Cycle& c : enumerate_cycles(g)) CHECK(planar(delete_cycle(g, c)));
    }
}

TEST_CASE("is_outerplanar") {
    CHECK(is_outerplanar(make_cycle_graph(5)));
    CHECK(is_outerplanar(make_cycle_graph(2)));
    CHECK(is_outerplanar(make_path(4)));
    CHECK_FALSE(is_outerplanar(make_complete(4)));
    CHECK_FALSE(is_outerplanar(make_complete_bipartite(2, 3)));
    CHECK(is_outerplanar(Multigraph(0)));
    // outer-planar implies planar but not conversely
    CHECK(planar(make_complete(4)));
    CHECK_FALSE(is_outerplanar(make_octahedron()));
}

TEST_CASE("outerplanarity agrees with direct K4/K23 minor search on simple graphs") {
    for (const Multigraph& g : enumerate_multigraphs(5, 7)) {
        // restrict to simple graphs to keep the minor search cheap
        bool simple = true;
        for (VertexId u = 0; u < g.vertex_count() && simple; ++u)
            for (VertexId w = u; w < g.vertex_count() && simple; ++w)
                if ((u == w && g.multiplicity(u, u) > 0) || (u != w && g.multiplicity(u, w) > 1))
                    simple = false;
        if (!simple) continue;
        // classical excluded minors, by brute-force minor search: contract or
        // delete edges freely (plain minors, so allow single-edge deletion
        // here via cycle-free reasoning: use subgraph spanning + contraction)
        auto has_minor = [&](const Multigraph& target) {
            // BFS over subgraph edge subsets is exponential; instead use the
            // starred search's plain-op cousin on each spanning subgraph:
            // at these sizes, test all edge subsets
            int m = g.edge_count();
            for (int mask = 0; mask < (1 << m); ++mask) {
                Multigraph h(g.vertex_count());
                for (EdgeId e = 0; e < m; ++e)
                    if (mask & (1 << e)) {
                        auto [a, b] = g.endpoints(e);
                        h.add_edge(a, b);
                    }
                // contract down: try all sequences greedily via canonical memo
                // (cheap because targets are tiny): repeatedly contract any
                // edge and compare
                std::vector<Multigraph> stack{h};
                std::set<std::string> seen;
                while (!stack.empty()) {
                    Multigraph cur = stack.back();
                    stack.pop_back();
                    std::string code = canonical_code(cur);
                    if (!seen.insert(code).second) continue;
                    // drop isolated vertices before comparing
                    Multigraph trimmed = cur;
                    for (VertexId v = trimmed.vertex_count() - 1; v >= 0; --v)
                        if (trimmed.degree(v) == 0) trimmed = delete_isolated_vertex(trimmed, v);
                    // ignore multiplicities: simplify
                    Multigraph sim(trimmed.vertex_count());
                    for (VertexId u = 0; u < trimmed.vertex_count(); ++u)
                        for (VertexId w2 = u + 1; w2 < trimmed.vertex_count(); ++w2)
                            if (trimmed.multiplicity(u, w2) > 0) sim.add_edge(u, w2);
                    if (is_isomorphic(sim, target)) return true;
                    for (EdgeId e = 0; e < cur.edge_count(); ++e)
                        if (!cur.is_loop(e)) stack.push_back(contract_edge(cur, e));
                }
            }
            return false;
        };
        bool expected = !has_minor(make_complete(4)) && !has_minor(make_complete_bipartite(2, 3));
        CHECK(is_outerplanar(g) == expected);
    }
}

TEST_CASE("demote_in_embedding") {
    SUBCASE("triangle corner splice stays planar") {
        Multigraph tri = make_cycle_graph(3);
        auto rot = std::get<RotationSystem>(is_planar(tri));
        Cycle c = cycle_from_edges(tri, {0, 1, 2});
        auto [g2, rot2] = demote_in_embedding(tri, rot, 1, tri.half_edge_at(0, 1),
                                              tri.half_edge_at(1, 1), c);
        CHECK(rotation_is_planar(g2, rot2));
        CHECK(g2.multiplicity(0, 2) == 2);
    }
    SUBCASE("loop deletion drops two half-edges") {
        Multigraph b2 = make_bouquet(2);
        auto rot = std::get<RotationSystem>(is_planar(b2));
        Cycle loop = cycle_from_edges(b2, {0});
        auto [g2, rot2] = demote_in_embedding(b2, rot, 0, 0, 1, loop);
        CHECK(g2.edge_count() == 1);
        CHECK(rot2.order[0].size() == 2);
        CHECK(rotation_is_planar(g2, rot2));
    }
    SUBCASE("octahedron face demotion keeps a planar embedding") {
        Multigraph oct = make_octahedron();
        auto rot = std::get<RotationSystem>(is_planar(oct));
        for (const Cycle& c : enumerate_cycles(oct)) {
            if (c.length() != 3 || !is_peripheral(oct, c)) continue;
            VertexId v = c.vertices[1];
            auto [g2, rot2] = demote_in_embedding(oct, rot, v, oct.half_edge_at(c.edges[0], v),
                                                  oct.half_edge_at(c.edges[1], v), c);
            CHECK(rotation_is_planar(g2, rot2));
            CHECK(planar(g2));
            break;
        }
    }
}

TEST_CASE("chosen planarity algorithm agrees with the rotation-search oracle") {
    for (const Multigraph& g : enumerate_multigraphs(4, 7)) {
        CHECK(planar(g) == planar_by_rotation_search(g));
    }
    // spot non-planar inputs explicitly
    CHECK_FALSE(planar_by_rotation_search(make_complete(5)));
    Multigraph k33 = make_complete_bipartite(3, 3);
    CHECK_FALSE(planar_by_rotation_search(k33));
    CHECK(planar_by_rotation_search(make_octahedron()));
}
