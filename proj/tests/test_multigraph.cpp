#include <doctest.h>

#include "eumin/enumerate.hpp"
#include "eumin/isomorphism.hpp"
#include "eumin/multigraph.hpp"
#include "eumin/obstructions.hpp"

using namespace eumin;

TEST_CASE("degree counts half-edges, loops twice") {
    Multigraph b2 = make_bouquet(2);
    CHECK(b2.degree(0) == 4);
    Multigraph k5 = make_complete(5);
    for (VertexId v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);
    Multigraph one(1);
    CHECK(one.degree(0) == 0);
    CHECK_THROWS_AS(one.degree(3), PreconditionError);
}

TEST_CASE("half-edge identities") {
    Multigraph g(3);
    EdgeId e = g.add_edge(1, 2);
    CHECK(g.half_edge_vertex(2 * e) == 1);
    CHECK(g.half_edge_vertex(2 * e + 1) == 2);
    CHECK(twin_half_edge(2 * e) == 2 * e + 1);
    CHECK(g.half_edge_at(e, 2) == 2 * e + 1);
    EdgeId l = g.add_edge(0, 0);
    CHECK(g.half_edge_vertex(2 * l) == 0);
    CHECK(g.half_edge_vertex(2 * l + 1) == 0);
}

TEST_CASE("contract_edge basics") {
    SUBCASE("triangle becomes a digon") {
        Multigraph tri = make_cycle_graph(3);
        Multigraph r = contract_edge(tri, 0);
        CHECK(r.vertex_count() == 2);
        CHECK(r.edge_count() == 2);
        CHECK(r.multiplicity(0, 1) == 2);
    }
    SUBCASE("digon contraction leaves one loop") {
        Multigraph digon = make_cycle_graph(2);
        Multigraph r = contract_edge(digon, 0);
        CHECK(r.vertex_count() == 1);
        CHECK(r.loop_count(0) == 1);
    }
    SUBCASE("K5 contraction: 4 vertices, 9 edges, degrees (4,4,4,6)") {
        Multigraph k5 = make_complete(5);
        Multigraph r = contract_edge(k5, 0);
        CHECK(r.vertex_count() == 4);
        CHECK(r.edge_count() == 9);
        CHECK(degree_sequence(r) == std::vector<int>{4, 4, 4, 6});
        // the merged vertex is joined to each survivor by a parallel pair
        auto [x, y] = k5.endpoints(0);
        (void)x;
        (void)y;
        int pairs = 0;
        for (VertexId v = 1; v < 4; ++v)
            if (r.multiplicity(0, v) == 2) ++pairs;
        CHECK(pairs == 3);
    }
    SUBCASE("loops cannot be contracted") {
        Multigraph b1 = make_bouquet(1);
        CHECK_THROWS_AS(contract_edge(b1, 0), PreconditionError);
        CHECK_THROWS_AS(contract_edge(b1, 7), PreconditionError);
    }
    SUBCASE("degree arithmetic: deg(z) = deg(x) + deg(y) - 2") {
        for (const Multigraph& g : enumerate_multigraphs(4, 5)) {
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (g.is_loop(e)) continue;
                auto [x, y] = g.endpoints(e);
                Multigraph r = contract_edge(g, e);
                VertexId z = std::min(x, y);
                CHECK(r.degree(z) == g.degree(x) + g.degree(y) - 2);
            }
        }
    }
}

TEST_CASE("delete_isolated_vertex") {
    Multigraph g(3);
    g.add_edge(0, 1); // K2 plus isolated 2
    Multigraph r = delete_isolated_vertex(g, 2);
    CHECK(r.vertex_count() == 2);
    CHECK(r.edge_count() == 1);
    Multigraph one(1);
    CHECK(delete_isolated_vertex(one, 0).vertex_count() == 0);
    Multigraph b2 = make_bouquet(2);
    CHECK_THROWS_AS(delete_isolated_vertex(b2, 0), PreconditionError);
}

TEST_CASE("subdivide_edge") {
    SUBCASE("K2 becomes a path on 3 vertices") {
        Multigraph k2 = make_complete(2);
        auto [r, z] = subdivide_edge(k2, 0);
        CHECK(z == 2);
        CHECK(r.vertex_count() == 3);
        CHECK(r.degree(z) == 2);
        CHECK(is_isomorphic(r, make_path(3)));
    }
    SUBCASE("free-loop becomes a vertex with one loop") {
        Multigraph g(0, 1);
        auto [r, z] = subdivide_free_loop(g);
        CHECK(r.free_loops() == 0);
        CHECK(r.vertex_count() == 1);
        CHECK(r.loop_count(z) == 1);
        CHECK_THROWS_AS(subdivide_free_loop(r), PreconditionError);
    }
    SUBCASE("a loop becomes a digon") {
        Multigraph b1 = make_bouquet(1);
        auto [r, z] = subdivide_edge(b1, 0);
        CHECK(r.vertex_count() == 2);
        CHECK(r.multiplicity(0, z) == 2);
    }
}

TEST_CASE("merge_degree2_vertices") {
    SUBCASE("path midpoints: a-u-w-b merges into z with a loop") {
        Multigraph p4 = make_path(4); // 0-1-2-3
        Multigraph r = merge_degree2_vertices(p4, 1, 2);
        CHECK(r.vertex_count() == 3);
        CHECK(r.loop_count(1) == 1);
        CHECK(r.degree(1) == 4);
        CHECK(r.multiplicity(0, 1) == 1);
        CHECK(r.multiplicity(1, 2) == 1);
    }
    SUBCASE("two digon midpoints merge into a degree-4 cut vertex") {
        Multigraph g(4);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        g.add_edge(2, 3);
        // subdivide one edge of each digon to get two degree-2 midpoints
        auto [g1, u] = subdivide_edge(g, 0);
        auto [g2, w] = subdivide_edge(g1, 2);
        Multigraph r = merge_degree2_vertices(g2, u, w);
        CHECK(r.degree(std::min(u, w)) == 4);
        CHECK(component_count(r) == 1);
    }
    SUBCASE("degree precondition") {
        Multigraph k5 = make_complete(5);
        CHECK_THROWS_AS(merge_degree2_vertices(k5, 0, 1), PreconditionError);
    }
}

TEST_CASE("handshake: sum of degrees is twice the edge count") {
    for (const Multigraph& g : enumerate_multigraphs(4, 6)) {
        int sum = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("subdivide then contract either new edge restores the graph") {
    for (const Multigraph& g : enumerate_multigraphs(4, 4)) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [s, z] = subdivide_edge(g, e);
            CHECK(is_isomorphic(contract_edge(s, e), g));
            CHECK(is_isomorphic(contract_edge(s, s.edge_count() - 1), g));
        }
    }
}
