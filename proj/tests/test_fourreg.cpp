#include <doctest.h>

#include <algorithm>

#include "eumin/enumerate.hpp"
#include "eumin/eulerian.hpp"
#include "eumin/fourreg.hpp"
#include "eumin/isomorphism.hpp"
#include "eumin/obstructions.hpp"
#include "eumin/planarity.hpp"

using namespace eumin;

namespace {

std::vector<Multigraph> small_4rp_oracle(int n_max) {
    std::vector<Multigraph> out;
    for (int n = 1; n <= n_max; ++n)
        for (const Multigraph& g : enumerate_4_regular(n))
            if (planar(g)) out.push_back(g);
    return out;
}

} // namespace

TEST_CASE("reduce_step") {
    SUBCASE("octahedron: one step to a 5-vertex 4-regular planar graph") {
        auto [r, step] = reduce_step(make_octahedron());
        CHECK(r.vertex_count() == 5);
        CHECK(is_k_regular(r, 4));
        CHECK(planar(r));
        CHECK(is_connected(r));
        CHECK(step.fused_image >= 0);
    }
    SUBCASE("K5 is rejected: not planar") {
        CHECK_THROWS_AS(reduce_step(make_complete(5)), PreconditionError);
    }
    SUBCASE("4-parallel bundle reduces to the double loop") {
        Multigraph bundle(2);
        for (int i = 0; i < 4; ++i) bundle.add_edge(0, 1);
        auto [r, step] = reduce_step(bundle);
        CHECK(is_isomorphic(r, make_bouquet(2)));
    }
    SUBCASE("the double loop is already fully reduced") {
        CHECK_THROWS_AS(reduce_step(make_bouquet(2)), PreconditionError);
    }
}

TEST_CASE("reduce_to_b2") {
    SUBCASE("double loop: empty trace") {
        ReductionTrace t = reduce_to_b2(make_bouquet(2));
        CHECK(t.steps.empty());
        CHECK(t.trace.ops.empty());
    }
    SUBCASE("octahedron: five steps, all intermediates 4-regular planar") {
        ReductionTrace t = reduce_to_b2(make_octahedron());
        CHECK(t.steps.size() == 5);
        CHECK(t.trace.ops.size() == 10);
        Multigraph cur = t.trace.source;
        for (const ReductionStep& s : t.steps) {
            cur = apply_op(cur, s.demote);
            cur = apply_op(cur, ContractOp{s.contracted});
            CHECK(is_k_regular(cur, 4));
            CHECK(planar(cur));
            CHECK(is_connected(cur));
        }
        CHECK(is_isomorphic(cur, make_bouquet(2)));
        apply_trace(t.trace);
    }
    SUBCASE("bundle: one step") {
        Multigraph bundle(2);
        for (int i = 0; i < 4; ++i) bundle.add_edge(0, 1);
        CHECK(reduce_to_b2(bundle).steps.size() == 1);
    }
}

TEST_CASE("construct_replay") {
    SUBCASE("empty trace reproduces the double loop") {
        ReductionTrace t = reduce_to_b2(make_bouquet(2));
        ConstructionReplay cr = construct_replay(t, 0);
        const Multigraph& g = cr.graph;
        const auto& steps = cr.steps;
        CHECK(is_isomorphic(g, make_bouquet(2)));
        CHECK(steps.empty());
    }
    SUBCASE("octahedron round-trips") {
        ReductionTrace t = reduce_to_b2(make_octahedron());
        ConstructionReplay cr = construct_replay(t, free_loop_seeds_required(t));
        const Multigraph& g = cr.graph;
        const auto& steps = cr.steps;
        CHECK(is_isomorphic(g, make_octahedron()));
        CHECK(steps.size() == 5);
    }
    SUBCASE("bundle round-trips") {
        Multigraph bundle(2);
        for (int i = 0; i < 4; ++i) bundle.add_edge(0, 1);
        ReductionTrace t = reduce_to_b2(bundle);
        ConstructionReplay cr = construct_replay(t, free_loop_seeds_required(t));
        const Multigraph& g = cr.graph;
        const auto& steps = cr.steps;
        CHECK(is_isomorphic(g, bundle));
    }
    SUBCASE("seed count must match") {
        ReductionTrace t = reduce_to_b2(make_octahedron());
        CHECK_THROWS_AS(construct_replay(t, free_loop_seeds_required(t) + 1), PreconditionError);
    }
    SUBCASE("the emitted construction trace replays on its own") {
        Multigraph ldl(2); // loop-digon-loop forces a free-loop seed
        ldl.add_edge(0, 0);
        ldl.add_edge(0, 1);
        ldl.add_edge(0, 1);
        ldl.add_edge(1, 1);
        ReductionTrace t = reduce_to_b2(ldl);
        ConstructionReplay cr = construct_replay(t, free_loop_seeds_required(t));
        CHECK(cr.trace.source.free_loops() == free_loop_seeds_required(t));
        CHECK(apply_trace(cr.trace) == cr.graph);
        bool has_subdivfree = false, has_merge = false;
        for (const TraceOp& op : cr.trace.ops) {
            has_subdivfree |= std::holds_alternative<SubdivideFreeLoopOp>(op);
            has_merge |= std::holds_alternative<MergeOp>(op);
        }
        CHECK(has_merge);
        CHECK(has_subdivfree == (free_loop_seeds_required(t) > 0));
        // three ops per reconstructed vertex
        CHECK(cr.trace.ops.size() == 3 * t.steps.size());
        // the subdivided edge lies on the recorded peripheral cycle when
        // one was found
        for (const ConstructionStep& s : cr.steps)
            if (s.subdivide_peripheral >= 0 && !s.witness.empty())
                CHECK(std::find(s.witness.begin(), s.witness.end(), s.subdivide_peripheral) !=
                      s.witness.end());
    }
}

TEST_CASE("reduction and round-trip over the oracle family") {
    for (const Multigraph& g : small_4rp_oracle(4)) {
        CAPTURE(g.vertex_count());
        ReductionTrace t = reduce_to_b2(g);
        CHECK(static_cast<int>(t.steps.size()) == g.vertex_count() - 1);
        ConstructionReplay cr = construct_replay(t, free_loop_seeds_required(t));
        const Multigraph& back = cr.graph;
        CHECK(is_isomorphic(back, g));
    }
}

TEST_CASE("free-loop accounting") {
    // reductions of connected graphs never create free-loops; seeds equal
    // the number of loop-deletion demotions
    for (const Multigraph& g : small_4rp_oracle(4)) {
        ReductionTrace t = reduce_to_b2(g);
        Multigraph cur = t.trace.source;
        for (const TraceOp& op : t.trace.ops) {
            cur = apply_op(cur, op);
            CHECK(cur.free_loops() == 0);
        }
        int loop_steps = 0;
        for (const ReductionStep& s : t.steps)
            if (s.fused_image < 0) ++loop_steps;
        CHECK(free_loop_seeds_required(t) == loop_steps);
    }
}

TEST_CASE("generate_4rp") {
    SUBCASE("n = 1: just the double loop") {
        auto f = generate_4rp(1);
        REQUIRE(f.size() == 1);
        CHECK(is_isomorphic(f[0], make_bouquet(2)));
    }
    SUBCASE("n = 2: the bundle and loop-digon-loop") {
        auto f = generate_4rp(2);
        CHECK(f.size() == 2);
        Multigraph bundle(2);
        for (int i = 0; i < 4; ++i) bundle.add_edge(0, 1);
        Multigraph ldl(2);
        ldl.add_edge(0, 0);
        ldl.add_edge(0, 1);
        ldl.add_edge(0, 1);
        ldl.add_edge(1, 1);
        bool saw_bundle = false, saw_ldl = false;
        for (const Multigraph& g : f) {
            saw_bundle |= is_isomorphic(g, bundle);
            saw_ldl |= is_isomorphic(g, ldl);
        }
        CHECK(saw_bundle);
        CHECK(saw_ldl);
    }
    SUBCASE("matches the oracle for n <= 4") {
        for (int n = 1; n <= 4; ++n) {
            auto generated = generate_4rp(n);
            std::vector<Multigraph> oracle;
            for (const Multigraph& g : enumerate_4_regular(n))
                if (planar(g)) oracle.push_back(g);
            REQUIRE(generated.size() == oracle.size());
            for (const Multigraph& g : generated) {
                bool found = false;
                for (const Multigraph& h : oracle) found |= is_isomorphic(g, h);
                CHECK(found);
            }
        }
    }
    SUBCASE("n = 6 contains the octahedron") {
        auto f = generate_4rp(6);
        bool found = false;
        for (const Multigraph& g : f) found |= is_isomorphic(g, make_octahedron());
        CHECK(found);
    }
}
