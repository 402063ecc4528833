#include <doctest.h>

#include "eumin/enumerate.hpp"
#include "eumin/eulerian.hpp"
#include "eumin/obstructions.hpp"
#include "eumin/text_io.hpp"

using namespace eumin;

TEST_CASE("multigraph format golden strings") {
    Multigraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 1);
    g.set_free_loops(2);
    CHECK(format_multigraph(g) == "multigraph\nv 3\ne 0 0 1\ne 1 1 1\nf 2\n");
    CHECK(format_multigraph(Multigraph(0)) == "multigraph\nv 0\n");
}

TEST_CASE("parse accepts comments and blank lines") {
    Multigraph g = parse_multigraph(
        "# a triangle\nmultigraph\n\nv 3  # three vertices\ne 0 0 1\ne 1 1 2\ne 2 2 0\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.free_loops() == 0);
}

TEST_CASE("parser rejections") {
    CHECK_THROWS_AS(parse_multigraph("v 2\ne 0 0 1\n"), ParseError);          // missing header
    CHECK_THROWS_AS(parse_multigraph("multigraph\nv 2\ne 0 0 5\n"), ParseError); // dangling
    CHECK_THROWS_AS(parse_multigraph("multigraph\nv 2\ne 0 0 1\ne 0 0 1\n"),
                    ParseError); // duplicate id
    CHECK_THROWS_AS(parse_multigraph("multigraph\nv 2\ne 1 0 1\n"), ParseError); // non-dense
    CHECK_THROWS_AS(parse_multigraph("multigraph\nv -1\n"), ParseError);
    CHECK_THROWS_AS(parse_multigraph("multigraph\nv 2\nq 0\n"), ParseError);
    CHECK_THROWS_AS(parse_multigraph("multigraph\nv 2\ne 0 0 x\n"), ParseError);
}

TEST_CASE("graph round-trip over a family") {
    for (const Multigraph& g : enumerate_multigraphs(4, 5)) {
        Multigraph h = parse_multigraph(format_multigraph(g));
        CHECK(h == g);
    }
    Multigraph seeds(0, 3);
    CHECK(parse_multigraph(format_multigraph(seeds)) == seeds);
}

TEST_CASE("op lines round-trip") {
    std::vector<TraceOp> ops = {
        ContractOp{3},
        DeleteCycleOp{{0, 4, 2}},
        DeleteVertexOp{1},
        DemoteOp{2, 5, 7, {0, 1, 2}},
        SubdivideOp{9},
        SubdivideFreeLoopOp{},
        MergeOp{1, 2},
    };
    for (const TraceOp& op : ops) CHECK(parse_op(format_op(op)) == op);
    CHECK(format_op(ops[3]) == "demote 2 5 7 witness 0 1 2");
    CHECK_THROWS_AS(parse_op("demote 2 5 7 0 1"), ParseError);
    CHECK_THROWS_AS(parse_op("frobnicate 1"), ParseError);
}

TEST_CASE("trace files round-trip and self-validate") {
    Trace t = k2_obstruction(make_complete(4));
    std::string text = format_trace(t);
    CHECK(looks_like_trace(text));
    CHECK_FALSE(looks_like_trace(format_multigraph(t.source)));
    Trace u = parse_trace(text);
    CHECK(u.source == t.source);
    CHECK(u.target == t.target);
    CHECK(u.ops == t.ops);
    apply_trace(u);
    CHECK_THROWS_AS(parse_trace(format_multigraph(t.source)), ParseError);
}
