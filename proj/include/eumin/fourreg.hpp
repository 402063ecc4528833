#pragma once

#include <optional>
#include <vector>

#include "eumin/cycle.hpp"
#include "eumin/multigraph.hpp"
#include "eumin/planarity.hpp"
#include "eumin/trace.hpp"

namespace eumin {

/// One vertex off a connected 4-regular planar graph: an admissible
/// demotion followed by contraction of a non-loop edge at the demoted
/// (now degree-2) vertex. Replay metadata carries ids in the result graph.
struct ReductionStep {
    DemoteOp demote;   // applied to the step's input graph
    EdgeId contracted; // in the post-demotion graph; incident to demote.vertex

    EdgeId fused_image = -1; // image of the fused edge in the result (-1: loop case)
    EdgeId other_image = -1; // image of the demoted vertex's remaining edge
};

struct ReductionTrace {
    Trace trace; // demote/contract op pairs, source to B2
    std::vector<ReductionStep> steps;
};

/// One reduction step. Tries (peripheral cycle, position, contraction edge)
/// candidates in deterministic order until the result is connected,
/// 4-regular and planar.
std::pair<Multigraph, ReductionStep> reduce_step(const Multigraph& g);

/// |V|-1 reduction steps down to the one-vertex double loop; every
/// intermediate graph after a full step is connected, 4-regular and planar.
ReductionTrace reduce_to_b2(const Multigraph& g);

/// Inverse replay step record: subdivide an edge on a recorded peripheral
/// cycle (or consume a free-loop seed), subdivide the co-face edge, merge
/// the two fresh degree-2 vertices.
struct ConstructionStep {
    EdgeId subdivide_peripheral = -1;    // -1: free-loop variant
    std::vector<EdgeId> witness;         // peripheral cycle through it
    EdgeId subdivide_coface = -1;
    std::vector<HalfEdgeId> coface_walk; // face boundary recorded at replay time
};

/// Free-loop seeds a replay of this trace consumes (loop-deletion steps).
int free_loop_seeds_required(const ReductionTrace& t);

struct ConstructionReplay {
    Multigraph graph; // reconstructed source (up to isomorphism)
    std::vector<ConstructionStep> steps;
    Trace trace; // subdiv/subdivfree/merge ops from the seeded double loop
};

/// Replay the inverse steps from B2 plus free-loop seeds, maintaining a
/// planar rotation system; per-step results are cross-checked against the
/// forward intermediates and the final graph is isomorphic to the source.
ConstructionReplay construct_replay(const ReductionTrace& t, int free_loop_seeds);

/// Closure of B2 (plus free-loop seeds) under the construction operation,
/// filtered to connected 4-regular planar graphs on exactly n vertices,
/// deduplicated by canonical form. n <= 6.
std::vector<Multigraph> generate_4rp(int n);

} // namespace eumin
