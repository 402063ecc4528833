#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "eumin/cycle.hpp"
#include "eumin/multigraph.hpp"

namespace eumin {

// Operation records. Payload ids refer to the graph the op is applied to.
// ContractOp / DeleteCycleOp / DeleteVertexOp form the plain minor algebra;
// DemoteOp extends it to the starred algebra; SubdivideOp /
// SubdivideFreeLoopOp / MergeOp appear in construction replays.
struct ContractOp {
    EdgeId edge;
    bool operator==(const ContractOp&) const = default;
};
struct DeleteCycleOp {
    std::vector<EdgeId> edges; // in cycle order
    bool operator==(const DeleteCycleOp&) const = default;
};
struct DeleteVertexOp {
    VertexId vertex;
    bool operator==(const DeleteVertexOp&) const = default;
};
struct DemoteOp {
    VertexId vertex;
    HalfEdgeId h1, h2;
    std::vector<EdgeId> witness; // witness cycle in edge order
    bool operator==(const DemoteOp&) const = default;
};
struct SubdivideOp {
    EdgeId edge;
    bool operator==(const SubdivideOp&) const = default;
};
struct SubdivideFreeLoopOp {
    bool operator==(const SubdivideFreeLoopOp&) const = default;
};
struct MergeOp {
    VertexId u, w;
    bool operator==(const MergeOp&) const = default;
};

using TraceOp = std::variant<ContractOp, DeleteCycleOp, DeleteVertexOp, DemoteOp, SubdivideOp,
                             SubdivideFreeLoopOp, MergeOp>;

bool is_minor_op(const TraceOp& op);      // contract / delcycle / delvertex
bool is_minor_star_op(const TraceOp& op); // minor ops plus demote

/// Validated operation sequence from a source graph to a target graph.
/// Intermediate graphs are recomputed, never stored.
struct Trace {
    Multigraph source;
    std::vector<TraceOp> ops;
    Multigraph target;
};

/// Apply one op, checking its precondition (throws PreconditionError).
Multigraph apply_op(const Multigraph& g, const TraceOp& op);

/// Replay ops from the source, checking every precondition; the final graph
/// must be isomorphic to the target. Throws TraceError naming the first
/// invalid step. Returns the final graph.
Multigraph apply_trace(const Trace& t);

/// Id images across one op: where each old vertex/edge id ends up (-1 when
/// removed). Contraction maps both endpoints to the merged vertex; a
/// demotion maps its two owning edges to -1 (the fused edge is appended
/// last in the result). Subdivision keeps the split edge's id for the
/// (u, z) half and appends the new edge and vertex.
struct IdMaps {
    std::vector<int> vertex;
    std::vector<int> edge;
};
IdMaps id_maps(const Multigraph& pre, const TraceOp& op);

/// Convenience builder: applies ops to a working graph as they are
/// recorded, so payloads always use current ids.
class TraceBuilder {
public:
    explicit TraceBuilder(Multigraph source) : source_(source), current_(std::move(source)) {}

    const Multigraph& current() const { return current_; }
    const std::vector<TraceOp>& ops() const { return ops_; }

    /// Apply and record; returns the id maps of the step.
    IdMaps push(const TraceOp& op);

    Trace finish() const { return Trace{source_, ops_, current_}; }

private:
    Multigraph source_;
    Multigraph current_;
    std::vector<TraceOp> ops_;
};

} // namespace eumin
