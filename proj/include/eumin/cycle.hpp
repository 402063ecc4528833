#pragma once

#include <vector>

#include "eumin/multigraph.hpp"

namespace eumin {

/// Closed walk with pairwise-distinct vertices and pairwise-distinct edges.
/// edges[i] joins vertices[i] and vertices[(i+1) % k]. Length 1 is a single
/// loop, length 2 a pair of distinct parallel edges, length >= 3 an
/// ordinary cycle.
struct Cycle {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;

    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const Cycle&) const = default;
};

/// Build and validate a cycle from an ordered edge list, inferring the
/// vertex sequence. Throws PreconditionError when the edges do not form a
/// cycle of g (reused edge, open walk, repeated vertex).
Cycle cycle_from_edges(const Multigraph& g, const std::vector<EdgeId>& edges);

bool is_valid_cycle(const Multigraph& g, const Cycle& c);
void check_cycle(const Multigraph& g, const Cycle& c);

/// True when the cycle visits v with edges e_prev, e_next consecutive at v.
bool cycle_routes_through(const Cycle& c, VertexId v, EdgeId e1, EdgeId e2);

/// Rotation/reflection-invariant key for deduplication.
std::vector<EdgeId> cycle_canonical_key(const Cycle& c);

/// Every cycle of g exactly once up to rotation/reflection, in a
/// deterministic order (by length, then vertex sequence, then edge ids).
/// Loops and digons included. Bound: |V| <= 10.
std::vector<Cycle> enumerate_cycles(const Multigraph& g);

/// Remove the edges of a valid cycle; vertices are kept.
Multigraph delete_cycle(const Multigraph& g, const Cycle& c);

} // namespace eumin
