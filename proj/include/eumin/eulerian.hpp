#pragma once

#include <set>
#include <vector>

#include "eumin/cycle.hpp"
#include "eumin/multigraph.hpp"
#include "eumin/trace.hpp"

namespace eumin {

/// Every vertex has even degree. Connectivity is not required; the empty
/// graph qualifies.
bool is_eulerian(const Multigraph& g);

/// Partition E(g) into edge-disjoint cycles by greedy walk extraction.
/// Requires an Eulerian graph without free-loops.
std::vector<Cycle> cycle_decomposition(const Multigraph& g);

/// Cycle decomposition restricted to an edge subset whose degrees are all
/// even; returned cycles carry g's edge ids.
std::vector<Cycle> cycle_decomposition_on(const Multigraph& g, const std::set<EdgeId>& edges);

/// Trace realizing the subgraph spanned by h_edges as a minor of g:
/// cycle-deletions of a decomposition of E(g) \ h_edges, then deletions of
/// the isolated vertices not meeting h_edges. Both g and the subgraph must
/// be Eulerian.
Trace eulerian_subgraph_as_minor(const Multigraph& g, const std::set<EdgeId>& h_edges);

/// Trace from a non-Eulerian graph to a two-vertex single edge: delete
/// edge-disjoint cycles until a forest remains, contract the forest down to
/// one surviving edge, then delete the leftover isolated vertices.
Trace k2_obstruction(const Multigraph& g);

} // namespace eumin
