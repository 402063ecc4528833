#pragma once

#include <functional>
#include <vector>

#include "eumin/multigraph.hpp"

namespace eumin {

/// Exactly one representative per isomorphism class with at most n_max
/// vertices and m_max edges (free_loops = 0), in deterministic order
/// (vertex count, then edge count, then canonical code). Canonical-form
/// deduplicated breadth-first edge addition. Bounds: n_max <= 7,
/// m_max <= 14.
std::vector<Multigraph> enumerate_multigraphs(int n_max, int m_max, bool connected = false);

/// Representatives of every Eulerian isomorphism class with at most n_max
/// vertices and m_max edges, generated by closing edgeless graphs under
/// cycle addition (Veblen). Same bounds and ordering as above.
std::vector<Multigraph> enumerate_eulerian_multigraphs(int n_max, int m_max);

/// Representatives of every connected 4-regular planar-unfiltered class on
/// exactly n vertices (so 2n edges), via degree-constrained backtracking.
std::vector<Multigraph> enumerate_4_regular(int n);

} // namespace eumin
