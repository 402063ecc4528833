#pragma once

#include <string>
#include <vector>

#include "eumin/multigraph.hpp"

namespace eumin {

/// Canonical byte string identifying the isomorphism class: two multigraphs
/// have equal codes iff they are isomorphic (vertex bijection preserving
/// edge multiplicities and loop counts, equal free-loop counts).
///
/// Computed by degree/loop-refined backtracking over vertex orderings;
/// exhaustive and intended for |V| <= 12.
std::string canonical_code(const Multigraph& g);

/// A canonical labeling: permutation p with p[old] = new achieving the code.
std::vector<int> canonical_labeling(const Multigraph& g);

/// The graph relabeled into canonical form, with a deterministic edge order.
Multigraph canonical_graph(const Multigraph& g);

bool is_isomorphic(const Multigraph& g, const Multigraph& h);

/// Vertex bijection g -> h when isomorphic (via canonical labelings).
/// Empty optional-style: throws PreconditionError when not isomorphic.
std::vector<int> isomorphism_map(const Multigraph& g, const Multigraph& h);

} // namespace eumin
