#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eumin/cycle.hpp"
#include "eumin/multigraph.hpp"

namespace eumin {

/// Evidence that a cycle is peripheral: the nonadjacent vertex pairs checked
/// chord-free, and the component counts before/after removing its vertices.
struct PeripheralCertificate {
    Cycle cycle;
    std::vector<std::pair<VertexId, VertexId>> chord_check;
    int components_before = 0;
    int components_after = 0;
};

/// No edge of g joins two vertices of c that are non-consecutive on c.
/// Parallel edges alongside cycle edges and loops at cycle vertices do not
/// count as chords.
bool is_induced(const Multigraph& g, const Cycle& c);

/// Removing V(c) (with incident edges) does not increase the number of
/// connected components.
bool is_non_separating(const Multigraph& g, const Cycle& c);

std::optional<PeripheralCertificate> is_peripheral(const Multigraph& g, const Cycle& c);

enum class PeripheralStrategy { direct, descent };

/// Some peripheral cycle if one exists. The direct strategy filters
/// enumerate_cycles; the descent strategy recurses through induced-cycle
/// removal and shortcuts across chords, falling back to the direct filter
/// when its derivation cannot conclude.
std::optional<PeripheralCertificate> find_peripheral_cycle(
    const Multigraph& g, PeripheralStrategy strategy = PeripheralStrategy::direct);

/// The descent derivation alone, without the exhaustive fallback. Any
/// returned cycle is verified peripheral; absence is not conclusive.
std::optional<Cycle> peripheral_by_descent_only(const Multigraph& g);

/// Which cycle arrangements count as a generalized bouquet at a hub.
/// hub_only: the n cycles pairwise share nothing but the hub (the bouquet
/// as a literal subgraph). shared: any n distinct cycles through one
/// vertex qualify, overlaps allowed — the reading under which bouquet-free
/// Eulerian graphs always have a peripheral cycle (see tests; K2,3 plus an
/// edge separates the two readings).
enum class BouquetReading { hub_only, shared };

/// True iff some vertex carries n cycles arranged per the reading. n >= 3.
bool contains_generalized_bouquet(const Multigraph& g, int n,
                                  BouquetReading reading = BouquetReading::hub_only);

/// Delete half-edges h1, h2 at v and glue the two surviving half-edges into
/// one new edge (appended last). Requires a peripheral witness cycle using
/// the two owning edges consecutively at v; when both half-edges form one
/// loop the witness is that loop and the demotion deletes it.
Multigraph admissible_demotion(const Multigraph& g, VertexId v, HalfEdgeId h1, HalfEdgeId h2,
                               const Cycle& witness);

/// Validation only; throws PreconditionError with the violated condition.
void check_demotion(const Multigraph& g, VertexId v, HalfEdgeId h1, HalfEdgeId h2,
                    const Cycle& witness);

/// All distinct admissible demotions of g as (v, h1, h2, witness), one
/// witness per half-edge pair, in deterministic order.
struct DemotionSite {
    VertexId vertex;
    HalfEdgeId h1, h2;
    Cycle witness;
};
std::vector<DemotionSite> enumerate_demotions(const Multigraph& g);

} // namespace eumin
