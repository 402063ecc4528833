#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "eumin/cycle.hpp"
#include "eumin/multigraph.hpp"

namespace eumin {

/// Combinatorial embedding: a cyclic order of incident half-edges per
/// vertex. Every half-edge appears exactly once across all vertices; a
/// loop contributes both its half-edges at one vertex.
struct RotationSystem {
    std::vector<std::vector<HalfEdgeId>> order; // indexed by vertex

    bool operator==(const RotationSystem&) const = default;
};

void check_rotation_system(const Multigraph& g, const RotationSystem& rot);

/// Face boundary walks of the embedding, each a closed half-edge walk.
/// Walks are traced per component; the sum of lengths is 2|E|.
std::vector<std::vector<HalfEdgeId>> faces(const Multigraph& g, const RotationSystem& rot);

/// Number of plane faces when all components share one outer face:
/// traced walks minus (components with edges) plus one.
int plane_face_count(const Multigraph& g, const RotationSystem& rot);

/// V - E + F == 2 on every component with at least one edge.
bool rotation_is_planar(const Multigraph& g, const RotationSystem& rot);

struct KuratowskiWitness {
    enum class Kind { k5_subdivision, k33_subdivision };
    Kind kind;
    std::vector<VertexId> branch_vertices;
    std::vector<std::vector<EdgeId>> paths; // internally disjoint subdivision paths
};

void check_kuratowski_witness(const Multigraph& g, const KuratowskiWitness& w);

using PlanarityResult = std::variant<RotationSystem, KuratowskiWitness>;

/// Planarity test. Planar: a rotation system satisfying Euler's formula per
/// component (parallels and loops re-inserted adjacent to their parent
/// after testing the simplification). Non-planar: a subdivision witness
/// lifted back to multigraph edge ids.
PlanarityResult is_planar(const Multigraph& g);

inline bool planar(const Multigraph& g) {
    return std::holds_alternative<RotationSystem>(is_planar(g));
}

/// Exhaustive-rotation test oracle: searches all rotation systems (per
/// component) for one satisfying Euler's formula. Falls back to the
/// simplified graph when the rotation space exceeds the cap.
bool planar_by_rotation_search(const Multigraph& g, long rotation_cap = 2'000'000);

/// Embeddable with every vertex on the outer face; tested by adding an
/// apex vertex adjacent to every vertex and testing planarity.
bool is_outerplanar(const Multigraph& g);

/// Perform an admissible demotion and carry the embedding along. When the
/// two deleted half-edges are not consecutive at v in rot, the result is
/// re-embedded from scratch (the demoted graph is planar whenever g is).
std::pair<Multigraph, RotationSystem> demote_in_embedding(const Multigraph& g,
                                                          const RotationSystem& rot, VertexId v,
                                                          HalfEdgeId h1, HalfEdgeId h2,
                                                          const Cycle& witness);

} // namespace eumin
