#ifndef HYPERENT_FAMILIES_HPP
#define HYPERENT_FAMILIES_HPP

#include <utility>
#include <vector>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

/// Ordinary simple graph, used as the base of the power construction.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Named structure families.
///   Hyperstar: m edges through one center vertex.
///   TStar/HI/HIII: the maximum-degree-2 members of the supertree /
///   unicyclic / bicyclic class (a property, not a single shape).
///   HII: one degree-m center plus one auxiliary degree-2 vertex shared by
///   two of the center's edges.
///   HIV: center plus two degree-2 vertices shared by two different edge
///   pairs; HV: center plus two degree-2 vertices shared by the same pair.
enum class FamilyTag { Hyperstar, TStar, HI, HII, HIII, HIV, HV, None };

const char* to_string(FamilyTag tag);
FamilyTag family_tag_from_string(const std::string& name);

/// k-th power of a simple graph: each pair-edge is padded with k-2 fresh
/// vertices. Original degrees are preserved; padded vertices have degree 1.
Hypergraph power(const Graph& g, int k);

/// Hyperstar with m edges: the k-th power of the star on m+1 vertices.
Hypergraph hyperstar(int m, int k);

/// Loose path with m edges: the k-th power of the path on m+1 vertices.
Hypergraph loose_path(int m, int k);

/// One canonical member of the given family with m edges. For the
/// max-degree-2 families this is one representative shape (loose path for
/// TStar, a short cycle with a pendant path for HI, chained 2-cycles or the
/// theta shape for HIII); the family itself is defined by the predicate.
/// Throws InvalidParameters for infeasible (tag, m, k) combinations
/// (e.g. HV at k=3, HIV at m=2).
Hypergraph family_member(FamilyTag tag, int m, int k);

/// Structural membership predicate; degree pattern plus edge-intersection
/// pattern, no isomorphism search. Several predicates can hold at once in
/// the degenerate small-m cases (e.g. every 2-edge bicyclic hypergraph is
/// both HIII and HV).
bool is_family_member(FamilyTag tag, const Hypergraph& h);

/// All family predicates that hold, in enum order.
std::vector<FamilyTag> family_tags(const Hypergraph& h);

/// Single best tag: the specific shapes (Hyperstar, HII, HIV, HV) win over
/// the max-degree-2 families when both apply. None if nothing matches.
/// Throws Disconnected for disconnected input.
FamilyTag membership(const Hypergraph& h);

/// Exhaustive isomorphism test with degree/co-degree pruning. Intended for
/// small instances; throws TooLarge when either side exceeds max_vertices.
bool is_isomorphic(const Hypergraph& a, const Hypergraph& b, int max_vertices = 14);

} // namespace hyperent

#endif
