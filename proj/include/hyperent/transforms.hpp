#ifndef HYPERENT_TRANSFORMS_HPP
#define HYPERENT_TRANSFORMS_HPP

#include <vector>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

/// One edge move: replace edge(edge_index) by (edge \ {from}) u {to}.
struct Move {
    int edge_index = 0;
    int from_vertex = 0;
    int to_vertex = 0;
};

/// A batch of moves applied simultaneously. Edge indices must be distinct;
/// each source must lie inside its edge and each target outside it. The
/// result must stay simple and must not isolate any vertex.
struct MoveSpec {
    std::vector<Move> moves;
};

Hypergraph move_edges(const Hypergraph& h, const MoveSpec& spec);

/// Edge-releasing on a non-pendent edge e at anchor u of e: every edge
/// adjacent to e that avoids u is moved from its (unique, by linearity)
/// intersection vertex with e onto u. Requires a linear hypergraph.
/// Results at different anchors of the same edge are isomorphic.
Hypergraph edge_release(const Hypergraph& h, int edge_index, int anchor_vertex);

/// The three monotonicity contracts for h under the transformations:
///   SmoothingMove:      single move with deg(source) >= deg(target) + 2
///                       must strictly decrease h;
///   EdgeRelease:        edge-releasing must strictly increase h;
///   ConcentratingMove:  single move with deg(target) >= deg(source)
///                       must strictly increase h.
enum class MonotoneLemma { SmoothingMove, EdgeRelease, ConcentratingMove };

struct LemmaVerdict {
    MonotoneLemma which;
    double h_before = 0.0;
    double h_after = 0.0;
    bool holds = false; // strict inequality in the contract direction
};

/// Verifies that `after` really came from `before` by the claimed operation
/// (reconstructing the move from the edge sets, or searching for the
/// release site) and that the degree precondition held; then evaluates the
/// strict inequality. Throws PreconditionMismatch when the pair does not
/// fit the operation.
LemmaVerdict check_lemma_monotonicity(const Hypergraph& before, const Hypergraph& after,
                                      MonotoneLemma which);

/// Class preservation under move/release: a connected result keeps the
/// cyclomatic class of the input.
struct ClosureVerdict {
    enum class State { Preserved, Changed, Disconnected };
    State state = State::Disconnected;
    StructureTag before = StructureTag::Other;
    StructureTag after = StructureTag::Other;
};

ClosureVerdict class_closure_check(const Hypergraph& before, const Hypergraph& after);

} // namespace hyperent

#endif
