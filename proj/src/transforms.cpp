#include "hyperent/transforms.hpp"

#include <algorithm>
#include <set>

#include "hyperent/entropy.hpp"

namespace hyperent {

namespace {

bool edge_contains(const Edge& e, int v) {
    return std::binary_search(e.begin(), e.end(), v);
}

std::string edge_repr(const Edge& e) {
    std::string out = "{";
    for (size_t i = 0; i < e.size(); ++i)
        out += (i ? " " : "") + std::to_string(e[i]);
    return out + "}";
}

} // namespace

Hypergraph move_edges(const Hypergraph& h, const MoveSpec& spec) {
    if (spec.moves.empty())
        throw Error(ErrorCode::InvalidParameters, "empty move spec");

    std::set<int> touched;
    for (const Move& mv : spec.moves) {
        if (mv.edge_index < 0 || mv.edge_index >= h.edge_count())
            throw Error(ErrorCode::InvalidParameters,
                        "edge index " + std::to_string(mv.edge_index) + " out of range");
        if (!touched.insert(mv.edge_index).second)
            throw Error(ErrorCode::InvalidParameters,
                        "edge " + std::to_string(mv.edge_index) + " moved twice");
        if (mv.to_vertex < 0 || mv.to_vertex >= h.vertex_count() || mv.from_vertex < 0 ||
            mv.from_vertex >= h.vertex_count())
            throw Error(ErrorCode::VertexOutOfRange, "move vertex out of range");
        const Edge& e = h.edge(mv.edge_index);
        if (!edge_contains(e, mv.from_vertex))
            throw Error(ErrorCode::SourceNotInEdge,
                        "vertex " + std::to_string(mv.from_vertex) + " is not in edge " +
                            edge_repr(e));
        if (edge_contains(e, mv.to_vertex))
            throw Error(ErrorCode::TargetInsideEdge,
                        "vertex " + std::to_string(mv.to_vertex) + " already lies in edge " +
                            edge_repr(e));
    }

    std::vector<Edge> edges = h.edges();
    for (const Move& mv : spec.moves) {
        Edge& e = edges[static_cast<size_t>(mv.edge_index)];
        e.erase(std::find(e.begin(), e.end(), mv.from_vertex));
        e.insert(std::upper_bound(e.begin(), e.end(), mv.to_vertex), mv.to_vertex);
    }

    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw Error(ErrorCode::MultipleEdgeCreated,
                        "move would duplicate edge " + edge_repr(sorted[i]));

    std::vector<int> degree(static_cast<size_t>(h.vertex_count()), 0);
    for (const Edge& e : sorted)
        for (int v : e)
            ++degree[static_cast<size_t>(v)];
    for (int v = 0; v < h.vertex_count(); ++v)
        if (degree[static_cast<size_t>(v)] == 0)
            throw Error(ErrorCode::IsolatedVertexCreated,
                        "move would isolate vertex " + std::to_string(v));

    return Hypergraph::validate(h.k(), h.vertex_count(), std::move(sorted));
}

Hypergraph edge_release(const Hypergraph& h, int edge_index, int anchor_vertex) {
    if (edge_index < 0 || edge_index >= h.edge_count())
        throw Error(ErrorCode::InvalidParameters,
                    "edge index " + std::to_string(edge_index) + " out of range");
    if (!classify(h).linear)
        throw Error(ErrorCode::NotLinear, "edge-releasing is defined on linear hypergraphs");
    const Edge& e = h.edge(edge_index);
    if (!edge_contains(e, anchor_vertex))
        throw Error(ErrorCode::AnchorNotInEdge,
                    "anchor " + std::to_string(anchor_vertex) + " is not in edge " +
                        edge_repr(e));
    Pendency p = pendency(h);
    if (std::binary_search(p.pendent_edges.begin(), p.pendent_edges.end(), edge_index))
        throw Error(ErrorCode::EdgeIsPendent,
                    "edge " + std::to_string(edge_index) + " is pendent; release is a no-op");

    MoveSpec spec;
    for (int i = 0; i < h.edge_count(); ++i) {
        if (i == edge_index)
            continue;
        const Edge& f = h.edge(i);
        if (edge_contains(f, anchor_vertex))
            continue;
        // Linearity: f meets e in at most one vertex.
        int shared = -1;
        for (int v : f)
            if (edge_contains(e, v)) {
                shared = v;
                break;
            }
        if (shared >= 0)
            spec.moves.push_back({i, shared, anchor_vertex});
    }
    if (spec.moves.empty())
        return h; // no adjacent edge avoids the anchor
    return move_edges(h, spec);
}

namespace {

// Reconstructs the single move (removed edge, added edge, source, target)
// between two edge sets, or throws PreconditionMismatch.
struct SingleMove {
    Edge removed, added;
    int from = -1, to = -1;
};

SingleMove reconstruct_single_move(const Hypergraph& before, const Hypergraph& after) {
    std::vector<Edge> removed, added;
    std::set_difference(before.edges().begin(), before.edges().end(), after.edges().begin(),
                        after.edges().end(), std::back_inserter(removed));
    std::set_difference(after.edges().begin(), after.edges().end(), before.edges().begin(),
                        before.edges().end(), std::back_inserter(added));
    if (removed.size() != 1 || added.size() != 1)
        throw Error(ErrorCode::PreconditionMismatch,
                    "edge sets do not differ by exactly one moved edge");
    Edge out_diff, in_diff;
    std::set_difference(removed[0].begin(), removed[0].end(), added[0].begin(),
                        added[0].end(), std::back_inserter(out_diff));
    std::set_difference(added[0].begin(), added[0].end(), removed[0].begin(),
                        removed[0].end(), std::back_inserter(in_diff));
    if (out_diff.size() != 1 || in_diff.size() != 1)
        throw Error(ErrorCode::PreconditionMismatch,
                    "moved edge changed by more than one vertex");
    return {removed[0], added[0], out_diff[0], in_diff[0]};
}

void require_same_shape(const Hypergraph& before, const Hypergraph& after) {
    if (before.k() != after.k() || before.vertex_count() != after.vertex_count() ||
        before.edge_count() != after.edge_count())
        throw Error(ErrorCode::PreconditionMismatch,
                    "operation preserves k, n and m, but they differ");
}

} // namespace

LemmaVerdict check_lemma_monotonicity(const Hypergraph& before, const Hypergraph& after,
                                      MonotoneLemma which) {
    require_same_shape(before, after);

    if (which == MonotoneLemma::SmoothingMove || which == MonotoneLemma::ConcentratingMove) {
        SingleMove mv = reconstruct_single_move(before, after);
        std::vector<int> deg = before.vertex_degrees();
        int d_from = deg[static_cast<size_t>(mv.from)];
        int d_to = deg[static_cast<size_t>(mv.to)];
        if (which == MonotoneLemma::SmoothingMove) {
            if (d_from < d_to + 2)
                throw Error(ErrorCode::PreconditionMismatch,
                            "smoothing move needs deg(source) >= deg(target) + 2, got " +
                                std::to_string(d_from) + " vs " + std::to_string(d_to));
        } else {
            if (d_to < d_from)
                throw Error(ErrorCode::PreconditionMismatch,
                            "concentrating move needs deg(target) >= deg(source), got " +
                                std::to_string(d_to) + " vs " + std::to_string(d_from));
        }
    } else {
        if (!classify(before).linear)
            throw Error(ErrorCode::PreconditionMismatch,
                        "edge-releasing requires a linear input");
        // Find a release site that reproduces `after`.
        bool found = false;
        Pendency p = pendency(before);
        for (int e = 0; e < before.edge_count() && !found; ++e) {
            if (std::binary_search(p.pendent_edges.begin(), p.pendent_edges.end(), e))
                continue;
            for (int u : before.edge(e)) {
                try {
                    if (edge_release(before, e, u) == after) {
                        found = true;
                        break;
                    }
                } catch (const Error& err) {
                    if (err.code() != ErrorCode::MultipleEdgeCreated)
                        throw;
                }
            }
        }
        if (!found)
            throw Error(ErrorCode::PreconditionMismatch,
                        "no edge-releasing operation maps this pair");
    }

    LemmaVerdict v{which, h_value(before), h_value(after), false};
    constexpr double margin = 1e-12;
    if (which == MonotoneLemma::SmoothingMove)
        v.holds = v.h_before - v.h_after > margin;
    else
        v.holds = v.h_after - v.h_before > margin;
    return v;
}

ClosureVerdict class_closure_check(const Hypergraph& before, const Hypergraph& after) {
    require_same_shape(before, after);
    StructureClass sb = classify(before);
    StructureClass sa = classify(after);
    ClosureVerdict verdict;
    verdict.before = sb.tag;
    verdict.after = sa.tag;
    if (!sa.connected) {
        verdict.state = ClosureVerdict::State::Disconnected;
    } else if (sa.tag == sb.tag) {
        verdict.state = ClosureVerdict::State::Preserved;
    } else {
        verdict.state = ClosureVerdict::State::Changed;
    }
    return verdict;
}

} // namespace hyperent
