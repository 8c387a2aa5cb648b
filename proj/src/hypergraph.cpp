#include "hyperent/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace hyperent {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonUniformEdge: return "NonUniformEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::TargetInsideEdge: return "TargetInsideEdge";
    case ErrorCode::SourceNotInEdge: return "SourceNotInEdge";
    case ErrorCode::MultipleEdgeCreated: return "MultipleEdgeCreated";
    case ErrorCode::IsolatedVertexCreated: return "IsolatedVertexCreated";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::AnchorNotInEdge: return "AnchorNotInEdge";
    case ErrorCode::EdgeIsPendent: return "EdgeIsPendent";
    case ErrorCode::PreconditionMismatch: return "PreconditionMismatch";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::RetryExhausted: return "RetryExhausted";
    case ErrorCode::SyntaxError: return "SyntaxError";
    }
    return "UnknownError";
}

const char* to_string(StructureTag tag) {
    switch (tag) {
    case StructureTag::Supertree: return "supertree";
    case StructureTag::Unicyclic: return "unicyclic";
    case StructureTag::Bicyclic: return "bicyclic";
    case StructureTag::Other: return "other";
    }
    return "other";
}

StructureTag structure_tag_from_string(const std::string& name) {
    if (name == "supertree") return StructureTag::Supertree;
    if (name == "unicyclic") return StructureTag::Unicyclic;
    if (name == "bicyclic") return StructureTag::Bicyclic;
    if (name == "other") return StructureTag::Other;
    throw Error(ErrorCode::InvalidParameters, "unknown structure class '" + name + "'");
}

Hypergraph Hypergraph::validate(int vertex_count, std::vector<Edge> edges) {
    if (edges.empty())
        throw Error(ErrorCode::InvalidParameters,
                    "cannot infer edge cardinality from an empty edge list");
    return validate(static_cast<int>(edges.front().size()), vertex_count, std::move(edges));
}

Hypergraph Hypergraph::validate(int k, int vertex_count, std::vector<Edge> edges) {
    if (k < 2)
        throw Error(ErrorCode::InvalidParameters, "edge cardinality k must be >= 2, got " +
                                                      std::to_string(k));
    if (vertex_count < k)
        throw Error(ErrorCode::InvalidParameters,
                    "vertex count " + std::to_string(vertex_count) +
                        " is smaller than edge cardinality " + std::to_string(k));
    if (edges.empty())
        throw Error(ErrorCode::IsolatedVertex, "no edges: every vertex is isolated");

    std::vector<char> covered(static_cast<size_t>(vertex_count), 0);
    for (size_t i = 0; i < edges.size(); ++i) {
        Edge& e = edges[i];
        for (int v : e) {
            if (v < 0 || v >= vertex_count)
                throw Error(ErrorCode::VertexOutOfRange,
                            "edge " + std::to_string(i) + " contains vertex " +
                                std::to_string(v) + ", valid range is 0.." +
                                std::to_string(vertex_count - 1));
        }
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (static_cast<int>(e.size()) != k)
            throw Error(ErrorCode::NonUniformEdge,
                        "edge " + std::to_string(i) + " has " + std::to_string(e.size()) +
                            " distinct vertices, expected " + std::to_string(k));
        for (int v : e)
            covered[static_cast<size_t>(v)] = 1;
    }
    for (int v = 0; v < vertex_count; ++v) {
        if (!covered[static_cast<size_t>(v)])
            throw Error(ErrorCode::IsolatedVertex,
                        "vertex " + std::to_string(v) + " appears in no edge");
    }

    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) {
            std::string repr;
            for (int v : edges[i]) repr += (repr.empty() ? "" : " ") + std::to_string(v);
            throw Error(ErrorCode::DuplicateEdge, "edge {" + repr + "} appears twice");
        }
    }
    return Hypergraph(k, vertex_count, std::move(edges));
}

std::vector<int> Hypergraph::vertex_degrees() const {
    std::vector<int> deg(static_cast<size_t>(n_), 0);
    for (const Edge& e : edges_)
        for (int v : e)
            ++deg[static_cast<size_t>(v)];
    return deg;
}

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
}

long long DegreeSequence::sum() const {
    return std::accumulate(values.begin(), values.end(), 0LL);
}

DegreeSequence degree_sequence(const Hypergraph& h) {
    DegreeSequence seq;
    seq.values = h.vertex_degrees();
    std::sort(seq.values.begin(), seq.values.end(), std::greater<int>());
    return seq;
}

int max_degree(const Hypergraph& h) {
    return degree_sequence(h).max();
}

namespace {

// Components of the vertex set under "share an edge" reachability,
// computed by flooding over edges.
int component_count(const Hypergraph& h) {
    const int m = h.edge_count();
    std::vector<char> edge_done(static_cast<size_t>(m), 0);
    std::vector<char> vertex_seen(static_cast<size_t>(h.vertex_count()), 0);
    std::vector<std::vector<int>> incident(static_cast<size_t>(h.vertex_count()));
    for (int i = 0; i < m; ++i)
        for (int v : h.edge(i))
            incident[static_cast<size_t>(v)].push_back(i);

    int components = 0;
    std::vector<int> stack;
    for (int start = 0; start < m; ++start) {
        if (edge_done[static_cast<size_t>(start)])
            continue;
        ++components;
        stack.push_back(start);
        edge_done[static_cast<size_t>(start)] = 1;
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            for (int v : h.edge(e)) {
                if (vertex_seen[static_cast<size_t>(v)])
                    continue;
                vertex_seen[static_cast<size_t>(v)] = 1;
                for (int f : incident[static_cast<size_t>(v)]) {
                    if (!edge_done[static_cast<size_t>(f)]) {
                        edge_done[static_cast<size_t>(f)] = 1;
                        stack.push_back(f);
                    }
                }
            }
        }
    }
    return components;
}

int intersection_size(const Edge& a, const Edge& b) {
    int count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

} // namespace

StructureClass classify(const Hypergraph& h) {
    StructureClass result;
    result.components = component_count(h);
    result.connected = (result.components == 1);
    result.cyclomatic =
        h.edge_count() * (h.k() - 1) - h.vertex_count() + result.components;

    if (!result.connected) {
        result.tag = StructureTag::Other;
    } else {
        switch (result.cyclomatic) {
        case 0: result.tag = StructureTag::Supertree; break;
        case 1: result.tag = StructureTag::Unicyclic; break;
        case 2: result.tag = StructureTag::Bicyclic; break;
        default: result.tag = StructureTag::Other; break;
        }
    }

    result.linear = true;
    const int m = h.edge_count();
    for (int i = 0; i < m && result.linear; ++i)
        for (int j = i + 1; j < m; ++j)
            if (intersection_size(h.edge(i), h.edge(j)) > 1) {
                result.linear = false;
                break;
            }
    return result;
}

Pendency pendency(const Hypergraph& h) {
    Pendency result;
    std::vector<int> deg = h.vertex_degrees();
    std::vector<char> pendent(static_cast<size_t>(h.vertex_count()), 0);
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (deg[static_cast<size_t>(v)] == 1) {
            pendent[static_cast<size_t>(v)] = 1;
            result.pendent_vertices.push_back(v);
        }
    }
    for (int i = 0; i < h.edge_count(); ++i) {
        int count = 0;
        for (int v : h.edge(i))
            count += pendent[static_cast<size_t>(v)];
        if (count == h.k() - 1)
            result.pendent_edges.push_back(i);
    }
    result.non_pendent_vertex_count =
        h.vertex_count() - static_cast<int>(result.pendent_vertices.size());
    return result;
}

} // namespace hyperent
