#ifndef HYPERENT_HYPERGRAPH_HPP
#define HYPERENT_HYPERGRAPH_HPP

#include <string>
#include <vector>

#include "hyperent/errors.hpp"

namespace hyperent {

using Edge = std::vector<int>;

/// A simple k-uniform hypergraph on vertices 0..n-1, stored in canonical
/// form: each edge strictly ascending, edge list sorted lexicographically.
/// Every vertex appears in at least one edge. Immutable after construction.
class Hypergraph {
public:
    /// Validates a raw (vertex count, edge list) pair. k is inferred from
    /// the first edge; every other edge must have the same cardinality.
    static Hypergraph validate(int vertex_count, std::vector<Edge> edges);

    /// Same, but with the edge cardinality given explicitly (file headers).
    static Hypergraph validate(int k, int vertex_count, std::vector<Edge> edges);

    int k() const { return k_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }

    /// Degree of each vertex, indexed by label.
    std::vector<int> vertex_degrees() const;

    bool has_edge(const Edge& sorted_edge) const;

    bool operator==(const Hypergraph& other) const = default;

private:
    Hypergraph(int k, int n, std::vector<Edge> edges)
        : k_(k), n_(n), edges_(std::move(edges)) {}

    int k_ = 0;
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Non-increasing degree sequence; entries sum to k*m.
struct DegreeSequence {
    std::vector<int> values;

    int max() const { return values.empty() ? 0 : values.front(); }
    long long sum() const;
};

DegreeSequence degree_sequence(const Hypergraph& h);
int max_degree(const Hypergraph& h);

enum class StructureTag { Supertree, Unicyclic, Bicyclic, Other };

const char* to_string(StructureTag tag);
StructureTag structure_tag_from_string(const std::string& name);

/// Classification record. cyclomatic = m(k-1) - n + components; the tag is
/// supertree/unicyclic/bicyclic exactly when connected with cyclomatic
/// number 0/1/2, otherwise Other.
struct StructureClass {
    bool connected = false;
    int components = 0;
    int cyclomatic = 0;
    StructureTag tag = StructureTag::Other;
    bool linear = false;
};

StructureClass classify(const Hypergraph& h);

/// Pendent vertices are exactly the degree-1 vertices; a pendent edge
/// contains exactly k-1 of them. A single free-standing edge has k pendent
/// vertices and therefore counts as non-pendent under the literal rule.
struct Pendency {
    std::vector<int> pendent_vertices;
    std::vector<int> pendent_edges; // indices into edges()
    int non_pendent_vertex_count = 0;
};

Pendency pendency(const Hypergraph& h);

} // namespace hyperent

#endif
