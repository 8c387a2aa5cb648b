#include "hyperent/families.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace hyperent {

const char* to_string(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::Hyperstar: return "Hyperstar";
    case FamilyTag::TStar: return "TStar";
    case FamilyTag::HI: return "HI";
    case FamilyTag::HII: return "HII";
    case FamilyTag::HIII: return "HIII";
    case FamilyTag::HIV: return "HIV";
    case FamilyTag::HV: return "HV";
    case FamilyTag::None: return "None";
    }
    return "None";
}

FamilyTag family_tag_from_string(const std::string& name) {
    if (name == "Hyperstar" || name == "hyperstar") return FamilyTag::Hyperstar;
    if (name == "TStar" || name == "loose-path") return FamilyTag::TStar;
    if (name == "HI") return FamilyTag::HI;
    if (name == "HII") return FamilyTag::HII;
    if (name == "HIII") return FamilyTag::HIII;
    if (name == "HIV") return FamilyTag::HIV;
    if (name == "HV") return FamilyTag::HV;
    if (name == "None") return FamilyTag::None;
    throw Error(ErrorCode::InvalidParameters, "unknown family '" + name + "'");
}

Hypergraph power(const Graph& g, int k) {
    if (k < 3)
        throw Error(ErrorCode::InvalidParameters,
                    "power construction requires k >= 3, got " + std::to_string(k));
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : g.edges) {
        if (a == b)
            throw Error(ErrorCode::InvalidParameters,
                        "graph has a loop at vertex " + std::to_string(a));
        if (a < 0 || b < 0 || a >= g.n || b >= g.n)
            throw Error(ErrorCode::VertexOutOfRange, "graph edge endpoint out of range");
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw Error(ErrorCode::DuplicateEdge, "graph has a duplicate edge");
    }

    std::vector<Edge> edges;
    edges.reserve(g.edges.size());
    int next = g.n;
    for (auto [a, b] : g.edges) {
        Edge e{a, b};
        for (int pad = 0; pad < k - 2; ++pad)
            e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return Hypergraph::validate(k, next, std::move(edges));
}

namespace {

Graph star_graph(int leaves) {
    Graph g;
    g.n = leaves + 1;
    for (int i = 1; i <= leaves; ++i)
        g.edges.emplace_back(0, i);
    return g;
}

Graph path_graph(int vertices) {
    Graph g;
    g.n = vertices;
    for (int i = 0; i + 1 < vertices; ++i)
        g.edges.emplace_back(i, i + 1);
    return g;
}

// Incremental builder: fixed vertices first, fresh pads allocated on demand.
struct Builder {
    int next = 0;
    std::vector<Edge> edges;

    int fresh() { return next++; }

    void edge_with_pads(std::vector<int> fixed, int k) {
        while (static_cast<int>(fixed.size()) < k)
            fixed.push_back(fresh());
        edges.push_back(std::move(fixed));
    }

    // Appends a loose path of `count` edges hanging from `attach`.
    void tail(int attach, int count, int k) {
        for (int i = 0; i < count; ++i) {
            Edge e{attach};
            while (static_cast<int>(e.size()) < k)
                e.push_back(fresh());
            attach = e.back();
            edges.push_back(std::move(e));
        }
    }

    Hypergraph finish(int k) {
        return Hypergraph::validate(k, next, std::move(edges));
    }
};

void require(bool ok, const std::string& what) {
    if (!ok)
        throw Error(ErrorCode::InvalidParameters, what);
}

Hypergraph make_hi(int m, int k) {
    require(m >= 2, "HI requires m >= 2");
    Builder b;
    if (m == 2) {
        // Two edges sharing two vertices.
        int x = b.fresh(), y = b.fresh();
        b.edge_with_pads({x, y}, k);
        b.edge_with_pads({x, y}, k);
        return b.finish(k);
    }
    // Loose triangle with a pendant path from one padded vertex.
    int u = b.fresh(), v = b.fresh(), w = b.fresh();
    int pad = b.fresh();
    Edge first{u, v, pad};
    while (static_cast<int>(first.size()) < k)
        first.push_back(b.fresh());
    b.edges.push_back(std::move(first));
    b.edge_with_pads({v, w}, k);
    b.edge_with_pads({w, u}, k);
    b.tail(pad, m - 3, k);
    return b.finish(k);
}

Hypergraph make_hiii(int m, int k) {
    require(m >= 2, "HIII requires m >= 2");
    Builder b;
    if (m == 2) {
        require(k >= 4, "bicyclic hypergraphs with m = 2 require k >= 4");
        int x = b.fresh(), y = b.fresh(), z = b.fresh();
        b.edge_with_pads({x, y, z}, k);
        b.edge_with_pads({x, y, z}, k);
        return b.finish(k);
    }
    if (m == 3) {
        if (k >= 4) {
            // Two 2-cycles fused through the middle edge.
            int a = b.fresh(), bb = b.fresh(), c = b.fresh(), d = b.fresh();
            b.edge_with_pads({a, bb}, k);
            b.edge_with_pads({a, bb, c, d}, k);
            b.edge_with_pads({c, d}, k);
        } else {
            // Theta shape: one 2-cycle closed again through a third edge.
            int a = b.fresh(), bb = b.fresh(), c = b.fresh(), d = b.fresh();
            b.edge_with_pads({a, bb, c}, k);
            b.edge_with_pads({a, bb, d}, k);
            b.edge_with_pads({c, d}, k);
        }
        return b.finish(k);
    }
    // Two 2-cycles chained: A=B on {a,b}, C=D on {c,d}, B-C joined by a
    // loose path through x (length m-4 >= 0 extra edges).
    int a = b.fresh(), bb = b.fresh(), c = b.fresh(), d = b.fresh();
    int x = b.fresh();
    b.edge_with_pads({a, bb}, k);
    b.edge_with_pads({a, bb, x}, k);
    int attach = x;
    for (int i = 0; i < m - 4; ++i) {
        Edge e{attach};
        while (static_cast<int>(e.size()) < k)
            e.push_back(b.fresh());
        attach = e.back();
        b.edges.push_back(std::move(e));
    }
    b.edge_with_pads({attach, c, d}, k);
    b.edge_with_pads({c, d}, k);
    return b.finish(k);
}

Hypergraph make_hii(int m, int k) {
    require(m >= 2, "HII requires m >= 2");
    Builder b;
    int u = b.fresh(), w = b.fresh();
    b.edge_with_pads({u, w}, k);
    b.edge_with_pads({u, w}, k);
    for (int i = 2; i < m; ++i)
        b.edge_with_pads({u}, k);
    return b.finish(k);
}

Hypergraph make_hiv(int m, int k) {
    require(m >= 3, "HIV requires m >= 3 (two distinct edge pairs)");
    Builder b;
    int u = b.fresh(), w1 = b.fresh(), w2 = b.fresh();
    if (m == 3) {
        // The pairs share the middle edge, which carries both w1 and w2.
        b.edge_with_pads({u, w1}, k);
        b.edge_with_pads({u, w1, w2}, k);
        b.edge_with_pads({u, w2}, k);
    } else {
        b.edge_with_pads({u, w1}, k);
        b.edge_with_pads({u, w1}, k);
        b.edge_with_pads({u, w2}, k);
        b.edge_with_pads({u, w2}, k);
        for (int i = 4; i < m; ++i)
            b.edge_with_pads({u}, k);
    }
    return b.finish(k);
}

Hypergraph make_hv(int m, int k) {
    require(m >= 2, "HV requires m >= 2");
    require(k >= 4, "HV is infeasible at k = 3 (two distinct 3-edges cannot share 3 vertices)");
    Builder b;
    int u = b.fresh(), w1 = b.fresh(), w2 = b.fresh();
    b.edge_with_pads({u, w1, w2}, k);
    b.edge_with_pads({u, w1, w2}, k);
    for (int i = 2; i < m; ++i)
        b.edge_with_pads({u}, k);
    return b.finish(k);
}

} // namespace

Hypergraph hyperstar(int m, int k) {
    if (m < 1)
        throw Error(ErrorCode::InvalidParameters, "hyperstar requires m >= 1");
    return power(star_graph(m), k);
}

Hypergraph loose_path(int m, int k) {
    if (m < 1)
        throw Error(ErrorCode::InvalidParameters, "loose path requires m >= 1");
    return power(path_graph(m + 1), k);
}

Hypergraph family_member(FamilyTag tag, int m, int k) {
    if (k < 3)
        throw Error(ErrorCode::InvalidParameters, "families require k >= 3");
    switch (tag) {
    case FamilyTag::Hyperstar: return hyperstar(m, k);
    case FamilyTag::TStar:
        require(m >= 2, "TStar requires m >= 2 (maximum degree 2)");
        return loose_path(m, k);
    case FamilyTag::HI: return make_hi(m, k);
    case FamilyTag::HII: return make_hii(m, k);
    case FamilyTag::HIII: return make_hiii(m, k);
    case FamilyTag::HIV: return make_hiv(m, k);
    case FamilyTag::HV: return make_hv(m, k);
    case FamilyTag::None:
        break;
    }
    throw Error(ErrorCode::InvalidParameters, "no constructor for family tag None");
}

namespace {

// Degree pattern (m, 2, ..., 2, 1, ..., 1) with `twos` auxiliary degree-2
// vertices. Returns the candidate centers (vertices of degree m that lie in
// every edge) or empty if the pattern does not match.
std::vector<int> center_candidates(const Hypergraph& h, int twos) {
    const int m = h.edge_count();
    std::vector<int> deg = h.vertex_degrees();
    std::vector<int> sorted = deg;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());

    std::vector<int> expected;
    expected.push_back(m);
    for (int i = 0; i < twos; ++i)
        expected.push_back(2);
    while (static_cast<int>(expected.size()) < h.vertex_count())
        expected.push_back(1);
    std::sort(expected.begin(), expected.end(), std::greater<int>());
    if (sorted != expected)
        return {};

    std::vector<int> centers;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (deg[static_cast<size_t>(v)] != m)
            continue;
        bool in_all = true;
        for (const Edge& e : h.edges())
            if (!std::binary_search(e.begin(), e.end(), v)) {
                in_all = false;
                break;
            }
        if (in_all)
            centers.push_back(v);
    }
    return centers;
}

// Indices of the (exactly two) edges containing v.
std::pair<int, int> edge_pair_of(const Hypergraph& h, int v) {
    int first = -1, second = -1;
    for (int i = 0; i < h.edge_count(); ++i) {
        if (std::binary_search(h.edge(i).begin(), h.edge(i).end(), v)) {
            if (first < 0) first = i;
            else second = i;
        }
    }
    return {first, second};
}

bool matches_hii(const Hypergraph& h) {
    for (int u : center_candidates(h, 1)) {
        std::vector<int> deg = h.vertex_degrees();
        for (int v = 0; v < h.vertex_count(); ++v)
            if (v != u && deg[static_cast<size_t>(v)] == 2)
                return true; // u in all edges, so w's two edges contain u
    }
    return false;
}

bool matches_hiv_or_hv(const Hypergraph& h, bool want_same_pair) {
    for (int u : center_candidates(h, 2)) {
        std::vector<int> deg = h.vertex_degrees();
        std::vector<int> aux;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (v != u && deg[static_cast<size_t>(v)] == 2)
                aux.push_back(v);
        if (aux.size() != 2)
            continue;
        bool same = edge_pair_of(h, aux[0]) == edge_pair_of(h, aux[1]);
        if (same == want_same_pair)
            return true;
    }
    return false;
}

} // namespace

bool is_family_member(FamilyTag tag, const Hypergraph& h) {
    StructureClass sc = classify(h);
    if (!sc.connected)
        return false;
    const int delta = max_degree(h);
    switch (tag) {
    case FamilyTag::Hyperstar: {
        if (sc.tag != StructureTag::Supertree)
            return false;
        DegreeSequence seq = degree_sequence(h);
        if (seq.values.front() != h.edge_count())
            return false;
        for (size_t i = 1; i < seq.values.size(); ++i)
            if (seq.values[i] != 1)
                return false;
        return true;
    }
    case FamilyTag::TStar:
        return sc.tag == StructureTag::Supertree && delta == 2;
    case FamilyTag::HI:
        return sc.tag == StructureTag::Unicyclic && delta == 2;
    case FamilyTag::HII:
        return sc.tag == StructureTag::Unicyclic && matches_hii(h);
    case FamilyTag::HIII:
        return sc.tag == StructureTag::Bicyclic && delta == 2;
    case FamilyTag::HIV:
        return sc.tag == StructureTag::Bicyclic && matches_hiv_or_hv(h, false);
    case FamilyTag::HV:
        return sc.tag == StructureTag::Bicyclic && matches_hiv_or_hv(h, true);
    case FamilyTag::None:
        return false;
    }
    return false;
}

std::vector<FamilyTag> family_tags(const Hypergraph& h) {
    static constexpr FamilyTag all[] = {FamilyTag::Hyperstar, FamilyTag::TStar,
                                        FamilyTag::HI,        FamilyTag::HII,
                                        FamilyTag::HIII,      FamilyTag::HIV,
                                        FamilyTag::HV};
    std::vector<FamilyTag> tags;
    for (FamilyTag tag : all)
        if (is_family_member(tag, h))
            tags.push_back(tag);
    return tags;
}

FamilyTag membership(const Hypergraph& h) {
    if (!classify(h).connected)
        throw Error(ErrorCode::Disconnected, "membership requires a connected hypergraph");
    // Specific shapes take precedence over the max-degree-2 families in the
    // degenerate small-m coincidences.
    static constexpr FamilyTag priority[] = {FamilyTag::Hyperstar, FamilyTag::HII,
                                             FamilyTag::HIV,       FamilyTag::HV,
                                             FamilyTag::TStar,     FamilyTag::HI,
                                             FamilyTag::HIII};
    for (FamilyTag tag : priority)
        if (is_family_member(tag, h))
            return tag;
    return FamilyTag::None;
}

namespace {

std::vector<int> sorted_intersection_profile(const Hypergraph& h) {
    std::vector<int> sizes;
    const int m = h.edge_count();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge& a = h.edge(i);
            const Edge& b = h.edge(j);
            int count = 0;
            size_t p = 0, q = 0;
            while (p < a.size() && q < b.size()) {
                if (a[p] < b[q]) ++p;
                else if (a[p] > b[q]) ++q;
                else { ++count; ++p; ++q; }
            }
            sizes.push_back(count);
        }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

struct IsoSearch {
    int n = 0;
    std::vector<uint64_t> edges_b;            // sorted edge masks of b
    std::vector<std::vector<int>> cod_a, cod_b;
    std::vector<std::vector<int>> incident_a; // vertex -> edge indices in a
    const std::vector<Edge>* a_edges = nullptr;
    std::vector<int> deg_a, deg_b;
    std::vector<int> order;      // a-vertices, high degree first
    std::vector<int> mapping;    // a-vertex -> b-vertex or -1
    std::vector<char> used;      // b-vertex already taken
    std::vector<int> remaining;  // per a-edge: unmapped vertex count

    bool search(size_t depth) {
        if (depth == order.size())
            return true;
        int va = order[depth];
        for (int vb = 0; vb < n; ++vb) {
            if (used[static_cast<size_t>(vb)] || deg_a[static_cast<size_t>(va)] != deg_b[static_cast<size_t>(vb)])
                continue;
            bool ok = true;
            for (size_t d = 0; d < depth && ok; ++d) {
                int xa = order[d];
                ok = cod_a[static_cast<size_t>(va)][static_cast<size_t>(xa)] ==
                     cod_b[static_cast<size_t>(vb)][static_cast<size_t>(mapping[static_cast<size_t>(xa)])];
            }
            if (!ok)
                continue;
            mapping[static_cast<size_t>(va)] = vb;
            used[static_cast<size_t>(vb)] = 1;
            std::vector<int> completed;
            for (int e : incident_a[static_cast<size_t>(va)]) {
                if (--remaining[static_cast<size_t>(e)] == 0) {
                    completed.push_back(e);
                    uint64_t image = 0;
                    for (int v : (*a_edges)[static_cast<size_t>(e)])
                        image |= uint64_t(1) << mapping[static_cast<size_t>(v)];
                    if (!std::binary_search(edges_b.begin(), edges_b.end(), image)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok && search(depth + 1))
                return true;
            for (int e : incident_a[static_cast<size_t>(va)])
                ++remaining[static_cast<size_t>(e)];
            used[static_cast<size_t>(vb)] = 0;
            mapping[static_cast<size_t>(va)] = -1;
        }
        return false;
    }
};

std::vector<std::vector<int>> codegree_matrix(const Hypergraph& h) {
    std::vector<std::vector<int>> cod(
        static_cast<size_t>(h.vertex_count()),
        std::vector<int>(static_cast<size_t>(h.vertex_count()), 0));
    for (const Edge& e : h.edges())
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) {
                ++cod[static_cast<size_t>(e[i])][static_cast<size_t>(e[j])];
                ++cod[static_cast<size_t>(e[j])][static_cast<size_t>(e[i])];
            }
    return cod;
}

} // namespace

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b, int max_vertices) {
    if (a.vertex_count() > max_vertices || b.vertex_count() > max_vertices)
        throw Error(ErrorCode::TooLarge,
                    "isomorphism search limited to " + std::to_string(max_vertices) +
                        " vertices; use labeled comparison instead");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        a.k() != b.k())
        return false;
    if (degree_sequence(a).values != degree_sequence(b).values)
        return false;
    if (sorted_intersection_profile(a) != sorted_intersection_profile(b))
        return false;

    IsoSearch s;
    s.n = a.vertex_count();
    for (const Edge& e : b.edges()) {
        uint64_t mask = 0;
        for (int v : e)
            mask |= uint64_t(1) << v;
        s.edges_b.push_back(mask);
    }
    std::sort(s.edges_b.begin(), s.edges_b.end());
    s.cod_a = codegree_matrix(a);
    s.cod_b = codegree_matrix(b);
    s.a_edges = &a.edges();
    s.deg_a = a.vertex_degrees();
    s.deg_b = b.vertex_degrees();
    s.incident_a.resize(static_cast<size_t>(s.n));
    for (int i = 0; i < a.edge_count(); ++i)
        for (int v : a.edge(i))
            s.incident_a[static_cast<size_t>(v)].push_back(i);
    s.order.resize(static_cast<size_t>(s.n));
    for (int v = 0; v < s.n; ++v)
        s.order[static_cast<size_t>(v)] = v;
    std::stable_sort(s.order.begin(), s.order.end(), [&](int x, int y) {
        return s.deg_a[static_cast<size_t>(x)] > s.deg_a[static_cast<size_t>(y)];
    });
    s.mapping.assign(static_cast<size_t>(s.n), -1);
    s.used.assign(static_cast<size_t>(s.n), 0);
    s.remaining.resize(static_cast<size_t>(a.edge_count()));
    for (int i = 0; i < a.edge_count(); ++i)
        s.remaining[static_cast<size_t>(i)] = a.k();
    return s.search(0);
}

} // namespace hyperent
