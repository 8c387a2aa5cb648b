#ifndef HYPERENT_TEST_HELPERS_HPP
#define HYPERENT_TEST_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "hyperent/enumerate.hpp"
#include "hyperent/hypergraph.hpp"
#include "hyperent/transforms.hpp"

namespace testutil {

using namespace hyperent;

inline Hypergraph make(int n, std::vector<Edge> edges) {
    return Hypergraph::validate(n, std::move(edges));
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(rng.below(i + 1))]);
    return perm;
}

inline Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
        Edge mapped;
        for (int v : e)
            mapped.push_back(perm[static_cast<size_t>(v)]);
        edges.push_back(std::move(mapped));
    }
    return Hypergraph::validate(h.k(), h.vertex_count(), std::move(edges));
}

inline bool in_edge(const Edge& e, int v) {
    return std::binary_search(e.begin(), e.end(), v);
}

inline bool move_keeps_simple(const Hypergraph& h, const Move& mv) {
    Edge moved = h.edge(mv.edge_index);
    moved.erase(std::find(moved.begin(), moved.end(), mv.from_vertex));
    moved.insert(std::upper_bound(moved.begin(), moved.end(), mv.to_vertex),
                 mv.to_vertex);
    return !h.has_edge(moved);
}

enum class MoveKind {
    Smoothing,     // deg(from) >= deg(to) + 2
    Concentrating, // deg(to) >= deg(from)
    Any,           // any valid single move
};

inline std::vector<Move> candidate_moves(const Hypergraph& h, MoveKind kind) {
    std::vector<Move> moves;
    std::vector<int> deg = h.vertex_degrees();
    for (int e = 0; e < h.edge_count(); ++e) {
        for (int from : h.edge(e)) {
            if (deg[static_cast<size_t>(from)] < 2)
                continue; // would isolate the source
            for (int to = 0; to < h.vertex_count(); ++to) {
                if (in_edge(h.edge(e), to))
                    continue;
                if (kind == MoveKind::Smoothing &&
                    deg[static_cast<size_t>(from)] < deg[static_cast<size_t>(to)] + 2)
                    continue;
                if (kind == MoveKind::Concentrating &&
                    deg[static_cast<size_t>(to)] < deg[static_cast<size_t>(from)])
                    continue;
                Move mv{e, from, to};
                if (move_keeps_simple(h, mv))
                    moves.push_back(mv);
            }
        }
    }
    return moves;
}

// Release sites (edge, anchor) available on a linear hypergraph.
inline std::vector<std::pair<int, int>> release_sites(const Hypergraph& h) {
    std::vector<std::pair<int, int>> sites;
    if (!classify(h).linear)
        return sites;
    Pendency p = pendency(h);
    for (int e = 0; e < h.edge_count(); ++e) {
        if (std::binary_search(p.pendent_edges.begin(), p.pendent_edges.end(), e))
            continue;
        for (int u : h.edge(e))
            sites.emplace_back(e, u);
    }
    return sites;
}

// Independent enumeration oracle: plain set-based generation with a
// union-find connectivity check; shares nothing with the library scanner.
namespace oracle {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

inline void k_subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

inline long long count_class(int k, int m, int c) {
    const int n = m * (k - 1) + 1 - c;
    if (n < k)
        return 0;
    std::vector<std::vector<int>> subsets;
    k_subsets(n, k, subsets);
    long long count = 0;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == m) {
            std::vector<char> covered(static_cast<size_t>(n), 0);
            Dsu dsu(n);
            for (int idx : pick) {
                const auto& e = subsets[static_cast<size_t>(idx)];
                for (int v : e) {
                    covered[static_cast<size_t>(v)] = 1;
                    dsu.unite(e[0], v);
                }
            }
            for (int v = 0; v < n; ++v)
                if (!covered[static_cast<size_t>(v)])
                    return;
            for (int v = 1; v < n; ++v)
                if (dsu.find(v) != dsu.find(0))
                    return;
            ++count;
            return;
        }
        for (int idx = start; idx < static_cast<int>(subsets.size()); ++idx) {
            pick.push_back(idx);
            self(self, idx + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace oracle

} // namespace testutil

#endif
