#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace hyperent;
using testutil::make;

TEST_CASE("validate accepts a minimal two-edge instance") {
    Hypergraph h = make(5, {{0, 1, 2}, {2, 3, 4}});
    CHECK(h.k() == 3);
    CHECK(h.vertex_count() == 5);
    CHECK(h.edge_count() == 2);
    CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}, {2, 3, 4}});
}

TEST_CASE("validate canonicalizes edge and vertex order") {
    Hypergraph h = make(5, {{4, 3, 2}, {2, 1, 0}});
    CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}, {2, 3, 4}});
    Hypergraph again = Hypergraph::validate(h.vertex_count(), h.edges());
    CHECK(again == h);
}

TEST_CASE("validate rejects duplicate edges") {
    CHECK_THROWS_WITH_AS(make(5, {{0, 1, 2}, {0, 1, 2}}), doctest::Contains("appears twice"),
                         Error);
    try {
        make(5, {{0, 1, 2}, {2, 1, 0}});
        FAIL("expected DuplicateEdge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateEdge);
    }
}

TEST_CASE("validate rejects isolated vertices") {
    try {
        make(6, {{0, 1, 2}, {2, 3, 4}});
        FAIL("expected IsolatedVertex");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IsolatedVertex);
        CHECK(std::string(e.what()).find("5") != std::string::npos);
    }
}

TEST_CASE("validate rejects non-uniform edges") {
    try {
        Hypergraph::validate(3, 5, {{0, 1, 2}, {2, 3, 4, 0}});
        FAIL("expected NonUniformEdge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUniformEdge);
    }
    // a repeated vertex collapses below k distinct vertices
    try {
        Hypergraph::validate(3, 5, {{0, 0, 1}, {2, 3, 4}});
        FAIL("expected NonUniformEdge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUniformEdge);
    }
}

TEST_CASE("validate rejects out-of-range vertices") {
    try {
        make(5, {{0, 1, 2}, {2, 3, 9}});
        FAIL("expected VertexOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::VertexOutOfRange);
    }
}

TEST_CASE("degree sequence is non-increasing and sums to km") {
    SUBCASE("hyperstar k=3 m=2") {
        Hypergraph h = make(5, {{0, 1, 2}, {0, 3, 4}});
        CHECK(degree_sequence(h).values == std::vector<int>{2, 1, 1, 1, 1});
    }
    SUBCASE("single edge") {
        Hypergraph h = make(3, {{0, 1, 2}});
        CHECK(degree_sequence(h).values == std::vector<int>{1, 1, 1});
    }
    SUBCASE("center with one doubled leaf, k=3 m=3") {
        Hypergraph h = make(6, {{0, 1, 2}, {0, 1, 3}, {0, 4, 5}});
        CHECK(degree_sequence(h).values == std::vector<int>{3, 2, 1, 1, 1, 1});
    }
}

TEST_CASE("classification matches the cyclomatic formula") {
    SUBCASE("hyperstar k=3 m=3 is a linear supertree") {
        Hypergraph h = make(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
        StructureClass sc = classify(h);
        CHECK(sc.connected);
        CHECK(sc.components == 1);
        CHECK(sc.cyclomatic == 0);
        CHECK(sc.tag == StructureTag::Supertree);
        CHECK(sc.linear);
    }
    SUBCASE("two 3-edges sharing two vertices are unicyclic and non-linear") {
        Hypergraph h = make(4, {{0, 1, 2}, {0, 1, 3}});
        StructureClass sc = classify(h);
        CHECK(sc.connected);
        CHECK(sc.cyclomatic == 1);
        CHECK(sc.tag == StructureTag::Unicyclic);
        CHECK_FALSE(sc.linear);
    }
    SUBCASE("two 4-edges sharing three vertices are bicyclic") {
        Hypergraph h = make(5, {{0, 1, 2, 3}, {0, 1, 2, 4}});
        StructureClass sc = classify(h);
        CHECK(sc.connected);
        CHECK(sc.cyclomatic == 2);
        CHECK(sc.tag == StructureTag::Bicyclic);
        CHECK_FALSE(sc.linear);
    }
    SUBCASE("disconnected inputs keep the formula and get tag other") {
        Hypergraph h = make(6, {{0, 1, 2}, {3, 4, 5}});
        StructureClass sc = classify(h);
        CHECK_FALSE(sc.connected);
        CHECK(sc.components == 2);
        CHECK(sc.cyclomatic == 2 * 2 - 6 + 2);
        CHECK(sc.tag == StructureTag::Other);
    }
}

TEST_CASE("pendency counts degree-1 vertices and k-1-pendent edges") {
    SUBCASE("hyperstar k=3 m=2") {
        Hypergraph h = make(5, {{0, 1, 2}, {0, 3, 4}});
        Pendency p = pendency(h);
        CHECK(p.pendent_vertices.size() == 4);
        CHECK(p.pendent_edges.size() == 2);
        CHECK(p.non_pendent_vertex_count == 1);
    }
    SUBCASE("loose path k=3 m=3 has two pendent end edges") {
        Hypergraph h = make(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
        Pendency p = pendency(h);
        CHECK(p.non_pendent_vertex_count == 2);
        CHECK(p.pendent_edges == std::vector<int>{0, 2});
    }
    SUBCASE("a single edge has k pendent vertices and no pendent edge") {
        Hypergraph h = make(3, {{0, 1, 2}});
        Pendency p = pendency(h);
        CHECK(p.pendent_vertices.size() == 3);
        CHECK(p.pendent_edges.empty());
        CHECK(p.non_pendent_vertex_count == 0);
    }
}

TEST_CASE("max_degree reads the top of the degree sequence") {
    CHECK(max_degree(make(9, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {0, 7, 8}})) == 4);
    CHECK(max_degree(make(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}})) == 2);
    CHECK(max_degree(make(3, {{0, 1, 2}})) == 1);
}

TEST_CASE("degree sum equals the incidence count on random instances") {
    Rng rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        int k = 3 + rng.below(3);
        int m = 2 + rng.below(5);
        Hypergraph h = random_instance(StructureTag::Supertree, k, m, rng);
        long long incidences = 0;
        for (const Edge& e : h.edges())
            incidences += static_cast<long long>(e.size());
        CHECK(degree_sequence(h).sum() == incidences);
        CHECK(incidences == static_cast<long long>(k) * m);
    }
}

TEST_CASE("cyclomatic formula holds on disconnected unions") {
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        int k = 3 + rng.below(2);
        Hypergraph a = random_instance(StructureTag::Supertree, k, 2 + rng.below(3), rng);
        Hypergraph b = random_instance(StructureTag::Unicyclic, k, 2 + rng.below(3), rng);
        std::vector<Edge> edges = a.edges();
        for (const Edge& e : b.edges()) {
            Edge shifted;
            for (int v : e)
                shifted.push_back(v + a.vertex_count());
            edges.push_back(std::move(shifted));
        }
        Hypergraph u = Hypergraph::validate(k, a.vertex_count() + b.vertex_count(),
                                            std::move(edges));
        StructureClass sc = classify(u);
        CHECK(sc.components == 2);
        CHECK(sc.cyclomatic ==
              u.edge_count() * (k - 1) - u.vertex_count() + sc.components);
        CHECK(sc.cyclomatic == 1); // 0 from the supertree + 1 from the unicyclic part
    }
}

TEST_CASE("pendent vertex set is exactly the degree-1 set") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Hypergraph h = random_instance(StructureTag::Unicyclic, 3, 2 + rng.below(5), rng);
        Pendency p = pendency(h);
        std::vector<int> deg = h.vertex_degrees();
        std::vector<int> ones;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (deg[static_cast<size_t>(v)] == 1)
                ones.push_back(v);
        CHECK(p.pendent_vertices == ones);
    }
}
