#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "plflow/errors.hpp"
#include "plflow/triangulation.hpp"

using namespace plflow;

TEST_CASE("single tetrahedron") {
    const Triangulation tri = make_builtin(BuiltinMesh::SingleTet);
    CHECK(tri.num_vertices == 4);
    CHECK(tri.num_edges() == 6);
    CHECK(tri.num_tets() == 1);
    CHECK_FALSE(tri.closed);
    for (const auto& tets : tri.tets_of_edge) CHECK(tets.size() == 1);
    const auto e = tet_edge_indices(tri, 0);
    CHECK(e == std::array<int, 6>{0, 1, 2, 3, 4, 5});
    CHECK(tri.edges[0] == std::array<int, 2>{0, 1});
    CHECK(tri.edges[5] == std::array<int, 2>{2, 3});
}

TEST_CASE("pentachoron = boundary of the 4-simplex") {
    const Triangulation tri = make_builtin(BuiltinMesh::Pentachoron);
    CHECK(tri.num_vertices == 5);
    CHECK(tri.num_edges() == 10);
    CHECK(tri.num_tets() == 5);
    CHECK(tri.closed);
    for (const auto& tets : tri.tets_of_edge) CHECK(tets.size() == 3);

    // independent enumeration: the tet set must be all 4-subsets of {0..4}
    std::set<std::array<int, 4>> expected;
    for (int skip = 0; skip < 5; ++skip) {
        std::array<int, 4> t;
        int k = 0;
        for (int v = 0; v < 5; ++v)
            if (v != skip) t[k++] = v;
        expected.insert(t);
    }
    std::set<std::array<int, 4>> got;
    for (auto t : tri.tetrahedra) {
        std::sort(t.begin(), t.end());
        got.insert(t);
    }
    CHECK(got == expected);

    // tet {0,1,2,3} maps to global edges (01,02,03,12,13,23)
    int idx = -1;
    for (int t = 0; t < tri.num_tets(); ++t)
        if (tri.tetrahedra[t] == std::array<int, 4>{0, 1, 2, 3}) idx = t;
    REQUIRE(idx >= 0);
    CHECK(tet_edge_indices(tri, idx) == std::array<int, 6>{0, 1, 2, 4, 5, 7});
}

TEST_CASE("sixteen cell") {
    const Triangulation tri = make_builtin(BuiltinMesh::SixteenCell);
    CHECK(tri.num_vertices == 8);
    CHECK(tri.num_edges() == 24);
    CHECK(tri.num_tets() == 16);
    CHECK(tri.closed);
    for (const auto& tets : tri.tets_of_edge) CHECK(tets.size() == 4);

    // no edge joins antipodal vertices (same letter pair)
    for (int p = 0; p < 8; p += 2) CHECK_THROWS_AS(tri.edge_index(p, p + 1), IndexOutOfRange);

    for (int t = 0; t < tri.num_tets(); ++t) {
        const auto e = tet_edge_indices(tri, t);
        std::set<int> uniq(e.begin(), e.end());
        CHECK(uniq.size() == 6);
        for (int idx : e) CHECK(idx < 24);
    }
}

TEST_CASE("edge count identity") {
    for (auto name : {BuiltinMesh::SingleTet, BuiltinMesh::Pentachoron, BuiltinMesh::SixteenCell}) {
        const Triangulation tri = make_builtin(name);
        std::size_t incidences = 0;
        for (const auto& tets : tri.tets_of_edge) incidences += tets.size();
        CHECK(incidences == 6u * tri.num_tets());
    }
}

TEST_CASE("canonical edge order is stable") {
    const Triangulation a = make_builtin(BuiltinMesh::SixteenCell);
    const Triangulation b = build_triangulation(a.num_vertices, a.tetrahedra);
    CHECK(a.edges == b.edges);

    auto shuffled = a.tetrahedra;
    std::rotate(shuffled.begin(), shuffled.begin() + 7, shuffled.end());
    const Triangulation c = build_triangulation(a.num_vertices, shuffled);
    CHECK(a.edges == c.edges);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(build_triangulation(4, {}), EmptyComplex);
    CHECK_THROWS_AS(build_triangulation(4, {{0, 1, 1, 2}}), DuplicateVertexInTet);
    CHECK_THROWS_AS(build_triangulation(4, {{0, 1, 2, 4}}), VertexIndexOutOfRange);
    CHECK_THROWS_AS(build_triangulation(4, {{0, 1, 2, -1}}), VertexIndexOutOfRange);
    const Triangulation tri = make_builtin(BuiltinMesh::SingleTet);
    CHECK_THROWS_AS(tet_edge_indices(tri, 1), IndexOutOfRange);
    CHECK_THROWS_AS(builtin_from_name("dodecahedron"), UnknownBuiltin);
    CHECK(builtin_from_name("sixteen_cell") == BuiltinMesh::SixteenCell);
    CHECK(to_string(BuiltinMesh::Pentachoron) == "pentachoron");
}

TEST_CASE("faces and incidence counts") {
    const Triangulation tri = make_builtin(BuiltinMesh::SixteenCell);
    CHECK(tri.faces.size() == 32);
    for (int n : tri.face_tet_count) CHECK(n == 2);
    const Triangulation single = make_builtin(BuiltinMesh::SingleTet);
    CHECK(single.faces.size() == 4);
    for (int n : single.face_tet_count) CHECK(n == 1);
}
