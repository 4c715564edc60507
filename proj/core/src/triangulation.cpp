#include "plflow/triangulation.hpp"

#include <algorithm>
#include <set>

#include "plflow/errors.hpp"

namespace plflow {

namespace {

std::array<int, 2> sorted_pair(int a, int b) {
    return a < b ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a};
}

// Local vertex-pair order (01, 02, 03, 12, 13, 23) of a tetrahedron.
constexpr int kLocalPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

}  // namespace

int Triangulation::edge_index(int a, int b) const {
    auto it = edge_of_pair.find(sorted_pair(a, b));
    if (it == edge_of_pair.end())
        throw IndexOutOfRange("edge_index: pair {" + std::to_string(a) + "," +
                              std::to_string(b) + "} is not an edge");
    return it->second;
}

Triangulation build_triangulation(int num_vertices,
                                  const std::vector<std::array<int, 4>>& tets) {
    if (tets.empty()) throw EmptyComplex("build_triangulation: no tetrahedra given");
    for (std::size_t t = 0; t < tets.size(); ++t) {
        const auto& tet = tets[t];
        for (int v : tet)
            if (v < 0 || v >= num_vertices)
                throw VertexIndexOutOfRange("build_triangulation: tet " + std::to_string(t) +
                                            " references vertex " + std::to_string(v));
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (tet[a] == tet[b])
                    throw DuplicateVertexInTet("build_triangulation: tet " +
                                               std::to_string(t) + " repeats vertex " +
                                               std::to_string(tet[a]));
    }

    Triangulation tri;
    tri.num_vertices = num_vertices;
    tri.tetrahedra = tets;

    std::set<std::array<int, 2>> edge_set;
    for (const auto& tet : tets)
        for (const auto& p : kLocalPairs)
            edge_set.insert(sorted_pair(tet[p[0]], tet[p[1]]));
    tri.edges.assign(edge_set.begin(), edge_set.end());  // std::set is already lexicographic
    for (int e = 0; e < tri.num_edges(); ++e) tri.edge_of_pair[tri.edges[e]] = e;

    tri.tets_of_edge.assign(tri.edges.size(), {});
    for (int t = 0; t < tri.num_tets(); ++t)
        for (int e : tet_edge_indices(tri, t)) tri.tets_of_edge[e].push_back(t);

    std::map<std::array<int, 3>, int> face_count;
    for (const auto& tet : tets) {
        for (int skip = 0; skip < 4; ++skip) {
            std::array<int, 3> f;
            int k = 0;
            for (int v = 0; v < 4; ++v)
                if (v != skip) f[k++] = tet[v];
            std::sort(f.begin(), f.end());
            ++face_count[f];
        }
    }
    tri.closed = true;
    for (const auto& [f, n] : face_count) {
        tri.faces.push_back(f);
        tri.face_tet_count.push_back(n);
        if (n != 2) tri.closed = false;
    }
    return tri;
}

std::array<int, 6> tet_edge_indices(const Triangulation& tri, int tet_index) {
    if (tet_index < 0 || tet_index >= tri.num_tets())
        throw IndexOutOfRange("tet_edge_indices: tet " + std::to_string(tet_index));
    const auto& tet = tri.tetrahedra[tet_index];
    std::array<int, 6> out;
    for (int e = 0; e < 6; ++e)
        out[e] = tri.edge_index(tet[kLocalPairs[e][0]], tet[kLocalPairs[e][1]]);
    return out;
}

Triangulation make_builtin(BuiltinMesh name) {
    switch (name) {
        case BuiltinMesh::SingleTet:
            return build_triangulation(4, {{0, 1, 2, 3}});
        case BuiltinMesh::Pentachoron: {
            // Boundary of the 4-simplex: all five 4-subsets of {0,...,4}.
            std::vector<std::array<int, 4>> tets;
            for (int skip = 4; skip >= 0; --skip) {
                std::array<int, 4> tet;
                int k = 0;
                for (int v = 0; v < 5; ++v)
                    if (v != skip) tet[k++] = v;
                tets.push_back(tet);
            }
            return build_triangulation(5, tets);
        }
        case BuiltinMesh::SixteenCell: {
            // Vertices A1,A2,B1,B2,C1,C2,D1,D2 -> 0..7 (antipodal pairs share a
            // letter); tetrahedra are all A_i B_j C_k D_l.
            std::vector<std::array<int, 4>> tets;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k)
                        for (int l = 0; l < 2; ++l)
                            tets.push_back({i, 2 + j, 4 + k, 6 + l});
            return build_triangulation(8, tets);
        }
    }
    throw UnknownBuiltin("make_builtin: unrecognized builtin mesh");
}

BuiltinMesh builtin_from_name(const std::string& name) {
    if (name == "sixteen_cell") return BuiltinMesh::SixteenCell;
    if (name == "pentachoron") return BuiltinMesh::Pentachoron;
    if (name == "single_tet") return BuiltinMesh::SingleTet;
    throw UnknownBuiltin("unknown builtin mesh '" + name + "'");
}

std::string to_string(BuiltinMesh name) {
    switch (name) {
        case BuiltinMesh::SixteenCell: return "sixteen_cell";
        case BuiltinMesh::Pentachoron: return "pentachoron";
        case BuiltinMesh::SingleTet: return "single_tet";
    }
    return "unknown";
}

}  // namespace plflow
