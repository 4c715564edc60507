#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace plflow {

enum class BuiltinMesh { SixteenCell, Pentachoron, SingleTet };

// Combinatorial 3-dimensional triangulation: vertices are integers
// 0..num_vertices-1, tetrahedra are 4-tuples of distinct vertices.  The edge
// list is derived, stored as sorted pairs in lexicographic order; this fixes
// the canonical edge indexing used by metrics, curvature vectors and
// matrices.  Immutable after construction.
struct Triangulation {
    int num_vertices = 0;
    std::vector<std::array<int, 4>> tetrahedra;
    std::vector<std::array<int, 2>> edges;               // sorted pairs, lexicographic
    std::map<std::array<int, 2>, int> edge_of_pair;      // {min,max} -> edge index
    std::vector<std::vector<int>> tets_of_edge;          // incident tet indices per edge
    std::vector<std::array<int, 3>> faces;               // sorted triples, lexicographic
    std::vector<int> face_tet_count;                     // tets incident to each face
    bool closed = false;                                 // every face in exactly 2 tets

    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_tets() const { return static_cast<int>(tetrahedra.size()); }

    // Canonical index of edge {a, b}; throws IndexOutOfRange if absent.
    int edge_index(int a, int b) const;
};

Triangulation build_triangulation(int num_vertices,
                                  const std::vector<std::array<int, 4>>& tets);

Triangulation make_builtin(BuiltinMesh name);

BuiltinMesh builtin_from_name(const std::string& name);  // throws UnknownBuiltin
std::string to_string(BuiltinMesh name);

// Global edge indices of a tetrahedron in the fixed local order
// (ij, ik, il, jk, jl, kl) induced by the stored vertex order (i, j, k, l).
std::array<int, 6> tet_edge_indices(const Triangulation& tri, int tet_index);

}  // namespace plflow
