#pragma once

// Test-only oracles, independent of the library's computation paths:
//  - cofactor-expansion Cayley-Menger determinant (no LU),
//  - dihedral angles of a Euclidean tetrahedron from an explicit coordinate
//    embedding,
//  - dihedral angles of a spherical tetrahedron from a Gram-matrix
//    embedding on the sphere of curvature K > 0.

#include <array>
#include <cmath>
#include <optional>

#include <Eigen/Dense>

namespace oracles {

using TetLengths = std::array<double, 6>;  // (l01, l02, l03, l12, l13, l23)

inline int pair_index(int a, int b) {
    static constexpr int table[4][4] = {
        {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[a][b];
}

// det of the 5x5 bordered matrix of squared lengths by recursive cofactor
// expansion along the first row.
inline double det_recursive(const double* m, int n, int stride) {
    if (n == 1) return m[0];
    double det = 0.0;
    double minor[16];
    for (int col = 0; col < n; ++col) {
        int mi = 0;
        for (int r = 1; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (c != col) minor[mi++] = m[r * stride + c];
        const double cof = det_recursive(minor, n - 1, n - 1);
        det += ((col % 2 == 0) ? 1.0 : -1.0) * m[col] * cof;
    }
    return det;
}

inline double cayley_menger_det(const TetLengths& l) {
    const double q01 = l[0] * l[0], q02 = l[1] * l[1], q03 = l[2] * l[2];
    const double q12 = l[3] * l[3], q13 = l[4] * l[4], q23 = l[5] * l[5];
    const double m[25] = {
        0, 1, 1, 1, 1,
        1, 0, q01, q02, q03,
        1, q01, 0, q12, q13,
        1, q02, q12, 0, q23,
        1, q03, q13, q23, 0,
    };
    return det_recursive(m, 5, 5);
}

// Coordinates of a Euclidean tetrahedron with the given edge lengths;
// nullopt when the lengths are not realizable.
inline std::optional<std::array<Eigen::Vector3d, 4>> embed_euclidean(const TetLengths& l) {
    const double l01 = l[0], l02 = l[1], l03 = l[2], l12 = l[3], l13 = l[4], l23 = l[5];
    std::array<Eigen::Vector3d, 4> v;
    v[0] = {0, 0, 0};
    v[1] = {l01, 0, 0};
    const double x2 = (l01 * l01 + l02 * l02 - l12 * l12) / (2.0 * l01);
    const double y2sq = l02 * l02 - x2 * x2;
    if (!(y2sq > 0.0)) return std::nullopt;
    const double y2 = std::sqrt(y2sq);
    v[2] = {x2, y2, 0};
    const double x3 = (l01 * l01 + l03 * l03 - l13 * l13) / (2.0 * l01);
    const double y3 = (l02 * l02 + l03 * l03 - l23 * l23 - 2.0 * x2 * x3) / (2.0 * y2);
    const double z3sq = l03 * l03 - x3 * x3 - y3 * y3;
    if (!(z3sq > 0.0)) return std::nullopt;
    v[3] = {x3, y3, std::sqrt(z3sq)};
    return v;
}

inline double angle_between(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

// Interior dihedral angles of a Euclidean tetrahedron from coordinates.
inline std::optional<TetLengths> euclidean_dihedrals(const TetLengths& l) {
    const auto verts = embed_euclidean(l);
    if (!verts) return std::nullopt;
    TetLengths beta;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            int others[2], k = 0;
            for (int v = 0; v < 4; ++v)
                if (v != a && v != b) others[k++] = v;
            const Eigen::Vector3d u = ((*verts)[b] - (*verts)[a]).normalized();
            auto perp = [&](int c) {
                const Eigen::Vector3d w = (*verts)[c] - (*verts)[a];
                return (w - w.dot(u) * u).eval();
            };
            beta[pair_index(a, b)] = angle_between(perp(others[0]), perp(others[1]));
        }
    }
    return beta;
}

// Dihedral angles of a tetrahedron on the sphere of curvature K > 0, from
// the Gram matrix of its vertex unit vectors in R^4.
inline std::optional<TetLengths> spherical_dihedrals(double K, const TetLengths& l) {
    const double s = std::sqrt(K);
    Eigen::Matrix4d G;
    for (int a = 0; a < 4; ++a) {
        G(a, a) = 1.0;
        for (int b = a + 1; b < 4; ++b) {
            G(a, b) = G(b, a) = std::cos(s * l[pair_index(a, b)]);
        }
    }
    Eigen::LLT<Eigen::Matrix4d> llt(G);
    if (llt.info() != Eigen::Success) return std::nullopt;
    const Eigen::Matrix4d Lc = llt.matrixL();
    std::array<Eigen::Vector4d, 4> v;
    for (int a = 0; a < 4; ++a) v[a] = Lc.row(a);

    TetLengths beta;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            int others[2], k = 0;
            for (int c = 0; c < 4; ++c)
                if (c != a && c != b) others[k++] = c;
            // component of v[c] orthogonal to span(v[a], v[b])
            Eigen::Matrix<double, 4, 2> E;
            E.col(0) = v[a];
            E.col(1) = v[b];
            const Eigen::Matrix2d M = E.transpose() * E;
            auto perp = [&](int c) {
                const Eigen::Vector2d coef = M.ldlt().solve(E.transpose() * v[c]);
                return (v[c] - E * coef).eval();
            };
            const Eigen::Vector4d w0 = perp(others[0]);
            const Eigen::Vector4d w1 = perp(others[1]);
            const double cross_norm =
                std::sqrt(std::max(0.0, w0.squaredNorm() * w1.squaredNorm() -
                                            w0.dot(w1) * w0.dot(w1)));
            beta[pair_index(a, b)] = std::atan2(cross_norm, w0.dot(w1));
        }
    }
    return beta;
}

}  // namespace oracles
