#include "plflow/tet_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "plflow/errors.hpp"
#include "plflow/space_form.hpp"

namespace plflow {

namespace {

constexpr double kPi = std::numbers::pi;

// Local edge index of the vertex pair {a, b}, a != b, in (01,02,03,12,13,23).
constexpr int kPairIndex[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};

int pair_index(int a, int b) { return kPairIndex[a][b]; }

double triangle_slack(double K, double a, double b, double c) {
    double s = std::min({a + b - c, b + c - a, c + a - b});
    if (K > 0.0) {
        const double limit = kPi / std::sqrt(K);
        s = std::min({s, limit - a, limit - b, limit - c, 2.0 * limit - (a + b + c)});
    }
    return s;
}

double spherical_slack(double a, double b, double c) {
    return std::min({a + b - c, b + c - a, c + a - b, 2.0 * kPi - (a + b + c)});
}

struct TetAnalysis {
    bool faces_ok = false;
    double face_slack = -std::numeric_limits<double>::infinity();
    bool links_ok = false;
    double link_margin = -std::numeric_limits<double>::infinity();
    TetAngles beta{};
    double endpoint_delta = 0.0;
};

// Face angles and vertex links of one tetrahedron; never throws.
TetAnalysis analyze_tet(double K, const TetLengths& l) {
    TetAnalysis out;

    out.face_slack = std::numeric_limits<double>::infinity();
    constexpr int kFaces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (const auto& f : kFaces) {
        const double a = l[pair_index(f[0], f[1])];
        const double b = l[pair_index(f[0], f[2])];
        const double c = l[pair_index(f[1], f[2])];
        for (double s : {a, b, c})
            if (!std::isfinite(s) || !(s > 0.0)) return out;
        out.face_slack = std::min(out.face_slack, triangle_slack(K, a, b, c));
    }
    out.faces_ok = out.face_slack > 0.0;
    if (!out.faces_ok) return out;

    // gamma[p][q]: face angle at vertex p between the edges to the two other
    // vertices != q, i.e. the side of p's link triangle joining them is NOT
    // indexed here -- gamma[p][q] is the link side opposite to direction q.
    double gamma[4][4];
    for (int p = 0; p < 4; ++p) {
        int others[3], k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != p) others[k++] = v;
        for (int j = 0; j < 3; ++j) {
            const int q = others[j];
            const int r = others[(j + 1) % 3];
            const int s = others[(j + 2) % 3];
            gamma[p][q] =
                face_angle(K, l[pair_index(r, s)], l[pair_index(p, r)], l[pair_index(p, s)]);
        }
    }

    out.link_margin = std::numeric_limits<double>::infinity();
    for (int p = 0; p < 4; ++p) {
        int others[3], k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != p) others[k++] = v;
        out.link_margin = std::min(out.link_margin,
                                   spherical_slack(gamma[p][others[0]], gamma[p][others[1]],
                                                   gamma[p][others[2]]));
    }
    out.links_ok = out.link_margin > 0.0;
    if (!out.links_ok) return out;

    // Dihedral along pq = angle of p's link triangle at the direction of q;
    // the link sides adjacent to q are gamma[p][r], gamma[p][s].
    double first[6];
    bool seen[6] = {false, false, false, false, false, false};
    for (int p = 0; p < 4; ++p) {
        int others[3], k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != p) others[k++] = v;
        for (int j = 0; j < 3; ++j) {
            const int q = others[j];
            const int r = others[(j + 1) % 3];
            const int s = others[(j + 2) % 3];
            const double angle = face_angle(1.0, gamma[p][q], gamma[p][r], gamma[p][s]);
            const int e = pair_index(p, q);
            if (!seen[e]) {
                first[e] = angle;
                seen[e] = true;
            } else {
                out.beta[e] = 0.5 * (first[e] + angle);
                out.endpoint_delta = std::max(out.endpoint_delta, std::abs(first[e] - angle));
            }
        }
    }
    return out;
}

}  // namespace

CayleyMenger cm_volume(const TetLengths& lens) {
    Eigen::Matrix<double, 5, 5> A;
    const double q01 = lens[0] * lens[0], q02 = lens[1] * lens[1], q03 = lens[2] * lens[2];
    const double q12 = lens[3] * lens[3], q13 = lens[4] * lens[4], q23 = lens[5] * lens[5];
    A << 0, 1, 1, 1, 1,
         1, 0, q01, q02, q03,
         1, q01, 0, q12, q13,
         1, q02, q12, 0, q23,
         1, q03, q13, q23, 0;
    const double det288 = A.determinant() / 288.0;
    return {det288 > 0.0 ? std::sqrt(det288) : 0.0, det288};
}

TetCheck tet_check(double K, const TetLengths& lens) {
    const TetAnalysis a = analyze_tet(K, lens);
    if (!a.faces_ok) return {false, a.face_slack};
    if (K == 0.0) {
        const double det288 = cm_volume(lens).det288;
        return {det288 > 0.0, det288};
    }
    return {a.links_ok, a.link_margin};
}

bool tet_nondegenerate(double K, const TetLengths& lens) { return tet_check(K, lens).ok; }

TetDihedrals tet_dihedrals(double K, const TetLengths& lens) {
    const TetAnalysis a = analyze_tet(K, lens);
    if (!a.faces_ok)
        throw DegenerateTet("tet_dihedrals: a face violates the triangle inequality");
    if (!a.links_ok)
        throw DegenerateTet("tet_dihedrals: a vertex link is not a valid spherical triangle");
    if (K == 0.0 && !(cm_volume(lens).det288 > 0.0))
        throw DegenerateTet("tet_dihedrals: Cayley-Menger determinant is not positive");
    return {a.beta, a.endpoint_delta, a.link_margin};
}

TetAngles dihedral_angles(double K, const TetLengths& lens) {
    return tet_dihedrals(K, lens).beta;
}

TetLengths tet_lengths(const Triangulation& tri, const PLMetric& l, int tet_index) {
    if (l.size() != tri.num_edges())
        throw DimensionMismatch("tet_lengths: metric has " + std::to_string(l.size()) +
                                " entries, triangulation has " +
                                std::to_string(tri.num_edges()) + " edges");
    const auto e = tet_edge_indices(tri, tet_index);
    TetLengths out;
    for (int i = 0; i < 6; ++i) out[i] = l[e[i]];
    return out;
}

MetricCheck metric_nondegenerate(const Triangulation& tri, const PLMetric& l, double K) {
    MetricCheck out{true, -1, std::numeric_limits<double>::infinity()};
    for (int t = 0; t < tri.num_tets(); ++t) {
        const TetCheck c = tet_check(K, tet_lengths(tri, l, t));
        out.min_margin = std::min(out.min_margin, c.margin);
        if (!c.ok && out.first_bad_tet < 0) {
            out.ok = false;
            out.first_bad_tet = t;
        }
    }
    return out;
}

}  // namespace plflow
