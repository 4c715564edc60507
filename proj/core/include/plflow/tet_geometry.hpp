#pragma once

#include <array>

#include "plflow/metric.hpp"
#include "plflow/triangulation.hpp"

namespace plflow {

// Six lengths / six dihedral angles of one tetrahedron in the local edge
// order (ij, ik, il, jk, jl, kl).
using TetLengths = std::array<double, 6>;
using TetAngles = std::array<double, 6>;

struct CayleyMenger {
    double volume;  // sqrt(det/288) when the determinant is nonnegative, else 0
    double det288;  // signed det/288; negative means the lengths are not realizable
};

// Euclidean tetrahedron volume from edge lengths (the bordered determinant
// of squared lengths).  Degeneracy is reported through det288, not thrown.
CayleyMenger cm_volume(const TetLengths& lens);

struct TetCheck {
    bool ok;
    // K = 0: signed det/288.  K != 0: minimal strict slack of the four vertex
    // links.  When a face already fails, the (negative) face slack instead.
    double margin;
};

TetCheck tet_check(double K, const TetLengths& lens);
bool tet_nondegenerate(double K, const TetLengths& lens);

struct TetDihedrals {
    TetAngles beta;          // each in (0, pi)
    double endpoint_delta;   // max disagreement of the two per-edge link computations
    double min_link_margin;  // strict spherical-triangle slack over the four links
};

// Dihedral angles via the vertex links: the three face angles at a vertex
// form a spherical triangle whose angles are the dihedral angles along the
// edges through that vertex.  Every edge is evaluated from both endpoints
// and the two values averaged.  Works uniformly in K.
TetDihedrals tet_dihedrals(double K, const TetLengths& lens);
TetAngles dihedral_angles(double K, const TetLengths& lens);

// Edge lengths of one tetrahedron gathered from a metric in canonical order.
TetLengths tet_lengths(const Triangulation& tri, const PLMetric& l, int tet_index);

struct MetricCheck {
    bool ok;
    int first_bad_tet;  // -1 when ok
    double min_margin;  // min of tet_check margins over all tetrahedra
};

// Membership test for the space of nondegenerate PL-metrics on (tri, K).
MetricCheck metric_nondegenerate(const Triangulation& tri, const PLMetric& l, double K);

}  // namespace plflow
