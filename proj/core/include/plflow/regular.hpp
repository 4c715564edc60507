#pragma once

#include <array>
#include <utility>

#include <Eigen/Dense>

namespace plflow {

// Closed forms for the dihedral-angle Jacobian of a regular tetrahedron of
// edge length l0 in the model space of curvature K.  regular_matrix builds
// the 6x6 matrix (diagonal x, opposite-edge entries z, the rest y) whose
// eigenvalues are x-z, x+z-2y, x+z+4y with multiplicities 3, 2, 1.  These
// serve as the independent oracle for the finite-difference Laplacian.

double regular_cos_beta(double K, double l0);          // C_K(l0) / (1 + 2 C_K(l0))
std::array<double, 3> regular_xyz(double K, double l0);

Eigen::Matrix<double, 6, 6> regular_matrix(double x, double y, double z);

struct RegularLaplacian {
    double K, l0;
    double x, y, z;
    double cos_beta;
    std::array<std::pair<double, int>, 3> eigs;  // (value, multiplicity)
    double x_minus_z;  // the eigenvalue of multiplicity 3
    double x_minus_y;  // reported alongside; not an eigenvalue
};

RegularLaplacian regular_laplacian(double K, double l0);

enum class RegularClass { IndefiniteNonsingular, Singular };

struct RegularReport {
    RegularClass cls;
    RegularLaplacian lap;
    Eigen::Matrix<double, 6, 1> spectrum;  // numeric, ascending
};

RegularReport regular_classify(double K, double l0);

}  // namespace plflow
