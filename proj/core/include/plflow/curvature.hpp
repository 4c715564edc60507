#pragma once

#include <Eigen/Dense>

#include "plflow/metric.hpp"
#include "plflow/triangulation.hpp"

namespace plflow {

// Edge curvature vector: R_e = 2*pi - sum of dihedral angles at e over all
// incident tetrahedra.  Same definition for every background curvature K.
// Throws DegenerateMetric naming the first offending tetrahedron.
Eigen::VectorXd ricci(const Triangulation& tri, const PLMetric& l, double K);

struct MetricAnalysis {
    Eigen::VectorXd R;
    double min_margin;  // min tet margin (signed CM det for K=0, link slack otherwise)
};

// One-pass curvature plus degeneracy margin, used by the flow integrators.
MetricAnalysis ricci_with_margin(const Triangulation& tri, const PLMetric& l, double K);

struct CurvatureState {
    Eigen::VectorXd R;
    double S;                      // sum R_i l_i
    double C;                      // sum R_i^2
    double lam;                    // S / |l|^2
    double einstein_residual;      // |R - lam*l|_2 / max(|R|_2, eps)
    double einstein_residual_abs;  // |R - lam*l|_inf
    double ricci_flat_residual;    // |R|_inf
};

CurvatureState functionals(const Eigen::VectorXd& R, const PLMetric& l);

struct Laplacian {
    Eigen::MatrixXd L;           // raw central-difference Jacobian dR/dl
    double asymmetry;            // max |L - L^T| entry
    double euler_residual;       // |L l|_inf
    double left_euler_residual;  // |l^T L|_inf
    double h_rel;                // relative finite-difference step
    Eigen::MatrixXd sym() const { return 0.5 * (L + L.transpose()); }
};

// Jacobian dR/dl by central finite differences, column step
// h = h_rel * max(1, l_j), halved up to 8 times when a perturbed metric
// leaves the nondegenerate set (then StepTooLarge).  Columns are assembled
// in parallel.
Laplacian jacobian(const Triangulation& tri, const PLMetric& l, double K,
                   double h_rel = 1e-5);

// Gradient of the scaled total curvature S_r = S / |l|^r:
// (R - r*S/|l|^2 * l) / |l|^r.
Eigen::VectorXd grad_scaled_total_curvature(const Eigen::VectorXd& R, const PLMetric& l,
                                            double r);

// Gradient of the quadratic energy C = |R|^2, namely 2 L^T R (raw L).
Eigen::VectorXd grad_quadratic_energy(const Laplacian& lap, const Eigen::VectorXd& R);

struct StabilityReport {
    double lambda_de;
    double max_eig_condition;       // largest eigenvalue of lam*(I - ll^T/|l|^2) - L_sym
    double first_eig_L;             // smallest eigenvalue of L_sym
    bool satisfied;                 // max_eig_condition <= 1e-7 * spectral range
    bool first_eig_exceeds_lambda;  // sufficient condition lambda_1(L) > lambda
};

// Attractor condition of the normalized second-order flow at an
// approximately Einstein metric (einstein_residual < 1e-6, else NotEinstein).
StabilityReport stability_check(const PLMetric& l, const Eigen::VectorXd& R,
                                const Laplacian& lap);

struct RankReport {
    int rank;
    int size;
    Eigen::VectorXd singular_values;  // of L_sym, descending
    bool rank_is_m_minus_1;
    double kernel_l_cosine;      // |cos angle| between l and its kernel projection
    bool kernel_aligned_with_l;  // rank = m-1 and cosine > 1 - 1e-6
    Eigen::MatrixXd kernel;      // orthonormal kernel basis (columns)
};

// Numerical rank of L_sym with singular values thresholded at tol * sigma_max.
RankReport rank_check(const Laplacian& lap, const PLMetric& l, double tol = 1e-7);

}  // namespace plflow
