#include "plflow/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "plflow/errors.hpp"
#include "plflow/parallel.hpp"
#include "plflow/tet_geometry.hpp"

namespace plflow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_dims(const Triangulation& tri, const PLMetric& l, const char* where) {
    if (l.size() != tri.num_edges())
        throw DimensionMismatch(std::string(where) + ": metric size " +
                                std::to_string(l.size()) + " != edge count " +
                                std::to_string(tri.num_edges()));
}

}  // namespace

MetricAnalysis ricci_with_margin(const Triangulation& tri, const PLMetric& l, double K) {
    check_dims(tri, l, "ricci");
    Eigen::VectorXd R = Eigen::VectorXd::Constant(tri.num_edges(), kTwoPi);
    double margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < tri.num_tets(); ++t) {
        const TetLengths lens = tet_lengths(tri, l, t);
        TetDihedrals d;
        try {
            d = tet_dihedrals(K, lens);
        } catch (const DegenerateTet& e) {
            throw DegenerateMetric(t, "degenerate metric on tet " + std::to_string(t) +
                                          ": " + e.what());
        }
        margin = std::min(margin, K == 0.0 ? cm_volume(lens).det288 : d.min_link_margin);
        const auto edges = tet_edge_indices(tri, t);
        for (int e = 0; e < 6; ++e) R[edges[e]] -= d.beta[e];
    }
    return {std::move(R), margin};
}

Eigen::VectorXd ricci(const Triangulation& tri, const PLMetric& l, double K) {
    return ricci_with_margin(tri, l, K).R;
}

CurvatureState functionals(const Eigen::VectorXd& R, const PLMetric& l) {
    if (R.size() != l.values().size())
        throw DimensionMismatch("functionals: R size " + std::to_string(R.size()) +
                                " != metric size " + std::to_string(l.size()));
    CurvatureState st;
    st.R = R;
    st.S = R.dot(l.values());
    st.C = R.squaredNorm();
    st.lam = st.S / l.values().squaredNorm();
    const Eigen::VectorXd dev = R - st.lam * l.values();
    st.einstein_residual = dev.norm() / std::max(R.norm(), 1e-30);
    st.einstein_residual_abs = dev.lpNorm<Eigen::Infinity>();
    st.ricci_flat_residual = R.lpNorm<Eigen::Infinity>();
    return st;
}

Laplacian jacobian(const Triangulation& tri, const PLMetric& l, double K, double h_rel) {
    check_dims(tri, l, "jacobian");
    const MetricCheck base = metric_nondegenerate(tri, l, K);
    if (!base.ok)
        throw DegenerateMetric(base.first_bad_tet,
                               "jacobian: base metric degenerate on tet " +
                                   std::to_string(base.first_bad_tet));
    const int m = tri.num_edges();
    Eigen::MatrixXd L(m, m);

    parallel_for(m, [&](int j) {
        double h = h_rel * std::max(1.0, l[j]);
        for (int attempt = 0;; ++attempt) {
            if (l[j] - h > 0.0) {
                Eigen::VectorXd plus = l.values(), minus = l.values();
                plus[j] += h;
                minus[j] -= h;
                try {
                    const Eigen::VectorXd Rp = ricci(tri, PLMetric(plus), K);
                    const Eigen::VectorXd Rm = ricci(tri, PLMetric(minus), K);
                    L.col(j) = (Rp - Rm) / (2.0 * h);
                    return;
                } catch (const DegenerateMetric&) {
                    // fall through to halving
                }
            }
            if (attempt >= 8)
                throw StepTooLarge("jacobian: perturbation of edge " + std::to_string(j) +
                                   " leaves the nondegenerate set after 8 halvings");
            h *= 0.5;
        }
    });

    Laplacian lap;
    lap.L = std::move(L);
    lap.asymmetry = (lap.L - lap.L.transpose()).cwiseAbs().maxCoeff();
    lap.euler_residual = (lap.L * l.values()).lpNorm<Eigen::Infinity>();
    lap.left_euler_residual =
        (l.values().transpose() * lap.L).lpNorm<Eigen::Infinity>();
    lap.h_rel = h_rel;
    return lap;
}

Eigen::VectorXd grad_scaled_total_curvature(const Eigen::VectorXd& R, const PLMetric& l,
                                            double r) {
    if (R.size() != l.values().size())
        throw DimensionMismatch("grad_scaled_total_curvature: dimension mismatch");
    const double norm_l = l.values().norm();
    const double S = R.dot(l.values());
    return (R - (r * S / (norm_l * norm_l)) * l.values()) / std::pow(norm_l, r);
}

Eigen::VectorXd grad_quadratic_energy(const Laplacian& lap, const Eigen::VectorXd& R) {
    if (R.size() != lap.L.rows())
        throw DimensionMismatch("grad_quadratic_energy: dimension mismatch");
    return 2.0 * lap.L.transpose() * R;
}

StabilityReport stability_check(const PLMetric& l, const Eigen::VectorXd& R,
                                const Laplacian& lap) {
    const CurvatureState st = functionals(R, l);
    if (!(st.einstein_residual < 1e-6))
        throw NotEinstein("stability_check: einstein_residual " +
                          std::to_string(st.einstein_residual) + " >= 1e-6");
    const int m = l.size();
    const Eigen::VectorXd& lv = l.values();
    const Eigen::MatrixXd projector =
        Eigen::MatrixXd::Identity(m, m) - (lv * lv.transpose()) / lv.squaredNorm();
    const Eigen::MatrixXd condition = st.lam * projector - lap.sym();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(condition);
    const Eigen::VectorXd eigs = es.eigenvalues();  // ascending
    const double max_eig = eigs[m - 1];
    const double sigma_max = eigs.cwiseAbs().maxCoeff();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esl(lap.sym());

    StabilityReport rep;
    rep.lambda_de = st.lam;
    rep.max_eig_condition = max_eig;
    rep.first_eig_L = esl.eigenvalues()[0];
    rep.satisfied = max_eig <= 1e-7 * sigma_max;
    rep.first_eig_exceeds_lambda = rep.first_eig_L > st.lam;
    return rep;
}

RankReport rank_check(const Laplacian& lap, const PLMetric& l, double tol) {
    const int m = static_cast<int>(lap.L.rows());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(lap.sym(), Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();  // descending
    const double threshold = tol * (sv.size() > 0 ? sv[0] : 0.0);

    RankReport rep;
    rep.size = m;
    rep.singular_values = sv;
    rep.rank = 0;
    for (int i = 0; i < m; ++i)
        if (sv[i] > threshold) ++rep.rank;
    rep.rank_is_m_minus_1 = (rep.rank == m - 1);

    const int kdim = m - rep.rank;
    rep.kernel = svd.matrixV().rightCols(kdim);
    if (kdim > 0 && l.size() == m) {
        const Eigen::VectorXd unit_l = l.values().normalized();
        rep.kernel_l_cosine = (rep.kernel.transpose() * unit_l).norm();
    } else {
        rep.kernel_l_cosine = 0.0;
    }
    rep.kernel_aligned_with_l = rep.rank_is_m_minus_1 && rep.kernel_l_cosine > 1.0 - 1e-6;
    return rep;
}

}  // namespace plflow
