#include "plflow/regular.hpp"

#include <cmath>
#include <numbers>

#include "plflow/errors.hpp"
#include "plflow/space_form.hpp"

namespace plflow {

namespace {

// A regular tetrahedron of edge l0 exists in M_K iff l0 > 0, l0 fits the
// sphere when K > 0, and 1 + 3 C_K(l0) > 0.
void require_in_range(double K, double l0) {
    if (!(l0 > 0.0) || !std::isfinite(l0) || !std::isfinite(K))
        throw OutOfModelRange("regular tetrahedron: l0 must be positive and finite");
    if (K > 0.0 && !(l0 < std::numbers::pi / std::sqrt(K)))
        throw OutOfModelRange("regular tetrahedron: l0 exceeds the spherical diameter");
    if (!(1.0 + 3.0 * ck(K, l0) > 0.0))
        throw OutOfModelRange("regular tetrahedron: 1 + 3 C_K(l0) <= 0");
}

}  // namespace

double regular_cos_beta(double K, double l0) {
    require_in_range(K, l0);
    if (K == 0.0) return 1.0 / 3.0;
    const double c = ck(K, l0);
    return c / (1.0 + 2.0 * c);
}

std::array<double, 3> regular_xyz(double K, double l0) {
    require_in_range(K, l0);
    const double c = ck(K, l0);
    const double ch = ck(K, 0.5 * l0);
    const double sh = sk(K, 0.5 * l0);
    const double root = std::sqrt(1.0 + 3.0 * c);
    const double sqrt2 = std::numbers::sqrt2;
    const double x = sqrt2 * c * c / (sh * root * (1.0 + 2.0 * c));
    const double y = -sqrt2 * c * ch * ch / (sh * (1.0 + 2.0 * c) * root);
    const double z = sqrt2 * ch * ch / (sh * root);
    return {x, y, z};
}

Eigen::Matrix<double, 6, 6> regular_matrix(double x, double y, double z) {
    Eigen::Matrix<double, 6, 6> M = Eigen::Matrix<double, 6, 6>::Constant(y);
    for (int i = 0; i < 6; ++i) {
        M(i, i) = x;
        M(i, 5 - i) = z;  // opposite-edge pairs (0,5), (1,4), (2,3)
    }
    return M;
}

RegularLaplacian regular_laplacian(double K, double l0) {
    const auto [x, y, z] = regular_xyz(K, l0);
    RegularLaplacian lap;
    lap.K = K;
    lap.l0 = l0;
    lap.x = x;
    lap.y = y;
    lap.z = z;
    lap.cos_beta = regular_cos_beta(K, l0);
    lap.eigs = {{{x - z, 3}, {x + z - 2.0 * y, 2}, {x + z + 4.0 * y, 1}}};
    lap.x_minus_z = x - z;
    lap.x_minus_y = x - y;
    return lap;
}

RegularReport regular_classify(double K, double l0) {
    RegularReport rep;
    rep.lap = regular_laplacian(K, l0);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> es(
        regular_matrix(rep.lap.x, rep.lap.y, rep.lap.z));
    rep.spectrum = es.eigenvalues();
    const double max_abs = rep.spectrum.cwiseAbs().maxCoeff();
    const double min_abs = rep.spectrum.cwiseAbs().minCoeff();
    rep.cls = (min_abs <= 1e-10 * max_abs) ? RegularClass::Singular
                                           : RegularClass::IndefiniteNonsingular;
    return rep;
}

}  // namespace plflow
