#include "plflow/space_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plflow/errors.hpp"

namespace plflow {

double sk(double K, double t) {
    if (K > 0.0) {
        const double s = std::sqrt(K);
        return std::sin(s * t) / s;
    }
    if (K < 0.0) {
        const double s = std::sqrt(-K);
        return std::sinh(s * t) / s;
    }
    return t;
}

double ck(double K, double t) {
    if (K > 0.0) return std::cos(std::sqrt(K) * t);
    if (K < 0.0) return std::cosh(std::sqrt(-K) * t);
    return 1.0;
}

double fk(double K, double r) {
    if (K != 0.0) return (1.0 - ck(K, r)) / K;
    return 0.5 * r * r;
}

bool triangle_valid(double K, double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) return false;
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) return false;
    if (!(a + b > c && b + c > a && c + a > b)) return false;
    if (K > 0.0) {
        const double limit = std::numbers::pi / std::sqrt(K);
        if (!(a < limit && b < limit && c < limit)) return false;
        if (!(a + b + c < 2.0 * limit)) return false;
    }
    return true;
}

double face_angle(double K, double opp, double b, double c) {
    if (!triangle_valid(K, opp, b, c))
        throw InvalidTriangle("face_angle: sides do not form a valid triangle in M_K");
    double cos_angle;
    if (K == 0.0) {
        cos_angle = (b * b + c * c - opp * opp) / (2.0 * b * c);
    } else {
        // f_K(opp) = f_K(b - c) + S_K(b) S_K(c) (1 - cos angle)
        cos_angle = 1.0 - (fk(K, opp) - fk(K, b - c)) / (sk(K, b) * sk(K, c));
    }
    cos_angle = std::clamp(cos_angle, -1.0, 1.0);
    return std::acos(cos_angle);
}

}  // namespace plflow
