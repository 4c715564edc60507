#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "plflow/errors.hpp"
#include "plflow/space_form.hpp"

using namespace plflow;

namespace {
constexpr double kPi = std::numbers::pi;

// |K| log-uniform in [1e-3, 4] with random sign; keeps the closed form
// (1 - C_K)/K well away from the 0/0 regime.
double random_curvature(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> mag(std::log(1e-3), std::log(4.0));
    const double k = std::exp(mag(gen));
    return (gen() & 1) ? k : -k;
}
}  // namespace

TEST_CASE("euclidean branch is exact") {
    CHECK(sk(0.0, 0.7) == 0.7);
    CHECK(ck(0.0, 0.7) == 1.0);
    CHECK(fk(0.0, 0.7) == 0.5 * 0.7 * 0.7);
    CHECK(fk(0.0, 2.0) == 2.0);
}

TEST_CASE("spherical values at quarter period") {
    CHECK(std::abs(sk(1.0, kPi / 2) - 1.0) <= 1e-15);
    CHECK(std::abs(ck(1.0, kPi / 2)) <= 1e-15);
}

TEST_CASE("hyperbolic branch matches sinh/cosh") {
    CHECK(sk(-1.0, 0.7) == doctest::Approx(std::sinh(0.7)).epsilon(1e-15));
    CHECK(ck(-1.0, 0.7) == doctest::Approx(std::cosh(0.7)).epsilon(1e-15));
    CHECK(sk(-4.0, 0.7) == doctest::Approx(std::sinh(1.4) / 2.0).epsilon(1e-15));
}

TEST_CASE("fk equals twice the squared half-argument sine") {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> rad(0.01, 2.0);
    for (int i = 0; i < 5000; ++i) {
        const double K = random_curvature(gen);
        const double r = rad(gen);
        const double lhs = fk(K, r);
        const double rhs = 2.0 * sk(K, r / 2) * sk(K, r / 2);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
    // K = -1 spot check from the identity itself
    const double r = 1.3;
    CHECK(std::abs(fk(-1.0, r) - 2.0 * sk(-1.0, r / 2) * sk(-1.0, r / 2)) <= 1e-12);
}

TEST_CASE("generalized pythagorean identity") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> rad(0.0, 2.0);
    for (int i = 0; i < 5000; ++i) {
        const double K = random_curvature(gen);
        const double t = rad(gen);
        CHECK(std::abs(K * sk(K, t) * sk(K, t) + ck(K, t) * ck(K, t) - 1.0) <= 1e-12);
    }
}

TEST_CASE("fk agrees with quadrature of sk") {
    // Simpson rule on a fine grid; independent of the closed form.
    auto quad = [](double K, double r) {
        const int n = 2000;
        const double h = r / n;
        double acc = sk(K, 0.0) + sk(K, r);
        for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * sk(K, i * h);
        return acc * h / 3.0;
    };
    for (double K : {-2.0, -1.0, -0.25, 0.0, 0.25, 1.0, 2.0})
        for (double r : {0.3, 0.9, 1.7})
            CHECK(fk(K, r) == doctest::Approx(quad(K, r)).epsilon(1e-11));
}

TEST_CASE("continuity across K = 0") {
    for (double K : {1e-8, -1e-8}) {
        for (double t : {0.3, 1.0, 1.9}) {
            CHECK(std::abs(sk(K, t) - t) <= 1e-6);
            CHECK(std::abs(ck(K, t) - 1.0) <= 1e-6);
            CHECK(std::abs(fk(K, t) - 0.5 * t * t) <= 1e-6);
        }
    }
}

TEST_CASE("triangle validity") {
    CHECK(triangle_valid(0.0, 1.0, 1.0, 1.0));
    CHECK_FALSE(triangle_valid(0.0, 1.0, 1.0, 2.0));  // degenerate equality
    CHECK_FALSE(triangle_valid(0.0, 1.0, 1.0, 2.5));
    CHECK(triangle_valid(1.0, kPi / 2, kPi / 2, kPi / 2));  // octant triangle
    CHECK(triangle_valid(-1.0, 2.0, 2.0, 3.5));
    // spherical size limits
    CHECK_FALSE(triangle_valid(1.0, 3.2, 1.0, 3.0));          // side beyond pi
    CHECK_FALSE(triangle_valid(4.0, 1.5, 1.5, 1.5));          // side beyond pi/2
    CHECK_FALSE(triangle_valid(1.0, 2.5, 2.5, 2.0));          // perimeter beyond 2 pi
    CHECK_FALSE(triangle_valid(0.0, -1.0, 1.0, 1.0));
}

TEST_CASE("face angle closed cases") {
    CHECK(std::abs(face_angle(0.0, 1.0, 1.0, 1.0) - kPi / 3) <= 1e-15);
    CHECK(std::abs(face_angle(0.0, 5.0, 4.0, 3.0) - kPi / 2) <= 1e-15);
    CHECK(std::abs(face_angle(1.0, kPi / 2, kPi / 2, kPi / 2) - kPi / 2) <= 1e-14);
    CHECK_THROWS_AS(face_angle(0.0, 2.0, 1.0, 1.0), InvalidTriangle);
}

TEST_CASE("euclidean reduction to the law of cosines") {
    std::mt19937_64 gen(42);
    std::uniform_real_distribution<double> side(0.2, 2.0);
    std::uniform_real_distribution<double> ang(0.1, kPi - 0.1);
    for (int i = 0; i < 10000; ++i) {
        const double b = side(gen), c = side(gen), theta = ang(gen);
        const double opp = std::sqrt(b * b + c * c - 2.0 * b * c * std::cos(theta));
        const double got = face_angle(0.0, opp, b, c);
        const double ref = std::acos((b * b + c * c - opp * opp) / (2.0 * b * c));
        CHECK(std::abs(got - ref) <= 1e-12);
        CHECK(std::abs(got - theta) <= 1e-12);
    }
}

TEST_CASE("curved cosine law is consistent with the C_K form") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> side(0.2, 1.2);
    std::uniform_real_distribution<double> ang(0.2, kPi - 0.2);
    for (int i = 0; i < 5000; ++i) {
        const double K = random_curvature(gen);
        const double b = side(gen), c = side(gen), theta = ang(gen);
        // construct opp from the C_K cosine law, then recover theta
        const double cos_opp_arg =
            ck(K, b) * ck(K, c) + K * sk(K, b) * sk(K, c) * std::cos(theta);
        double opp;
        if (K > 0.0) {
            opp = std::acos(std::clamp(cos_opp_arg, -1.0, 1.0)) / std::sqrt(K);
        } else {
            opp = std::acosh(std::max(1.0, cos_opp_arg)) / std::sqrt(-K);
        }
        if (!triangle_valid(K, opp, b, c)) continue;
        CHECK(std::abs(face_angle(K, opp, b, c) - theta) <= 1e-9);
    }
}
