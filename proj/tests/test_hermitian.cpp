#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "meo/hermitian.hpp"
#include "meo/oracles.hpp"

using namespace meo;

TEST_CASE("spectral decomposition basics") {
    SpectralDecomposition id = spectral_decompose(Hermitian::Identity(2, 2));
    CHECK(id.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(id.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));

    Hermitian d = Eigen::Vector2d(0.3, 0.7).cast<std::complex<double>>().asDiagonal();
    SpectralDecomposition s = spectral_decompose(d);
    CHECK(s.eigenvalues(0) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(s.eigenvalues(1) == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("spectral decomposition reconstructs random 4x4") {
    oracles::Sampler sampler(11);
    Hermitian a = sampler.random_hermitian(4);
    SpectralDecomposition s = spectral_decompose(a);
    Hermitian back = s.eigenvectors *
                     s.eigenvalues.cast<std::complex<double>>().asDiagonal() *
                     s.eigenvectors.adjoint();
    CHECK((a - back).norm() <= 1e-10);
}

TEST_CASE("first divided difference of log") {
    CHECK(divided_difference_log(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(divided_difference_log(2.0, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
    const double e = std::exp(1.0);
    CHECK(divided_difference_log(e, 1.0) ==
          doctest::Approx(0.58197670686932642439).epsilon(1e-14));
}

TEST_CASE("first divided difference of powers") {
    // r = -1 reduces to -1/(xy)
    CHECK(divided_difference_power(-1.0, 2.0, 4.0) ==
          doctest::Approx(-0.125).epsilon(1e-14));
    CHECK(divided_difference_power(2.0, 3.0, 3.0) == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(divided_difference_power(0.4, 1.5, 0.2) ==
          doctest::Approx(0.5005949704953231733).epsilon(1e-13));
}

TEST_CASE("divided differences are exactly symmetric") {
    oracles::Sampler sampler(7);
    for (int i = 0; i < 50; ++i) {
        const double x = 0.05 + 4.0 * sampler.uniform();
        const double y = 0.05 + 4.0 * sampler.uniform();
        CHECK(divided_difference_log(x, y) == divided_difference_log(y, x));
        for (double r : {-1.5, -0.5, 0.3, 2.0})
            CHECK(divided_difference_power(r, x, y) == divided_difference_power(r, y, x));
    }
}

TEST_CASE("divided differences are continuous across the branch threshold") {
    for (double x : {0.3, 1.0, 5.0}) {
        for (double side : {1.0, -1.0}) {
            const double y = x * (1.0 + side * 2.0 * kDividedDiffGap);
            CHECK(divided_difference_log(x, y) ==
                  doctest::Approx(1.0 / x).epsilon(1e-6));
            for (double r : {-0.5, 0.7, 2.0})
                CHECK(divided_difference_power(r, x, y) ==
                      doctest::Approx(r * std::pow(x, r - 1.0)).epsilon(1e-6));
        }
    }
}

TEST_CASE("matrix functions") {
    CHECK(matrix_log(Hermitian::Identity(3, 3)).norm() <= 1e-14);

    Hermitian d = Eigen::Vector2d(4.0, 9.0).cast<std::complex<double>>().asDiagonal();
    Hermitian root = matrix_power(d, 0.5);
    CHECK(std::abs(root(0, 0) - 2.0) <= 1e-13);
    CHECK(std::abs(root(1, 1) - 3.0) <= 1e-13);

    oracles::Sampler sampler(23);
    Hermitian a = sampler.random_positive_definite(3);
    CHECK((matrix_exp(matrix_log(a)) - a).norm() <= 1e-9);
}

TEST_CASE("interval projection fixed point and clipping") {
    OperatorInterval iv(0.5, 2.0);
    Hermitian inside = Eigen::Vector2d(0.8, 1.9).cast<std::complex<double>>().asDiagonal();
    CHECK((project_to_interval(inside, iv) - inside).norm() <= 1e-12);

    Hermitian outside = Eigen::Vector2d(0.1, 5.0).cast<std::complex<double>>().asDiagonal();
    Hermitian clipped = project_to_interval(outside, iv);
    CHECK(std::abs(clipped(0, 0) - 0.5) <= 1e-13);
    CHECK(std::abs(clipped(1, 1) - 2.0) <= 1e-13);
}

TEST_CASE("interval projection is idempotent and nearest in Frobenius norm") {
    OperatorInterval iv(0.4, 1.6);
    oracles::Sampler sampler(31);
    Hermitian a = 2.0 * sampler.random_hermitian(3);
    Hermitian proj = project_to_interval(a, iv);
    CHECK((project_to_interval(proj, iv) - proj).norm() <= 1e-12);

    // Brute force: clip each eigenvalue to any point of a grid over the
    // interval and verify no such matrix is closer than the projection.
    SpectralDecomposition s = spectral_decompose(a);
    const double best = (a - proj).norm();
    const int grid = 9;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            for (int k = 0; k < grid; ++k) {
                Eigen::Vector3d vals(
                    iv.lo + (iv.hi - iv.lo) * i / (grid - 1),
                    iv.lo + (iv.hi - iv.lo) * j / (grid - 1),
                    iv.lo + (iv.hi - iv.lo) * k / (grid - 1));
                Hermitian cand = s.eigenvectors *
                                 vals.cast<std::complex<double>>().asDiagonal() *
                                 s.eigenvectors.adjoint();
                CHECK((a - cand).norm() >= best - 1e-12);
            }
}

TEST_CASE("interval projection is a contraction toward the feasible set") {
    OperatorInterval iv(0.3, 1.2);
    oracles::Sampler sampler(37);
    for (int trial = 0; trial < 20; ++trial) {
        Hermitian a = 2.0 * sampler.random_hermitian(3);
        Hermitian b = project_to_interval(2.0 * sampler.random_hermitian(3), iv);
        CHECK((project_to_interval(a, iv) - b).norm() <= (a - b).norm() + 1e-12);
    }
}

TEST_CASE("Hilbert-Schmidt inner product") {
    CHECK(hs_inner(Hermitian::Identity(3, 3), Hermitian::Identity(3, 3)) ==
          doctest::Approx(3.0).epsilon(1e-15));
    oracles::Sampler sampler(41);
    Hermitian x = sampler.random_hermitian(4);
    CHECK(hs_inner(x, x) >= 0.0);
    Hermitian a = Eigen::Vector2d(1.0, 2.0).cast<std::complex<double>>().asDiagonal();
    Hermitian b = Eigen::Vector2d(3.0, 4.0).cast<std::complex<double>>().asDiagonal();
    CHECK(hs_inner(a, b) == doctest::Approx(11.0).epsilon(1e-15));
}

TEST_CASE("weighted operator norm") {
    Hermitian rho = Eigen::Vector2d(0.7, 0.3).cast<std::complex<double>>().asDiagonal();
    Hermitian sigma = Eigen::Vector2d(0.4, 0.6).cast<std::complex<double>>().asDiagonal();
    CHECK(weighted_operator_norm(rho, rho) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(weighted_operator_norm(rho, sigma) == doctest::Approx(1.75).epsilon(1e-12));

    oracles::Sampler sampler(43);
    Hermitian num = sampler.random_positive_definite(4);
    Hermitian den = sampler.random_positive_definite(4);
    const double norm = weighted_operator_norm(num, den);

    // generalized eigenproblem gives the exact value
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> ges(num, den);
    CHECK(norm == doctest::Approx(ges.eigenvalues().maxCoeff()).epsilon(1e-10));

    // every generalized Rayleigh quotient bounds it from below
    double sampled_max = 0.0;
    for (int i = 0; i < 10000; ++i) {
        Eigen::VectorXcd v(4);
        for (int k = 0; k < 4; ++k)
            v(k) = std::complex<double>(sampler.gaussian(), sampler.gaussian());
        const double ratio = (v.adjoint() * num * v).real()(0, 0) /
                             (v.adjoint() * den * v).real()(0, 0);
        CHECK(ratio <= norm * (1.0 + 1e-6));
        sampled_max = std::max(sampled_max, ratio);
    }
    CHECK(sampled_max <= norm * (1.0 + 1e-6));
}

TEST_CASE("weighted norm product is at least one") {
    oracles::Sampler sampler(47);
    for (int trial = 0; trial < 20; ++trial) {
        Hermitian a = sampler.random_positive_definite(3);
        Hermitian b = sampler.random_positive_definite(3);
        CHECK(weighted_operator_norm(a, b) * weighted_operator_norm(b, a) >=
              1.0 - 1e-10);
    }
}

TEST_CASE("positive definiteness guard") {
    Hermitian bad = Eigen::Vector2d(1.0, -1e-6).cast<std::complex<double>>().asDiagonal();
    SpectralDecomposition s = spectral_decompose(bad);
    CHECK(!is_positive_definite(s));
    CHECK_THROWS_AS(require_positive_definite(s, "bad"), NotPositiveDefinite);
    CHECK_THROWS_AS(OperatorInterval(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(OperatorInterval(2.0, 1.0), DomainError);
}
