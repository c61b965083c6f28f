#pragma once

#include <Eigen/Dense>
#include <complex>

#include "meo/errors.hpp"

namespace meo {

using Hermitian = Eigen::MatrixXcd;

// Relative eigenvalue gap below which divided differences switch to the
// derivative branch.
inline constexpr double kDividedDiffGap = 1e-9;

// Positive definiteness guard: lambda_min > kPdThreshold * max(1, lambda_max).
inline constexpr double kPdThreshold = 1e-12;

struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXcd eigenvectors; // columns orthonormal

    Eigen::Index dim() const { return eigenvalues.size(); }
};

struct OperatorInterval {
    double lo;
    double hi;

    OperatorInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo > 0.0) || !(lo <= hi))
            throw DomainError("OperatorInterval requires 0 < lo <= hi");
    }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double x, double slack = 0.0) const {
        return x >= lo - slack && x <= hi + slack;
    }
};

// (A + A^dag) / 2, absorbing I/O roundoff.
Hermitian symmetrized(const Hermitian& a);

// Largest Hermiticity defect max_ij |a_ij - conj(a_ji)|.
double hermiticity_defect(const Hermitian& a);

SpectralDecomposition spectral_decompose(const Hermitian& a);

bool is_positive_definite(const SpectralDecomposition& s);
void require_positive_definite(const SpectralDecomposition& s, const char* what);

// First divided differences of ln x and x^r, symmetric in (x, y) by
// construction and cancellation-safe near the diagonal.
double divided_difference_log(double x, double y);
double divided_difference_power(double r, double x, double y);

// Second divided differences (Daleckii-Krein second-order coefficients),
// fully symmetric in the three arguments.
double divided_difference2_log(double a, double b, double c);
double divided_difference2_power(double r, double a, double b, double c);

enum class ScalarFunction { Log, Power };

// V f(diag) V^dag.  Requires positive definiteness.
Hermitian matrix_function(const Hermitian& a, ScalarFunction f, double r = 0.0);
Hermitian matrix_log(const Hermitian& a);
Hermitian matrix_power(const Hermitian& a, double r);
// exp lifted the same way (no PD requirement); used for log round trips.
Hermitian matrix_exp(const Hermitian& a);

// Eigenvalue clipping to [lo, hi]: the Frobenius projection onto the
// operator interval.
Hermitian project_to_interval(const Hermitian& a, const OperatorInterval& iv);

// Tr[X^dag Y], real for Hermitian inputs.
double hs_inner(const Hermitian& x, const Hermitian& y);
double hs_norm(const Hermitian& x);

// Largest eigenvalue of den^{-1/2} num den^{-1/2}: the smallest c with
// num <= c * den.
double weighted_operator_norm(const Hermitian& num, const Hermitian& den);

}  // namespace meo
