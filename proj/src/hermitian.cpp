#include "meo/hermitian.hpp"

#include <cmath>
#include <functional>

namespace meo {

Hermitian symmetrized(const Hermitian& a) {
    if (a.rows() != a.cols())
        throw ShapeError("matrix is not square");
    return 0.5 * (a + a.adjoint());
}

double hermiticity_defect(const Hermitian& a) {
    if (a.rows() != a.cols())
        throw ShapeError("matrix is not square");
    return (a - a.adjoint().eval()).cwiseAbs().maxCoeff();
}

SpectralDecomposition spectral_decompose(const Hermitian& a) {
    if (a.rows() != a.cols())
        throw ShapeError("matrix is not square");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("eigendecomposition did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

bool is_positive_definite(const SpectralDecomposition& s) {
    const double lo = s.eigenvalues(0);
    const double hi = s.eigenvalues(s.dim() - 1);
    return lo > kPdThreshold * std::max(1.0, hi);
}

void require_positive_definite(const SpectralDecomposition& s, const char* what) {
    if (!is_positive_definite(s))
        throw NotPositiveDefinite(what);
}

namespace {

// Canonicalize to hi >= lo so both branches are exactly symmetric.
void sort2(double& hi, double& lo) {
    if (hi < lo) std::swap(hi, lo);
}

bool near_equal(double hi, double lo) {
    return hi - lo <= kDividedDiffGap * hi;
}

} // namespace

double divided_difference_log(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("divided_difference_log requires positive arguments");
    sort2(x, y);
    if (near_equal(x, y))
        return 1.0 / x;
    // (ln x - ln y)/(x - y) = log1p((x - y)/y)/(x - y)
    const double diff = x - y;
    return std::log1p(diff / y) / diff;
}

double divided_difference_power(double r, double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("divided_difference_power requires positive base");
    sort2(x, y);
    if (near_equal(x, y))
        return r * std::pow(x, r - 1.0);
    // (x^r - y^r)/(x - y) = y^r expm1(r log1p((x - y)/y)) / (x - y)
    const double diff = x - y;
    return std::pow(y, r) * std::expm1(r * std::log1p(diff / y)) / diff;
}

namespace {

double dd2(double a, double b, double c, double deriv2_mid,
           const std::function<double(double, double)>& dd1) {
    // sort descending: a >= b >= c
    if (a < b) std::swap(a, b);
    if (b < c) std::swap(b, c);
    if (a < b) std::swap(a, b);
    if (a - c <= kDividedDiffGap * a)
        return 0.5 * deriv2_mid;
    return (dd1(a, b) - dd1(b, c)) / (a - c);
}

} // namespace

double divided_difference2_log(double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw DomainError("divided_difference2_log requires positive arguments");
    const double mid = std::max(std::min(a, b), std::min(std::max(a, b), c));
    return dd2(a, b, c, -1.0 / (mid * mid),
               [](double x, double y) { return divided_difference_log(x, y); });
}

double divided_difference2_power(double r, double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw DomainError("divided_difference2_power requires positive arguments");
    const double mid = std::max(std::min(a, b), std::min(std::max(a, b), c));
    return dd2(a, b, c, r * (r - 1.0) * std::pow(mid, r - 2.0),
               [r](double x, double y) { return divided_difference_power(r, x, y); });
}

namespace {

Hermitian lift(const SpectralDecomposition& s, const std::function<double(double)>& f) {
    Eigen::VectorXd mapped(s.dim());
    for (Eigen::Index i = 0; i < s.dim(); ++i)
        mapped(i) = f(s.eigenvalues(i));
    Hermitian out = s.eigenvectors * mapped.asDiagonal() * s.eigenvectors.adjoint();
    return symmetrized(out);
}

} // namespace

Hermitian matrix_function(const Hermitian& a, ScalarFunction f, double r) {
    SpectralDecomposition s = spectral_decompose(a);
    require_positive_definite(s, "matrix_function requires a positive definite input");
    switch (f) {
        case ScalarFunction::Log:
            return lift(s, [](double x) { return std::log(x); });
        case ScalarFunction::Power:
            return lift(s, [r](double x) { return std::pow(x, r); });
    }
    throw DomainError("unknown scalar function tag");
}

Hermitian matrix_log(const Hermitian& a) { return matrix_function(a, ScalarFunction::Log); }

Hermitian matrix_power(const Hermitian& a, double r) {
    return matrix_function(a, ScalarFunction::Power, r);
}

Hermitian matrix_exp(const Hermitian& a) {
    SpectralDecomposition s = spectral_decompose(a);
    return lift(s, [](double x) { return std::exp(x); });
}

Hermitian project_to_interval(const Hermitian& a, const OperatorInterval& iv) {
    SpectralDecomposition s = spectral_decompose(a);
    return lift(s, [&iv](double x) { return std::min(std::max(x, iv.lo), iv.hi); });
}

double hs_inner(const Hermitian& x, const Hermitian& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw ShapeError("hs_inner requires matching dimensions");
    return (x.adjoint() * y).trace().real();
}

double hs_norm(const Hermitian& x) {
    return x.norm(); // Frobenius
}

double weighted_operator_norm(const Hermitian& num, const Hermitian& den) {
    if (num.rows() != den.rows())
        throw ShapeError("weighted_operator_norm requires matching dimensions");
    SpectralDecomposition sn = spectral_decompose(num);
    require_positive_definite(sn, "weighted_operator_norm: numerator not positive definite");
    SpectralDecomposition sd = spectral_decompose(den);
    require_positive_definite(sd, "weighted_operator_norm: denominator not positive definite");
    Eigen::VectorXd invsqrt = sd.eigenvalues.array().rsqrt();
    Hermitian den_mhalf = sd.eigenvectors * invsqrt.asDiagonal() * sd.eigenvectors.adjoint();
    Hermitian conjugated = symmetrized(den_mhalf * num * den_mhalf);
    SpectralDecomposition sc = spectral_decompose(conjugated);
    return sc.eigenvalues(sc.dim() - 1);
}

}  // namespace meo
