#include "meo/objectives.hpp"

#include <cmath>
#include <functional>

namespace meo {

ProblemKind ProblemKind::renyi(double alpha) {
    if (!(alpha > 0.0))
        throw AlphaOutOfRange("Renyi parameter must be positive");
    if (std::abs(alpha - 1.0) < kAlphaNearOneGap)
        throw AlphaNearOne("Renyi parameter too close to 1");
    if (alpha < 0.5) return {ProblemTag::RenyiLow, alpha};
    if (alpha < 1.0) return {ProblemTag::RenyiMid, alpha};
    return {ProblemTag::RenyiHigh, alpha};
}

ProblemInstance::ProblemInstance(Hermitian rho_, Hermitian sigma_, ProblemKind kind_)
    : rho(symmetrized(std::move(rho_))), sigma(symmetrized(std::move(sigma_))), kind(kind_) {
    if (rho.rows() != sigma.rows())
        throw ShapeError("rho and sigma must have the same dimension");
    require_positive_definite(spectral_decompose(rho), "rho is not positive definite");
    require_positive_definite(spectral_decompose(sigma), "sigma is not positive definite");
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-9)
        throw DomainError("rho must have unit trace");
}

namespace {

// Exponent of the power function appearing in the Renyi objectives.
double power_exponent(const ProblemKind& kind) {
    switch (kind.tag) {
        case ProblemTag::RenyiLow:
            return kind.alpha / (kind.alpha - 1.0);
        case ProblemTag::RenyiMid:
        case ProblemTag::RenyiHigh:
            return (kind.alpha - 1.0) / kind.alpha;
        case ProblemTag::MeasuredRelEnt:
            break;
    }
    throw DomainError("no power exponent for this kind");
}

Eigen::VectorXd mapped_eigs(const SpectralDecomposition& s,
                            const std::function<double(double)>& f) {
    Eigen::VectorXd out(s.dim());
    for (Eigen::Index i = 0; i < s.dim(); ++i)
        out(i) = f(s.eigenvalues(i));
    return out;
}

double trace_with(const SpectralDecomposition& s, const Eigen::VectorXd& fvals,
                  const Hermitian& a) {
    // Tr[V diag(f) V^dag A] = sum_k f_k <v_k| A |v_k>
    double total = 0.0;
    for (Eigen::Index k = 0; k < s.dim(); ++k) {
        const auto vk = s.eigenvectors.col(k);
        total += fvals(k) * (vk.adjoint() * a * vk)(0, 0).real();
    }
    return total;
}

} // namespace

double objective(const ProblemInstance& inst, const SpectralDecomposition& omega) {
    require_positive_definite(omega, "omega is not positive definite");
    switch (inst.kind.tag) {
        case ProblemTag::MeasuredRelEnt: {
            Eigen::VectorXd logs = mapped_eigs(omega, [](double x) { return std::log(x); });
            Eigen::VectorXd lin = mapped_eigs(omega, [](double x) { return x; });
            return trace_with(omega, logs, inst.rho) + 1.0 - trace_with(omega, lin, inst.sigma);
        }
        case ProblemTag::RenyiLow: {
            const double a = inst.kind.alpha;
            const double r = power_exponent(inst.kind);
            Eigen::VectorXd pw = mapped_eigs(omega, [r](double x) { return std::pow(x, r); });
            Eigen::VectorXd lin = mapped_eigs(omega, [](double x) { return x; });
            return a * trace_with(omega, lin, inst.rho) +
                   (1.0 - a) * trace_with(omega, pw, inst.sigma);
        }
        case ProblemTag::RenyiMid:
        case ProblemTag::RenyiHigh: {
            const double a = inst.kind.alpha;
            const double r = power_exponent(inst.kind);
            Eigen::VectorXd pw = mapped_eigs(omega, [r](double x) { return std::pow(x, r); });
            Eigen::VectorXd lin = mapped_eigs(omega, [](double x) { return x; });
            return a * trace_with(omega, pw, inst.rho) +
                   (1.0 - a) * trace_with(omega, lin, inst.sigma);
        }
    }
    throw DomainError("unknown problem kind");
}

double objective(const ProblemInstance& inst, const Hermitian& omega) {
    if (omega.rows() != inst.dim())
        throw ShapeError("omega dimension mismatch");
    return objective(inst, spectral_decompose(omega));
}

namespace {

// V (D o (V^dag A V)) V^dag with D the first-divided-difference kernel.
Hermitian schur_lift(const SpectralDecomposition& s, const Hermitian& a,
                     const std::function<double(double, double)>& dd) {
    const Eigen::Index d = s.dim();
    Eigen::MatrixXcd a_eig = s.eigenvectors.adjoint() * a * s.eigenvectors;
    for (Eigen::Index l = 0; l < d; ++l)
        for (Eigen::Index m = 0; m < d; ++m)
            a_eig(l, m) *= dd(s.eigenvalues(l), s.eigenvalues(m));
    return symmetrized(s.eigenvectors * a_eig * s.eigenvectors.adjoint());
}

} // namespace

Hermitian gradient(const ProblemInstance& inst, const SpectralDecomposition& omega) {
    require_positive_definite(omega, "omega is not positive definite");
    switch (inst.kind.tag) {
        case ProblemTag::MeasuredRelEnt:
            return schur_lift(omega, inst.rho, divided_difference_log) - inst.sigma;
        case ProblemTag::RenyiLow: {
            const double a = inst.kind.alpha;
            const double r = power_exponent(inst.kind);
            return a * inst.rho +
                   (1.0 - a) * schur_lift(omega, inst.sigma, [r](double x, double y) {
                       return divided_difference_power(r, x, y);
                   });
        }
        case ProblemTag::RenyiMid:
        case ProblemTag::RenyiHigh: {
            const double a = inst.kind.alpha;
            const double r = power_exponent(inst.kind);
            return (1.0 - a) * inst.sigma +
                   a * schur_lift(omega, inst.rho, [r](double x, double y) {
                       return divided_difference_power(r, x, y);
                   });
        }
    }
    throw DomainError("unknown problem kind");
}

Hermitian gradient(const ProblemInstance& inst, const Hermitian& omega) {
    if (omega.rows() != inst.dim())
        throw ShapeError("omega dimension mismatch");
    return gradient(inst, spectral_decompose(omega));
}

Hermitian hessian_apply(const ProblemInstance& inst, const Hermitian& omega,
                        const Hermitian& x) {
    if (omega.rows() != inst.dim() || x.rows() != inst.dim() || x.cols() != inst.dim())
        throw ShapeError("hessian_apply dimension mismatch");
    SpectralDecomposition s = spectral_decompose(omega);
    require_positive_definite(s, "omega is not positive definite");

    // Hessian of Tr[A f(omega)] applied to X, in omega's eigenbasis:
    // [H(X)]_{lm} = sum_k f^{[2]}(l_l, l_k, l_m) (X_{lk} A_{km} + A_{lk} X_{km}).
    const Hermitian* a = nullptr;
    double coeff = 0.0;
    std::function<double(double, double, double)> dd2;
    switch (inst.kind.tag) {
        case ProblemTag::MeasuredRelEnt:
            a = &inst.rho;
            coeff = 1.0;
            dd2 = divided_difference2_log;
            break;
        case ProblemTag::RenyiLow: {
            a = &inst.sigma;
            coeff = 1.0 - inst.kind.alpha;
            const double r = power_exponent(inst.kind);
            dd2 = [r](double p, double q, double t) {
                return divided_difference2_power(r, p, q, t);
            };
            break;
        }
        case ProblemTag::RenyiMid:
        case ProblemTag::RenyiHigh: {
            a = &inst.rho;
            coeff = inst.kind.alpha;
            const double r = power_exponent(inst.kind);
            dd2 = [r](double p, double q, double t) {
                return divided_difference2_power(r, p, q, t);
            };
            break;
        }
    }

    const Eigen::Index d = s.dim();
    Eigen::MatrixXcd x_eig = s.eigenvectors.adjoint() * symmetrized(x) * s.eigenvectors;
    Eigen::MatrixXcd a_eig = s.eigenvectors.adjoint() * (*a) * s.eigenvectors;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index l = 0; l < d; ++l)
        for (Eigen::Index m = 0; m < d; ++m) {
            std::complex<double> acc = 0.0;
            for (Eigen::Index k = 0; k < d; ++k)
                acc += dd2(s.eigenvalues(l), s.eigenvalues(k), s.eigenvalues(m)) *
                       (x_eig(l, k) * a_eig(k, m) + a_eig(l, k) * x_eig(k, m));
            out(l, m) = acc;
        }
    return coeff * symmetrized(s.eigenvectors * out * s.eigenvectors.adjoint());
}

}  // namespace meo
