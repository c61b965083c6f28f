#include "meo/oracles.hpp"

#include <cmath>
#include <numbers>

namespace meo::oracles {

void require_probability_vector(const Eigen::VectorXd& p) {
    if (p.size() < 1)
        throw DomainError("empty probability vector");
    if ((p.array() <= 0.0).any())
        throw DomainError("probability entries must be strictly positive");
    if (std::abs(p.sum() - 1.0) > 1e-10)
        throw DomainError("probability entries must sum to 1");
}

double classical_kl(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    if (p.size() != q.size())
        throw ShapeError("classical_kl requires matching lengths");
    if ((p.array() <= 0.0).any() || (q.array() <= 0.0).any())
        throw DomainError("classical_kl requires strictly positive entries");
    return (p.array() * (p.array() / q.array()).log()).sum();
}

double classical_renyi_q(const Eigen::VectorXd& p, const Eigen::VectorXd& q, double alpha) {
    if (p.size() != q.size())
        throw ShapeError("classical_renyi_q requires matching lengths");
    if ((p.array() <= 0.0).any() || (q.array() <= 0.0).any())
        throw DomainError("classical_renyi_q requires strictly positive entries");
    if (!(alpha > 0.0) || alpha == 1.0)
        throw DomainError("alpha must lie in (0,1) or (1,inf)");
    return (p.array().pow(alpha) * q.array().pow(1.0 - alpha)).sum();
}

Hermitian finite_diff_gradient(const std::function<double(const Hermitian&)>& objective,
                               const Hermitian& omega, double step) {
    SpectralDecomposition s = spectral_decompose(omega);
    if (s.eigenvalues(0) <= 10.0 * step)
        throw StepTooLarge("omega too close to the cone boundary for this step");
    const Eigen::Index d = omega.rows();
    const std::complex<double> im(0.0, 1.0);
    Hermitian grad = Hermitian::Zero(d, d);

    auto central = [&](const Hermitian& dir) {
        return (objective(omega + step * dir) - objective(omega - step * dir)) /
               (2.0 * step);
    };

    for (Eigen::Index i = 0; i < d; ++i) {
        Hermitian e = Hermitian::Zero(d, d);
        e(i, i) = 1.0;
        grad(i, i) = central(e);
        for (Eigen::Index j = i + 1; j < d; ++j) {
            Hermitian sym = Hermitian::Zero(d, d);
            sym(i, j) = 1.0;
            sym(j, i) = 1.0;
            Hermitian asym = Hermitian::Zero(d, d);
            asym(i, j) = im;
            asym(j, i) = -im;
            // <sym, G> = 2 Re G_ij and <asym, G> = 2 Im G_ij for Hermitian G
            const double ds = central(sym);
            const double da = central(asym);
            grad(i, j) = 0.5 * (ds + im * da);
            grad(j, i) = std::conj(grad(i, j));
        }
    }
    return grad;
}

namespace {

// Adaptive Simpson over [a, b] for matrix-valued integrands, Frobenius-norm
// error control.
class AdaptiveSimpson {
  public:
    AdaptiveSimpson(std::function<Eigen::MatrixXcd(double)> f, double abs_tol,
                    int max_depth = 40)
        : f_(std::move(f)), abs_tol_(abs_tol), max_depth_(max_depth) {}

    Eigen::MatrixXcd integrate(double a, double b) {
        Eigen::MatrixXcd fa = f_(a), fm = f_(0.5 * (a + b)), fb = f_(b);
        Eigen::MatrixXcd whole = simpson(a, b, fa, fm, fb);
        return recurse(a, b, fa, fm, fb, whole, abs_tol_, 0);
    }

  private:
    static Eigen::MatrixXcd simpson(double a, double b, const Eigen::MatrixXcd& fa,
                                    const Eigen::MatrixXcd& fm, const Eigen::MatrixXcd& fb) {
        return ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
    }

    Eigen::MatrixXcd recurse(double a, double b, const Eigen::MatrixXcd& fa,
                             const Eigen::MatrixXcd& fm, const Eigen::MatrixXcd& fb,
                             const Eigen::MatrixXcd& whole, double tol, int depth) {
        const double m = 0.5 * (a + b);
        Eigen::MatrixXcd flm = f_(0.5 * (a + m)), frm = f_(0.5 * (m + b));
        Eigen::MatrixXcd left = simpson(a, m, fa, flm, fm);
        Eigen::MatrixXcd right = simpson(m, b, fm, frm, fb);
        Eigen::MatrixXcd both = left + right;
        const double err = (both - whole).norm();
        if (err <= 15.0 * tol || (b - a) < 1e-15)
            return both + (both - whole) / 15.0;
        if (depth >= max_depth_)
            throw QuadratureNonConvergence("adaptive quadrature did not converge");
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }

    std::function<Eigen::MatrixXcd(double)> f_;
    double abs_tol_;
    int max_depth_;
};

double scalar_adaptive(const std::function<double(double)>& f, double a, double b,
                       double abs_tol) {
    AdaptiveSimpson quad(
        [&f](double x) {
            Eigen::MatrixXcd m(1, 1);
            m(0, 0) = f(x);
            return m;
        },
        abs_tol);
    return quad.integrate(a, b)(0, 0).real();
}

double c1_constant(double alpha) {
    return (1.0 - alpha) * std::sin((alpha / (alpha - 1.0)) * std::numbers::pi) /
           std::numbers::pi;
}

double c2_constant(double alpha) {
    return alpha * std::sin(((alpha - 1.0) / alpha) * std::numbers::pi) /
           std::numbers::pi;
}

} // namespace

Hermitian quadrature_hessian(const ProblemInstance& inst, const Hermitian& omega,
                             const Hermitian& x) {
    SpectralDecomposition s = spectral_decompose(omega);
    require_positive_definite(s, "omega is not positive definite");
    const Eigen::Index d = omega.rows();

    double power = 0.0;   // exponent of t in the integrand
    double prefactor = 0.0;
    const Hermitian* a = nullptr;
    switch (inst.kind.tag) {
        case ProblemTag::MeasuredRelEnt:
            power = 0.0;
            prefactor = -1.0;
            a = &inst.rho;
            break;
        case ProblemTag::RenyiLow:
            power = inst.kind.alpha / (inst.kind.alpha - 1.0);
            prefactor = -c1_constant(inst.kind.alpha);
            a = &inst.sigma;
            break;
        case ProblemTag::RenyiMid:
        case ProblemTag::RenyiHigh:
            power = (inst.kind.alpha - 1.0) / inst.kind.alpha;
            prefactor = -c2_constant(inst.kind.alpha);
            a = &inst.rho;
            break;
    }
    if (power <= -1.0 + 1e-12)
        throw QuadratureNonConvergence(
            "integrand exponent at the t^{-1} boundary (alpha = 1/2); "
            "use hessian_apply or the closed-form identity instead");

    const double scale = std::exp(s.eigenvalues.array().log().mean());
    const Hermitian id = Hermitian::Identity(d, d);
    const Hermitian xs = symmetrized(x);

    // Substitution t = scale * (tau/(1-tau))^m with m = 2/(1+power): the
    // endpoint singularity t^power at tau = 0 becomes linear, and the t^{-3}
    // decay keeps the tau = 1 endpoint regular.
    const double m = 2.0 / (1.0 + power);
    auto integrand = [&](double tau) -> Eigen::MatrixXcd {
        if (tau <= 0.0 || tau >= 1.0)
            return Eigen::MatrixXcd::Zero(d, d);
        const double v = tau / (1.0 - tau);
        const double t = scale * std::pow(v, m);
        const double jac = scale * m * std::pow(v, m - 1.0) /
                           ((1.0 - tau) * (1.0 - tau));
        Eigen::MatrixXcd resolvent = (omega + t * id).partialPivLu().inverse();
        Eigen::MatrixXcd core =
            resolvent * (xs * resolvent * (*a) + (*a) * resolvent * xs) * resolvent;
        return std::pow(t, power) * jac * core;
    };

    const double ref = xs.norm() * a->norm();
    AdaptiveSimpson quad(integrand, 1e-10 * std::max(1.0, ref));
    return prefactor * symmetrized(quad.integrate(0.0, 1.0));
}

double power_kernel_integral(double p, double k) {
    if (p < -1.0 || p >= 1.0)
        throw DomainError("power_kernel_integral requires p in [-1, 1)");
    if (!(k > 0.0))
        throw DomainError("power_kernel_integral requires k > 0");
    // One integration by parts regularizes the p = -1 endpoint:
    //   -(sin(p pi)/pi) int t^p (k+t)^{-3} dt
    //     = 3 sinc(p+1) int t^{p+1} (k+t)^{-4} dt,   sinc(z) = sin(pi z)/(pi z).
    const double z = p + 1.0;
    const double sinc = z < 1e-12 ? 1.0 : std::sin(std::numbers::pi * z) /
                                              (std::numbers::pi * z);
    auto integrand = [p, k](double tau) {
        if (tau <= 0.0 || tau >= 1.0) return 0.0;
        const double v = tau / (1.0 - tau);
        const double t = k * v * v;
        const double jac = 2.0 * k * v / ((1.0 - tau) * (1.0 - tau));
        return std::pow(t, p + 1.0) * std::pow(k + t, -4.0) * jac;
    };
    const double i4 = scalar_adaptive(integrand, 0.0, 1.0, 1e-13 * std::pow(k, p - 2.0));
    return 3.0 * sinc * i4;
}

IdentityReport check_integral_identities(const std::vector<double>& alpha_grid,
                                         const std::vector<double>& k_grid) {
    IdentityReport report;
    for (double alpha : alpha_grid) {
        if (!(alpha > 0.0) || alpha == 1.0)
            throw DomainError("alpha grid must avoid 0 and 1");
        for (double k : k_grid) {
            double quadrature, closed;
            if (alpha < 0.5) {
                const double zeta = alpha / (alpha - 1.0);
                quadrature = (1.0 - alpha) * power_kernel_integral(zeta, k);
                closed = alpha / (2.0 * (1.0 - alpha)) *
                         std::pow(k, -(2.0 - alpha) / (1.0 - alpha));
            } else {
                const double xi = (alpha - 1.0) / alpha;
                quadrature = alpha * power_kernel_integral(xi, k);
                closed = (1.0 - alpha) / (2.0 * alpha) *
                         std::pow(k, -(alpha + 1.0) / alpha);
            }
            const double dev = std::abs(quadrature - closed) /
                               std::max(std::abs(closed), 1e-300);
            report.checks.push_back({alpha, k, quadrature, closed, dev});
            report.max_rel_deviation = std::max(report.max_rel_deviation, dev);
        }
    }
    return report;
}

Sampler::Sampler(std::uint64_t seed) : engine_(seed) {}

double Sampler::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::gaussian() {
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::MatrixXcd Sampler::ginibre(int dim) {
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const double re = gaussian();
            const double im = gaussian();
            g(i, j) = std::complex<double>(re, im) / std::sqrt(2.0);
        }
    return g;
}

Eigen::MatrixXcd Sampler::random_unitary(int dim) {
    Eigen::MatrixXcd g = ginibre(dim);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix the phase ambiguity so the result is a function of g alone
    for (int i = 0; i < dim; ++i) {
        std::complex<double> rii = r(i, i);
        q.col(i) *= rii / std::abs(rii);
    }
    return q;
}

Hermitian Sampler::random_hermitian(int dim) {
    Hermitian h = symmetrized(ginibre(dim));
    return h / h.norm();
}

Hermitian Sampler::random_density(int dim) {
    Eigen::MatrixXcd g = ginibre(dim);
    Hermitian rho = symmetrized(g * g.adjoint());
    return rho / rho.trace().real();
}

Hermitian Sampler::random_positive_definite(int dim) {
    Eigen::MatrixXcd g = ginibre(dim);
    Hermitian p = symmetrized(g * g.adjoint());
    return p / static_cast<double>(dim) +
           0.05 * Hermitian::Identity(dim, dim);
}

ProblemInstance random_instance(const InstanceSpec& spec, ProblemKind kind) {
    if (spec.dim < 1)
        throw DomainError("dim must be at least 1");
    if (!(spec.mixing > 0.0) || spec.mixing > 1.0)
        throw DomainError("mixing weight must lie in (0, 1]");
    Sampler sampler(spec.seed);
    const int d = spec.dim;
    Hermitian rho, sigma;
    if (spec.commuting) {
        Eigen::VectorXd p = spectral_decompose(sampler.random_density(d)).eigenvalues;
        Eigen::VectorXd q = spectral_decompose(sampler.random_density(d)).eigenvalues;
        Eigen::MatrixXcd v = sampler.random_unitary(d);
        rho = symmetrized(v * p.asDiagonal() * v.adjoint());
        sigma = symmetrized(v * q.asDiagonal() * v.adjoint());
    } else {
        rho = sampler.random_density(d);
        sigma = sampler.random_density(d);
    }
    if (spec.conditioning == Conditioning::WellConditioned) {
        const double t = spec.mixing;
        Hermitian uniform_state = Hermitian::Identity(d, d) / static_cast<double>(d);
        rho = (1.0 - t) * uniform_state + t * rho;
        sigma = (1.0 - t) * uniform_state + t * sigma;
    }
    return {std::move(rho), std::move(sigma), kind};
}

}  // namespace meo::oracles
