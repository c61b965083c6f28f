#include "meo/conditioning.hpp"

#include <cmath>

namespace meo {

namespace {

struct Norms {
    double rho_over_sigma;   // ||sigma^{-1/2} rho sigma^{-1/2}||
    double sigma_over_rho;   // ||rho^{-1/2} sigma rho^{-1/2}||
};

Norms weighted_norms(const ProblemInstance& inst) {
    return {weighted_operator_norm(inst.rho, inst.sigma),
            weighted_operator_norm(inst.sigma, inst.rho)};
}

} // namespace

OperatorInterval interval_for(const ProblemInstance& inst) {
    const Norms n = weighted_norms(inst);
    const double a = inst.kind.alpha;
    // lo <= hi is guaranteed in exact arithmetic (the norm product is >= 1)
    // but can flip by an ulp when rho = sigma; collapse to a point instead.
    auto clamped = [](double lo, double hi) {
        return OperatorInterval(std::min(lo, hi), hi);
    };
    switch (inst.kind.tag) {
        case ProblemTag::MeasuredRelEnt:
            return clamped(1.0 / n.sigma_over_rho, n.rho_over_sigma);
        case ProblemTag::RenyiLow:
            return clamped(std::pow(n.rho_over_sigma, -(1.0 - a)),
                           std::pow(n.sigma_over_rho, 1.0 - a));
        case ProblemTag::RenyiMid:
        case ProblemTag::RenyiHigh:
            return clamped(std::pow(n.sigma_over_rho, -a), std::pow(n.rho_over_sigma, a));
    }
    throw DomainError("unknown problem kind");
}

ConditioningProfile smoothness_for(const ProblemInstance& inst) {
    const Norms n = weighted_norms(inst);
    const double a = inst.kind.alpha;
    OperatorInterval interval = interval_for(inst);

    double beta = 0.0, gamma = 0.0, kappa = 0.0;
    switch (inst.kind.tag) {
        case ProblemTag::MeasuredRelEnt: {
            SpectralDecomposition s = spectral_decompose(inst.rho);
            const double lmin = s.eigenvalues(0);
            const double lmax = s.eigenvalues(s.dim() - 1);
            beta = lmax * n.sigma_over_rho * n.sigma_over_rho;
            gamma = lmin / (n.rho_over_sigma * n.rho_over_sigma);
            kappa = (lmax / lmin) * std::pow(n.sigma_over_rho * n.rho_over_sigma, 2.0);
            break;
        }
        case ProblemTag::RenyiLow: {
            SpectralDecomposition s = spectral_decompose(inst.sigma);
            const double lmin = s.eigenvalues(0);
            const double lmax = s.eigenvalues(s.dim() - 1);
            const double factor = a / (1.0 - a);
            beta = factor * lmax * std::pow(n.rho_over_sigma, 2.0 - a);
            gamma = factor * lmin * std::pow(n.sigma_over_rho, a - 2.0);
            kappa = (lmax / lmin) * std::pow(n.sigma_over_rho * n.rho_over_sigma, 2.0 - a);
            break;
        }
        case ProblemTag::RenyiMid:
        case ProblemTag::RenyiHigh: {
            if (std::abs(a - 1.0) < kAlphaNearOneGap)
                throw AlphaNearOne("gamma underflows the stopping rule near alpha = 1");
            SpectralDecomposition s = spectral_decompose(inst.rho);
            const double lmin = s.eigenvalues(0);
            const double lmax = s.eigenvalues(s.dim() - 1);
            // |1 - alpha| / alpha so beta and gamma stay positive on both
            // sides of alpha = 1; kappa is unaffected.
            const double factor = std::abs(1.0 - a) / a;
            beta = factor * lmax * std::pow(n.sigma_over_rho, a + 1.0);
            gamma = factor * lmin * std::pow(n.rho_over_sigma, -(a + 1.0));
            kappa = (lmax / lmin) * std::pow(n.sigma_over_rho * n.rho_over_sigma, a + 1.0);
            break;
        }
    }
    kappa = std::max(kappa, 1.0);
    return {interval, beta, gamma, kappa, inst.kind};
}

}  // namespace meo
