#pragma once

#include "meo/nesterov.hpp"

namespace meo {

enum class Quantity { DM, DAlpha };

struct EntropyReport {
    Quantity quantity;
    double value;                  // DM or DAlpha
    std::optional<double> alpha;
    std::optional<double> q_alpha; // optimized quasi-entropy, Renyi only
    SolverResult solver;
    ConditioningProfile profile;
};

EntropyReport measured_relative_entropy(const Hermitian& rho, const Hermitian& sigma,
                                        const SolverConfig& config = {});

EntropyReport measured_renyi(const Hermitian& rho, const Hermitian& sigma, double alpha,
                             const SolverConfig& config = {});

// Eigenbasis of the final omega; a projective measurement in this basis
// attains the reported divergence.  Requires a converged report.
SpectralDecomposition optimal_measurement_basis(const EntropyReport& report);

}  // namespace meo
