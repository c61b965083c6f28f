#pragma once

#include <optional>

#include "meo/hermitian.hpp"

namespace meo {

enum class ProblemTag {
    MeasuredRelEnt, // ascent on h
    RenyiLow,       // alpha in (0, 1/2), descent on g
    RenyiMid,       // alpha in [1/2, 1), descent on h_alpha
    RenyiHigh,      // alpha in (1, inf), ascent on h_alpha
};

inline constexpr double kAlphaNearOneGap = 1e-6;

struct ProblemKind {
    ProblemTag tag;
    double alpha; // unused for MeasuredRelEnt

    static ProblemKind relative_entropy() { return {ProblemTag::MeasuredRelEnt, 0.0}; }
    static ProblemKind renyi(double alpha);

    bool is_concave() const {
        return tag == ProblemTag::MeasuredRelEnt || tag == ProblemTag::RenyiHigh;
    }
};

struct ProblemInstance {
    Hermitian rho;   // positive definite state, unit trace
    Hermitian sigma; // positive definite
    ProblemKind kind;

    // Symmetrizes both matrices and validates the invariants.
    ProblemInstance(Hermitian rho_, Hermitian sigma_, ProblemKind kind_);

    Eigen::Index dim() const { return rho.rows(); }
};

double objective(const ProblemInstance& inst, const Hermitian& omega);
Hermitian gradient(const ProblemInstance& inst, const Hermitian& omega);

// Action of the Hessian superoperator on X, in the eigenbasis of omega via
// second divided differences.  Verification path only.
Hermitian hessian_apply(const ProblemInstance& inst, const Hermitian& omega,
                        const Hermitian& x);

// Eigenbasis variants, for callers that already decomposed omega.
double objective(const ProblemInstance& inst, const SpectralDecomposition& omega);
Hermitian gradient(const ProblemInstance& inst, const SpectralDecomposition& omega);

}  // namespace meo
