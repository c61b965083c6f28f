#include "meo/entropies.hpp"

#include <cmath>

namespace meo {

namespace {

EntropyReport run(const ProblemInstance& inst, Direction direction,
                  const SolverConfig& config) {
    ConditioningProfile profile = smoothness_for(inst);
    Hermitian init = profile.interval.midpoint() *
                     Hermitian::Identity(inst.dim(), inst.dim());
    SolverResult solved = solve(
        [&inst](const Hermitian& w) { return objective(inst, w); },
        [&inst](const Hermitian& w) { return gradient(inst, w); }, profile,
        direction, init, config);

    EntropyReport report{Quantity::DM, solved.value, {}, {}, std::move(solved),
                         std::move(profile)};
    if (inst.kind.tag != ProblemTag::MeasuredRelEnt) {
        report.quantity = Quantity::DAlpha;
        report.alpha = inst.kind.alpha;
        report.q_alpha = report.solver.value;
        report.value = std::log(report.solver.value) / (inst.kind.alpha - 1.0);
    }
    return report;
}

} // namespace

EntropyReport measured_relative_entropy(const Hermitian& rho, const Hermitian& sigma,
                                        const SolverConfig& config) {
    ProblemInstance inst(rho, sigma, ProblemKind::relative_entropy());
    return run(inst, Direction::Ascent, config);
}

EntropyReport measured_renyi(const Hermitian& rho, const Hermitian& sigma, double alpha,
                             const SolverConfig& config) {
    ProblemInstance inst(rho, sigma, ProblemKind::renyi(alpha));
    const Direction direction =
        inst.kind.tag == ProblemTag::RenyiHigh ? Direction::Ascent : Direction::Descent;
    return run(inst, direction, config);
}

SpectralDecomposition optimal_measurement_basis(const EntropyReport& report) {
    if (!report.solver.converged)
        throw NotConverged("solver did not converge; no optimal basis available");
    return spectral_decompose(report.solver.omega);
}

}  // namespace meo
