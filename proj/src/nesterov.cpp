#include "meo/nesterov.hpp"

#include <cmath>

namespace meo {

long auto_iteration_cap(double kappa, double epsilon) {
    return static_cast<long>(
               std::ceil(10.0 * std::sqrt(kappa) * std::log(1.0 / epsilon))) +
           100;
}

SolverResult solve(const ObjectiveFn& objective, const GradientFn& gradient,
                   const ConditioningProfile& profile, Direction direction,
                   const Hermitian& init, const SolverConfig& config) {
    if (!(config.epsilon > 0.0))
        throw DomainError("epsilon must be positive");

    const double step_sign = direction == Direction::Ascent ? 1.0 : -1.0;
    const double step = 1.0 / profile.beta;
    const double sqrt_kappa = std::sqrt(profile.kappa);
    const double momentum = (sqrt_kappa - 1.0) / (sqrt_kappa + 1.0);
    const double grad_threshold = std::sqrt(2.0 * profile.gamma * config.epsilon);
    const long cap = config.max_iterations
                         ? *config.max_iterations
                         : auto_iteration_cap(profile.kappa, config.epsilon);

    SolverResult result;
    Hermitian omega = init;
    Hermitian chi_prev = init;

    for (long m = 0;; ++m) {
        Hermitian grad;
        try {
            grad = gradient(omega);
        } catch (const NotPositiveDefinite&) {
            // Momentum extrapolation left the positive definite cone; pull
            // the iterate back to the interval and retry.
            omega = project_to_interval(omega, profile.interval);
            grad = gradient(omega);
            ++result.safeguard_events;
        }
        const double grad_norm = hs_norm(grad);
        if (config.record_trace)
            result.trace.push_back({m, objective(omega), grad_norm});

        if (grad_norm <= grad_threshold) {
            result.converged = true;
            result.iterations = m;
            break;
        }
        if (m >= cap) {
            result.converged = false;
            result.iterations = m;
            break;
        }

        Hermitian xi = omega + (step_sign * step) * grad;
        Hermitian chi = project_to_interval(xi, profile.interval);
        omega = chi + momentum * (chi - chi_prev);
        chi_prev = std::move(chi);
    }

    // Momentum extrapolation can leave the final iterate slightly outside the
    // interval; report the projected point so the result is always feasible.
    result.omega = project_to_interval(omega, profile.interval);
    result.value = objective(result.omega);
    return result;
}

}  // namespace meo
