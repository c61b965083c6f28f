#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "meo/conditioning.hpp"

namespace meo {

enum class Direction { Ascent, Descent };

struct SolverConfig {
    double epsilon = 1e-6;                     // target objective-value accuracy
    std::optional<long> max_iterations = {};   // empty: ceil(10 sqrt(kappa) ln(1/eps)) + 100
    bool record_trace = false;
};

struct TracePoint {
    long iteration;
    double objective;
    double grad_hs_norm;
};

struct SolverResult {
    double value = 0.0;
    Hermitian omega;
    long iterations = 0;
    bool converged = false;
    long safeguard_events = 0;
    std::vector<TracePoint> trace;
};

using ObjectiveFn = std::function<double(const Hermitian&)>;
using GradientFn = std::function<Hermitian(const Hermitian&)>;

long auto_iteration_cap(double kappa, double epsilon);

// Accelerated projected gradient iteration: gradient step with size 1/beta,
// spectral projection onto the interval, then momentum extrapolation with
// coefficient (sqrt(kappa)-1)/(sqrt(kappa)+1).  Stops when the gradient
// HS-norm falls to sqrt(2 gamma epsilon), checked before each step.
//
// The momentum step may carry an iterate outside the interval; the gradient
// is evaluated there as long as the matrix stays positive definite.  If it
// does not, the iterate itself is projected back and a safeguard event is
// counted.
SolverResult solve(const ObjectiveFn& objective, const GradientFn& gradient,
                   const ConditioningProfile& profile, Direction direction,
                   const Hermitian& init, const SolverConfig& config);

}  // namespace meo
