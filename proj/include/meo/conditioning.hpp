#pragma once

#include "meo/objectives.hpp"

namespace meo {

struct ConditioningProfile {
    OperatorInterval interval;
    double beta;
    double gamma;
    double kappa; // beta / gamma
    ProblemKind kind;
};

// Operator search interval containing the optimal omega.
OperatorInterval interval_for(const ProblemInstance& inst);

// Smoothness beta, strong convexity/concavity gamma, and condition number
// kappa on interval_for(inst).
ConditioningProfile smoothness_for(const ProblemInstance& inst);

}  // namespace meo
