#pragma once

#include <vector>

#include "rampopt/cost.hpp"
#include "rampopt/trajectory.hpp"

namespace rampopt {

/// Grid minimizer of the discretized cost functional. Independent of the
/// closed forms: it only sees the raw integrand and the constraints.
struct OracleSolution {
    std::vector<double> grid;  // N+1 power samples [MW]
    double cost;               // discretized cost at the solution [$]
    double energy_gap;         // trapezoid energy minus E_T [MWh]
    double endpoint_gap0;      // grid.front() - Q0 [MW]
    double endpoint_gap_t;     // grid.back() - QT [MW]
    int sign_iterations;
};

/// Minimize the trapezoidal discretization of the dispatch cost over the
/// interior grid values, with fixed endpoints and the trapezoidal energy
/// equality, by direct solution of the bordered tridiagonal KKT system.
/// When b > 0 the ramp-sign pattern is fixed, solved, re-checked and
/// iterated (at most 10 times); the initial pattern comes from the b = 0
/// solution. Throws NoConvergence if the pattern cycles, SingularKKT on a
/// vanishing pivot.
OracleSolution solve_numeric(const PriceSet& prices, const HourSchedule& sched,
                             int steps);

/// Relative gap |analytic.total - numeric.cost| / max(1, |numeric.cost|).
double compare(const CostBreakdown& analytic, const OracleSolution& numeric);

}  // namespace rampopt
