#pragma once

#include <optional>

#include "rampopt/controller.hpp"
#include "rampopt/trajectory.hpp"

namespace rampopt {

/// Dispatch cost over one interval, split by price component.
/// total = energy_cost + power_cost + ramping_cost.
/// sign_split_at holds the interior ramp-sign change t_c when one exists;
/// the power (b) terms are then integrated piecewise around it.
struct CostBreakdown {
    double energy_cost;
    double power_cost;
    double ramping_cost;
    double total;
    std::optional<double> sign_split_at;
};

/// Closed-form cost of the optimal continuous trajectory.
CostBreakdown optimal_cost(const TrajectoryParams& params);

/// Closed-form cost of the conventional base-case profile.
CostBreakdown base_case_cost(const PriceSet& prices, const HourSchedule& sched);

/// Discrete-control cost C* of a sampled dispatch under zero-order-hold ramp:
///   sum_k  a t_s/4 [Q^2 + 2 Q Q' + Q'^2 - 2 Qz (Q + Q')]
///        + 1/2 |b (Q' - Q)| (Q' + Q - 2 Qz)
///        + c/t_s (Q' - Q)^2
/// over the N hold intervals, with Q = Q*(k), Q' = Q*(k+1), t_s in hours.
double discrete_cost(const DiscreteTrajectory& traj, const PriceSet& prices);

/// Second-variation coefficients of the cost Lagrangian: alpha = 2a, beta = b,
/// gamma = 2c.
struct SecondVariation {
    double alpha;
    double beta;
    double gamma;
};

SecondVariation second_variation_terms(const PriceSet& prices);

/// True iff the critical trajectory is a strict minimizer: alpha > 0 and
/// gamma > 0. The sign of beta does not matter.
bool is_minimizer(const PriceSet& prices);

}  // namespace rampopt
