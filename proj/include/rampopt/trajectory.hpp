#pragma once

#include "rampopt/errors.hpp"

namespace rampopt {

/// Marginal prices for one dispatch hour.
///
/// The unit-level cost functions are quadratic, so each marginal price is the
/// (constant) slope of the corresponding linear price function:
///   energy    a  [$/MW^2.h]  -- price of energy vs. power level
///   power     b  [$/MW^2]    -- price of ramp vs. power level
///   ramping   c  [$.h/MW^2]  -- price of ramp vs. ramp rate
///   must_take Qz [MW]        -- generation with zero marginal energy cost
///
/// Prices cannot be negative, and energy and ramping cannot both be zero
/// (the dispatch problem degenerates).
struct PriceSet {
    double energy;
    double power;
    double ramping;
    double must_take;

    PriceSet(double energy_price, double power_price, double ramping_price,
             double must_take_mw = 0.0);
};

/// Boundary and energy constraints for one dispatch interval:
/// initial power Q0 [MW], terminal power QT [MW], scheduled energy E_T [MWh]
/// over the horizon T [h]. The initial ramp is free; the solver picks it.
struct HourSchedule {
    double q0;
    double qt;
    double energy;
    double horizon;

    HourSchedule(double q0_mw, double qt_mw, double energy_mwh,
                 double horizon_hours = 1.0);
};

/// Price regime of the optimal trajectory.
///
/// General:    a > 0 and c > 0; hyperbolic solution with rate w = sqrt(a/c).
/// RampOnly:   a = 0; only ramping is priced; parabolic solution.
/// EnergyOnly: c = 0 (or w*T so large the solution is step-like); constant
///             power at the scheduled level with ideal steps at the ends.
enum class Regime { General, RampOnly, EnergyOnly };

/// Regime classification thresholds, in SI units.
inline constexpr double kPriceEpsilon = 1e-12;
/// Above this w*T the hyperbolic solution is numerically indistinguishable
/// from the step-to-schedule solution (double exp overflows near 709).
inline constexpr double kOmegaTMax = 500.0;

/// 2x2 linear system determining the Lagrange multiplier mu and the initial
/// ramp Qdot0 from the energy and terminal-power constraints:
///
///   [ energy_mu  energy_qdot ] [ mu    ]   [ energy_rhs ]
///   [ power_mu   power_qdot  ] [ Qdot0 ] = [ power_rhs  ]
///
/// The first row is the scheduled-energy constraint, the second the terminal
/// power constraint.
struct ParameterSystem {
    double energy_mu;    // A
    double energy_qdot;  // B
    double power_mu;     // C
    double power_qdot;   // D
    double energy_rhs;   // E_delta
    double power_rhs;    // Q_delta

    double det() const { return energy_mu * power_qdot - energy_qdot * power_mu; }
};

/// Solved optimal trajectory for one hour. Fully determines Q(t) on [0, T].
///
/// mu is the Lagrange multiplier including the must-take shift; lambda is the
/// raw multiplier (lambda = mu + a*Qz), kept for reporting only.
///
/// For the General regime the trajectory is evaluated in an endpoint-anchored
/// exponential basis
///
///   Q(t) = Q0 + k_fwd*(e^{-w t} - 1) + k_rev*e^{-w T}*(e^{w t} - 1)
///
/// which is algebraically identical to the cosh/sinh closed form but stays
/// well-conditioned for large w*T (no growing exponentials, endpoints pinned).
struct TrajectoryParams {
    Regime regime;
    double mu;        // $/MWh
    double lambda;    // $/MWh
    double qdot0;     // MW/h
    double omega;     // 1/h; 0 outside the General regime
    HourSchedule schedule;
    PriceSet prices;

    // cached evaluation basis (General regime; zero otherwise)
    double k_fwd;     // coefficient of e^{-w t}            [MW]
    double k_rev;     // coefficient of e^{-w (T-t)}        [MW]
    double k_mid;     // constant term -mu/2a (plateau)     [MW]
    double decay_t;   // e^{-w T}
};

/// Classify the price regime for a horizon (default one hour). Throws
/// DegeneratePrices when both a and c are below threshold.
Regime classify_regime(const PriceSet& prices, double horizon_hours = 1.0);

/// Build the 2x2 constraint system for the General or RampOnly regime.
/// Near w*T = 0 the hyperbolic entries lose precision to cancellation, so
/// they switch to series forms well before that point.
ParameterSystem build_parameter_system(const PriceSet& prices,
                                       const HourSchedule& sched, Regime regime);

/// Solve one dispatch hour: classify, solve for (mu, Qdot0), and package the
/// evaluation coefficients. Throws SingularSystem or DegeneratePrices.
TrajectoryParams solve_hour(const PriceSet& prices, const HourSchedule& sched);

/// Optimal power Q(t) [MW] at t in [0, T]. Throws OutOfDomain outside.
double eval_power(const TrajectoryParams& params, double t_hours);

/// Analytic ramp dQ/dt [MW/h]. For the EnergyOnly regime the boundary steps
/// are ideal (no duration), so the ramp is 0 everywhere on [0, T].
double eval_ramp(const TrajectoryParams& params, double t_hours);

/// Running energy integral E(t) = int_0^t Q [MWh]; E(T) equals the schedule.
double eval_energy(const TrajectoryParams& params, double t_hours);

namespace detail {
/// sinh(x) - x without cancellation near zero.
double sinh_minus_x(double x);
/// cosh(x) - 1 = 2 sinh^2(x/2); stable for all x.
double cosh_minus_one(double x);
/// e^x - 1 - x without cancellation near zero.
double expm1_minus_x(double x);
}  // namespace detail

}  // namespace rampopt
