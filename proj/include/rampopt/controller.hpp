#pragma once

#include <vector>

#include "rampopt/trajectory.hpp"

namespace rampopt {

/// Partial-fraction coefficients of the s-domain optimal trajectory
/// (General regime), plus the per-step growth factor tau = e^{w t_s}:
///   K1/(s+w) + K2/s + K3/(s-w)
/// so Q(t) = K1 e^{-w t} + K2 + K3 e^{w t}, with K1+K2+K3 = Q0 and
/// w (K3-K1) = Qdot0.
struct ControllerCoefficients {
    double k1;  // MW, decaying (forward-time) component
    double k2;  // MW, scheduled-load plateau -mu/2a
    double k3;  // MW, growing (reverse-time) component
    double tau;
    double step_seconds;
};

enum class SampleMode { Sampled, EnergyCorrected };

/// Discrete dispatch sequence Q*(k), k = 0..N with N = T/t_s. Hold semantics
/// are zero-order-hold ramp: power moves linearly between consecutive samples.
struct DiscreteTrajectory {
    std::vector<double> samples;  // Q*(k) [MW]
    double step_seconds;
    SampleMode mode;

    int steps() const { return static_cast<int>(samples.size()) - 1; }
    /// Total delivered energy of the piecewise-linear hold [MWh].
    double trapezoid_energy() const;
};

/// Coefficients for the General regime at update interval t_s (seconds).
/// Throws WrongRegime outside General; BadStep if t_s does not divide T.
ControllerCoefficients make_coefficients(const TrajectoryParams& params,
                                         double step_seconds);

/// Sample the optimal trajectory every t_s seconds (closed-form sampling;
/// bit-exact with the continuous optimum, no recurrence accumulation).
///
/// EnergyCorrected mode shifts the interior samples so each step's
/// zero-order-hold-ramp energy matches the continuous energy increment as
/// closely as possible while the total matches exactly; with the endpoints
/// pinned the per-step equations are overdetermined by one, so the residual
/// is spread in least squares. Endpoints are never altered.
DiscreteTrajectory sample_dispatch(const TrajectoryParams& params,
                                   double step_seconds, SampleMode mode);

}  // namespace rampopt
