#include "rampopt/controller.hpp"

#include <cmath>
#include <numeric>

#include "tridiag.hpp"

namespace rampopt {

namespace {

constexpr double kSecondsPerHour = 3600.0;

// Number of whole steps in the horizon; BadStep unless t_s divides T.
int step_count(double horizon_hours, double step_seconds) {
    if (!(step_seconds > 0.0))
        throw BadStep("update interval must be positive");
    const double step_hours = step_seconds / kSecondsPerHour;
    const double ratio = horizon_hours / step_hours;
    const auto n = static_cast<long long>(std::llround(ratio));
    if (n < 1 || std::fabs(n * step_hours - horizon_hours) > 1e-9 * horizon_hours)
        throw BadStep("update interval does not divide the horizon");
    return static_cast<int>(n);
}

}  // namespace

double DiscreteTrajectory::trapezoid_energy() const {
    const double h = step_seconds / kSecondsPerHour;
    double total = 0.0;
    for (std::size_t k = 1; k < samples.size(); ++k)
        total += 0.5 * h * (samples[k - 1] + samples[k]);
    return total;
}

ControllerCoefficients make_coefficients(const TrajectoryParams& params,
                                         double step_seconds) {
    if (params.regime != Regime::General)
        throw WrongRegime("make_coefficients: requires the General regime");
    step_count(params.schedule.horizon, step_seconds);
    const double a = params.prices.energy;
    const double w = params.omega;
    const double half_q0 = 0.5 * params.schedule.q0;
    const double half_slope = params.qdot0 / (2.0 * w);
    const double quarter_mu = params.mu / (4.0 * a);
    return ControllerCoefficients{
        half_q0 - half_slope + quarter_mu,
        -params.mu / (2.0 * a),
        half_q0 + half_slope + quarter_mu,
        std::exp(w * step_seconds / kSecondsPerHour),
        step_seconds};
}

namespace {

// Least-squares interior shifts: each step's trapezoid energy should match
// the continuous increment, total energy must match exactly. With endpoints
// pinned there is one fewer unknown than equations, so minimize the sum of
// squared per-step mismatches subject to the exact-total constraint.
void apply_energy_correction(const TrajectoryParams& params,
                             DiscreteTrajectory& traj) {
    const int n = traj.steps();
    if (n < 2)
        throw BadStep("EnergyCorrected: need at least two steps in the horizon");
    const double h = traj.step_seconds / kSecondsPerHour;
    const double T = params.schedule.horizon;

    std::vector<double> mismatch(n);  // continuous increment minus trapezoid
    double prev_energy = 0.0;
    for (int k = 0; k < n; ++k) {
        const double t_next = (k + 1 == n) ? T : T * (k + 1) / n;
        const double e_next = eval_energy(params, t_next);
        mismatch[k] = (e_next - prev_energy) -
                      0.5 * h * (traj.samples[k] + traj.samples[k + 1]);
        prev_energy = e_next;
    }

    // Normal equations: tridiag(1,2,1) * shift = (2/h)(eps_{i-1}+eps_i) - nu.
    const int m = n - 1;
    std::vector<double> diag(m, 2.0), off(m, 1.0), rhs(m), ones(m, 1.0);
    for (int i = 0; i < m; ++i)
        rhs[i] = 2.0 / h * (mismatch[i] + mismatch[i + 1]);
    auto base = detail::solve_tridiagonal(diag, off, off, rhs);
    auto homog = detail::solve_tridiagonal(diag, off, off, ones);

    const double target = std::accumulate(mismatch.begin(), mismatch.end(), 0.0) / h;
    const double sum_base = std::accumulate(base.begin(), base.end(), 0.0);
    const double sum_homog = std::accumulate(homog.begin(), homog.end(), 0.0);
    const double nu = (sum_base - target) / sum_homog;
    for (int i = 0; i < m; ++i) traj.samples[i + 1] += base[i] - nu * homog[i];
}

}  // namespace

DiscreteTrajectory sample_dispatch(const TrajectoryParams& params,
                                   double step_seconds, SampleMode mode) {
    const int n = step_count(params.schedule.horizon, step_seconds);
    DiscreteTrajectory traj{{}, step_seconds, mode};
    traj.samples.reserve(n + 1);
    const double T = params.schedule.horizon;
    for (int k = 0; k <= n; ++k)
        traj.samples.push_back(eval_power(params, k == n ? T : T * k / n));
    if (mode == SampleMode::EnergyCorrected)
        apply_energy_correction(params, traj);
    return traj;
}

}  // namespace rampopt
