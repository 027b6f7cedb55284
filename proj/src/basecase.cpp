#include "rampopt/basecase.hpp"

#include <string>

namespace rampopt {

BaseProfile build_base_profile(const HourSchedule& sched) {
    const double T = sched.horizon;
    const double qe =
        1.2 * (sched.energy / T - (sched.q0 + sched.qt) / 12.0);
    BaseProfile profile{
        qe,
        6.0 * (qe - sched.q0) / T,
        6.0 * (sched.qt - qe) / T,
        {{{0.0, sched.q0}, {T / 6.0, qe}, {5.0 * T / 6.0, qe}, {T, sched.qt}}},
        sched};
    return profile;
}

double eval_base_power(const BaseProfile& profile, double t) {
    const double T = profile.schedule.horizon;
    if (!(t >= 0.0 && t <= T))
        throw OutOfDomain("eval_base_power: t = " + std::to_string(t) +
                          " outside [0, " + std::to_string(T) + "]");
    for (std::size_t i = 1; i < profile.breakpoints.size(); ++i) {
        const auto& [t0, v0] = profile.breakpoints[i - 1];
        const auto& [t1, v1] = profile.breakpoints[i];
        if (t <= t1) {
            if (t1 == t0) return v1;
            return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
        }
    }
    return profile.breakpoints.back().second;
}

}  // namespace rampopt
