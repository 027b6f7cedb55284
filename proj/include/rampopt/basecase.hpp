#pragma once

#include <array>

#include "rampopt/trajectory.hpp"

namespace rampopt {

/// Conventional dispatch profile: ramp to the scheduled level QE over the
/// first T/6 of the interval, hold, then ramp to QT over the last T/6.
/// (The 20-minute ramp window spanning the hour boundary, re-anchored so the
/// hour is self-contained.)
struct BaseProfile {
    double qe;      // scheduled load [MW]
    double qdot0;   // initial ramp 6(QE-Q0)/T [MW/h]
    double qdot_t;  // terminal ramp 6(QT-QE)/T [MW/h]
    std::array<std::pair<double, double>, 4> breakpoints;  // (t, Q)
    HourSchedule schedule;
};

/// QE = (6/5)(E_T/T - (Q0+QT)/12); the piecewise-linear profile through the
/// breakpoints then delivers exactly E_T.
BaseProfile build_base_profile(const HourSchedule& sched);

/// Piecewise-linear interpolation between the profile breakpoints.
double eval_base_power(const BaseProfile& profile, double t_hours);

}  // namespace rampopt
