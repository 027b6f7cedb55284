#include "rampopt/trajectory.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rampopt {

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

PriceSet::PriceSet(double energy_price, double power_price, double ramping_price,
                   double must_take_mw)
    : energy(energy_price),
      power(power_price),
      ramping(ramping_price),
      must_take(must_take_mw) {
    if (!finite(energy) || !finite(power) || !finite(ramping) || !finite(must_take))
        throw InvalidInput("PriceSet: all fields must be finite");
    if (energy < 0.0 || power < 0.0 || ramping < 0.0)
        throw InvalidInput("PriceSet: marginal prices cannot be negative");
    if (must_take < 0.0)
        throw InvalidInput("PriceSet: must-take generation cannot be negative");
    if (energy == 0.0 && ramping == 0.0)
        throw DegeneratePrices("PriceSet: energy and ramping prices are both zero");
}

HourSchedule::HourSchedule(double q0_mw, double qt_mw, double energy_mwh,
                           double horizon_hours)
    : q0(q0_mw), qt(qt_mw), energy(energy_mwh), horizon(horizon_hours) {
    if (!finite(q0) || !finite(qt) || !finite(energy) || !finite(horizon))
        throw InvalidInput("HourSchedule: all fields must be finite");
    if (horizon <= 0.0) throw InvalidInput("HourSchedule: horizon must be positive");
    if (q0 < 0.0 || qt < 0.0)
        throw InvalidInput("HourSchedule: boundary powers cannot be negative");
    if (energy < 0.0) throw InvalidInput("HourSchedule: energy cannot be negative");
}

namespace detail {

double sinh_minus_x(double x) {
    const double ax = std::fabs(x);
    if (ax >= 0.25) return std::sinh(x) - x;
    // sinh x - x = x^3/6 * (1 + x^2/20 (1 + x^2/42 (1 + x^2/72 (1 + x^2/110))))
    const double x2 = x * x;
    double r = 1.0 + x2 / 110.0;
    r = 1.0 + x2 / 72.0 * r;
    r = 1.0 + x2 / 42.0 * r;
    r = 1.0 + x2 / 20.0 * r;
    return x * x2 / 6.0 * r;
}

double cosh_minus_one(double x) {
    const double s = std::sinh(0.5 * x);
    return 2.0 * s * s;
}

double expm1_minus_x(double x) {
    const double ax = std::fabs(x);
    if (ax >= 0.1) return std::expm1(x) - x;
    // e^x - 1 - x = x^2/2 (1 + x/3 (1 + x/4 (... )))
    double r = 1.0 + x / 12.0;
    for (int k = 11; k >= 3; --k) r = 1.0 + x / k * r;
    return 0.5 * x * x * r;
}

}  // namespace detail

Regime classify_regime(const PriceSet& prices, double horizon_hours) {
    if (horizon_hours <= 0.0)
        throw InvalidInput("classify_regime: horizon must be positive");
    const bool a_zero = prices.energy <= kPriceEpsilon;
    const bool c_zero = prices.ramping <= kPriceEpsilon;
    if (a_zero && c_zero)
        throw DegeneratePrices("classify_regime: energy and ramping prices both ~0");
    if (c_zero) return Regime::EnergyOnly;
    if (a_zero) return Regime::RampOnly;
    const double wT = std::sqrt(prices.energy / prices.ramping) * horizon_hours;
    if (wT > kOmegaTMax) return Regime::EnergyOnly;
    return Regime::General;
}

ParameterSystem build_parameter_system(const PriceSet& prices,
                                       const HourSchedule& sched, Regime regime) {
    const double T = sched.horizon;
    ParameterSystem sys{};
    if (regime == Regime::RampOnly) {
        const double c = prices.ramping;
        sys.energy_mu = T * T * T / (12.0 * c);
        sys.energy_qdot = T * T / 2.0;
        sys.power_mu = T * T / (4.0 * c);
        sys.power_qdot = T;
        sys.energy_rhs = sched.energy - sched.q0 * T;
        sys.power_rhs = sched.qt - sched.q0;
        return sys;
    }
    if (regime != Regime::General)
        throw WrongRegime("build_parameter_system: EnergyOnly has no 2x2 system");

    const double a = prices.energy;
    const double w = std::sqrt(a / prices.ramping);
    const double x = w * T;
    const double shm = detail::sinh_minus_x(x);   // sinh x - x
    const double chm = detail::cosh_minus_one(x); // cosh x - 1
    sys.energy_mu = shm / (2.0 * a * w);
    sys.energy_qdot = chm / (w * w);
    sys.power_mu = chm / (2.0 * a);
    sys.power_qdot = (shm + x) / w;  // sinh x / w
    // Delta forms keep the right-hand sides stable when cosh x ~ 1.
    sys.energy_rhs = (sched.energy - sched.q0 * T) - sched.q0 * shm / w;
    sys.power_rhs = (sched.qt - sched.q0) - sched.q0 * chm;
    return sys;
}

namespace {

struct GeneralSolve {
    double mu, qdot0, k_fwd, k_rev, k_mid, decay;
};

// Anchored coefficients from (mu, q0, qT): pins Q(0) and Q(T) exactly and
// stays conditioned for any w*T in (0, kOmegaTMax].
GeneralSolve anchor_coefficients(double mu, double a, double w,
                                 const HourSchedule& s) {
    GeneralSolve g{};
    g.mu = mu;
    g.k_mid = -mu / (2.0 * a);
    const double x = w * s.horizon;
    g.decay = std::exp(-x);
    const double one_minus_e = -std::expm1(-x);
    const double delta = (s.qt - s.q0) / one_minus_e;
    g.k_fwd = (s.q0 - g.k_mid - delta * g.decay) / (1.0 + g.decay);
    g.k_rev = g.k_fwd + delta;
    g.qdot0 = w * (g.k_rev * g.decay - g.k_fwd);
    return g;
}

GeneralSolve solve_general(const PriceSet& p, const HourSchedule& s) {
    const double a = p.energy;
    const double w = std::sqrt(a / p.ramping);
    const double x = w * s.horizon;

    if (x <= 1.0) {
        // Classic 2x2 solve; entries are series-stabilized and the system is
        // well conditioned at small w*T (det -> -T^4/24c).
        const ParameterSystem sys =
            build_parameter_system(p, s, Regime::General);
        const double ad = sys.energy_mu * sys.power_qdot;
        const double bc = sys.energy_qdot * sys.power_mu;
        const double det = ad - bc;
        if (std::fabs(det) <=
            1e3 * std::numeric_limits<double>::epsilon() *
                (std::fabs(ad) + std::fabs(bc)))
            throw SingularSystem("solve_hour: parameter system is singular");
        const double mu =
            (sys.power_qdot * sys.energy_rhs - sys.energy_qdot * sys.power_rhs) / det;
        GeneralSolve g = anchor_coefficients(mu, a, w, s);
        // Keep the directly-solved initial ramp; it is identical to the
        // anchored one up to rounding but matches the 2x2 system verbatim.
        g.qdot0 = (sys.energy_mu * sys.power_rhs - sys.power_mu * sys.energy_rhs) / det;
        return g;
    }

    // Large w*T: the raw 2x2 system in (mu, Qdot0) has condition ~ e^{wT},
    // so solve the same constraints in the anchored basis instead.
    //   Q(0)=Q0, Q(T)=QT, int Q = E_T with unknowns (k_fwd, k_mid, k_rev).
    const double T = s.horizon;
    const double e = std::exp(-x);
    const double one_minus_e = -std::expm1(-x);
    const double len = one_minus_e / w;  // int_0^T e^{-w t} dt
    const double denom = T - 2.0 * len / (1.0 + e);  // T - (2/w) tanh(x/2) > 0
    if (!(denom > 0.0))
        throw SingularSystem("solve_hour: anchored system degenerate");
    const double delta = (s.qt - s.q0) / one_minus_e;
    const double k_mid =
        (s.energy + delta * len - 2.0 * len * (s.q0 + delta) / (1.0 + e)) / denom;
    return anchor_coefficients(-2.0 * a * k_mid, a, w, s);
}

}  // namespace

TrajectoryParams solve_hour(const PriceSet& prices, const HourSchedule& sched) {
    const Regime regime = classify_regime(prices, sched.horizon);
    TrajectoryParams params{regime, 0.0, 0.0, 0.0, 0.0, sched, prices,
                            0.0, 0.0, 0.0, 0.0};

    switch (regime) {
    case Regime::EnergyOnly: {
        params.mu = -2.0 * prices.energy * sched.energy / sched.horizon;
        params.k_mid = sched.energy / sched.horizon;  // plateau level
        break;
    }
    case Regime::RampOnly: {
        const ParameterSystem sys =
            build_parameter_system(prices, sched, Regime::RampOnly);
        const double det = sys.det();  // -T^4/24c, never ~0 for valid input
        if (det == 0.0)
            throw SingularSystem("solve_hour: ramp-only system is singular");
        params.mu =
            (sys.power_qdot * sys.energy_rhs - sys.energy_qdot * sys.power_rhs) / det;
        params.qdot0 =
            (sys.energy_mu * sys.power_rhs - sys.power_mu * sys.energy_rhs) / det;
        break;
    }
    case Regime::General: {
        const GeneralSolve g = solve_general(prices, sched);
        params.mu = g.mu;
        params.qdot0 = g.qdot0;
        params.omega = std::sqrt(prices.energy / prices.ramping);
        params.k_fwd = g.k_fwd;
        params.k_rev = g.k_rev;
        params.k_mid = g.k_mid;
        params.decay_t = g.decay;
        break;
    }
    }
    params.lambda = params.mu + prices.energy * prices.must_take;
    return params;
}

namespace {

void check_domain(const TrajectoryParams& p, double t) {
    if (!(t >= 0.0 && t <= p.schedule.horizon))
        throw OutOfDomain("eval: t = " + std::to_string(t) + " outside [0, " +
                          std::to_string(p.schedule.horizon) + "]");
}

}  // namespace

double eval_power(const TrajectoryParams& p, double t) {
    check_domain(p, t);
    switch (p.regime) {
    case Regime::General: {
        const double w = p.omega;
        return p.schedule.q0 + p.k_fwd * std::expm1(-w * t) +
               p.k_rev * p.decay_t * std::expm1(w * t);
    }
    case Regime::RampOnly: {
        const double accel = p.mu / (4.0 * p.prices.ramping);
        return (accel * t + p.qdot0) * t + p.schedule.q0;
    }
    case Regime::EnergyOnly:
        // Ideal steps live exactly at the boundary instants.
        if (t == 0.0) return p.schedule.q0;
        if (t == p.schedule.horizon) return p.schedule.qt;
        return p.k_mid;
    }
    return 0.0;  // unreachable
}

double eval_ramp(const TrajectoryParams& p, double t) {
    check_domain(p, t);
    switch (p.regime) {
    case Regime::General: {
        const double w = p.omega;
        const double T = p.schedule.horizon;
        return w * (p.k_rev * std::exp(-w * (T - t)) - p.k_fwd * std::exp(-w * t));
    }
    case Regime::RampOnly:
        return p.mu / (2.0 * p.prices.ramping) * t + p.qdot0;
    case Regime::EnergyOnly:
        return 0.0;
    }
    return 0.0;  // unreachable
}

double eval_energy(const TrajectoryParams& p, double t) {
    check_domain(p, t);
    switch (p.regime) {
    case Regime::General: {
        const double w = p.omega;
        return p.schedule.q0 * t -
               p.k_fwd * detail::expm1_minus_x(-w * t) / w +
               p.k_rev * p.decay_t * detail::expm1_minus_x(w * t) / w;
    }
    case Regime::RampOnly: {
        const double accel = p.mu / (4.0 * p.prices.ramping);
        return ((accel / 3.0 * t + 0.5 * p.qdot0) * t + p.schedule.q0) * t;
    }
    case Regime::EnergyOnly:
        return p.schedule.energy * (t / p.schedule.horizon);
    }
    return 0.0;  // unreachable
}

}  // namespace rampopt
