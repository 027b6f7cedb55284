#include "rampopt/cost.hpp"

#include <array>
#include <cmath>

namespace rampopt {

namespace {

// Exact integral of b (Q - Qz) |dQ/dt| over a stretch with one ramp sign:
// the integrand is the derivative of b (Q^2/2 - Qz Q), so only the endpoint
// values matter.
double power_piece(double b, double qz, double q_start, double q_end) {
    const double sgn = (q_end > q_start) ? 1.0 : (q_end < q_start ? -1.0 : 0.0);
    return sgn * b *
           (0.5 * (q_end * q_end - q_start * q_start) - qz * (q_end - q_start));
}

struct QuadraticIntegrals {
    double q;    // int Q dt
    double q2;   // int Q^2 dt
    double dq2;  // int Qdot^2 dt
};

// Exponential-basis closed forms; accurate for w*T down to ~1e-3.
QuadraticIntegrals general_integrals_exp(const TrajectoryParams& p) {
    const double w = p.omega;
    const double T = p.schedule.horizon;
    const double x = w * T;
    const double e = p.decay_t;
    const double one_minus_e = -std::expm1(-x);
    const double one_minus_e2 = -std::expm1(-2.0 * x);
    const double kf = p.k_fwd, kr = p.k_rev, k2 = p.k_mid;

    QuadraticIntegrals out{};
    out.q = k2 * T + (kf + kr) * one_minus_e / w;
    const double sum_sq = (kf * kf + kr * kr) * one_minus_e2 / (2.0 * w);
    const double cross = 2.0 * kf * kr * e * T;
    out.q2 = (sum_sq + cross) + 2.0 * k2 * out.q - k2 * k2 * T;
    out.dq2 = w * w * ((sum_sq - cross));
    return out;
}

// Quartic Taylor of the trajectory for tiny w*T, where the exponential basis
// coefficients blow up as 1/(w T) and their quadratic combinations cancel
// catastrophically. Truncation is O((w T)^4) relative.
QuadraticIntegrals general_integrals_poly(const TrajectoryParams& p) {
    const double w = p.omega;
    const double T = p.schedule.horizon;
    const double sum = p.k_fwd + p.k_rev * p.decay_t;
    const double diff = p.k_rev * p.decay_t - p.k_fwd;
    const std::array<double, 5> c{p.schedule.q0, w * diff, w * w * sum / 2.0,
                                  w * w * w * diff / 6.0,
                                  w * w * w * w * sum / 24.0};
    const std::array<double, 4> d{c[1], 2.0 * c[2], 3.0 * c[3], 4.0 * c[4]};

    QuadraticIntegrals out{};
    double tpow = T;
    for (std::size_t i = 0; i < c.size(); ++i) {
        out.q += c[i] * tpow / static_cast<double>(i + 1);
        tpow *= T;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            out.q2 += c[i] * c[j] * std::pow(T, static_cast<double>(i + j + 1)) /
                      static_cast<double>(i + j + 1);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            out.dq2 += d[i] * d[j] * std::pow(T, static_cast<double>(i + j + 1)) /
                       static_cast<double>(i + j + 1);
    return out;
}

constexpr double kPolyCrossover = 1e-3;  // w*T below which the Taylor path runs

// Interior ramp-sign change of the General trajectory, if any. The ramp is
// w (k_rev e^{-w(T-t)} - k_fwd e^{-w t}), whose single zero is at
// t = T/2 + ln(k_fwd/k_rev)/(2w).
std::optional<double> general_sign_change(const TrajectoryParams& p) {
    if (!(p.k_fwd * p.k_rev > 0.0)) return std::nullopt;
    const double T = p.schedule.horizon;
    const double tc = 0.5 * T + std::log(p.k_fwd / p.k_rev) / (2.0 * p.omega);
    if (tc > 0.0 && tc < T) return tc;
    return std::nullopt;
}

std::optional<double> ramp_only_sign_change(const TrajectoryParams& p) {
    const double curv = p.mu / (4.0 * p.prices.ramping);
    if (curv == 0.0) return std::nullopt;
    const double tc = -p.qdot0 / (2.0 * curv);
    if (tc > 0.0 && tc < p.schedule.horizon) return tc;
    return std::nullopt;
}

}  // namespace

CostBreakdown optimal_cost(const TrajectoryParams& params) {
    const PriceSet& p = params.prices;
    const HourSchedule& s = params.schedule;
    CostBreakdown out{0.0, 0.0, 0.0, 0.0, std::nullopt};

    switch (params.regime) {
    case Regime::EnergyOnly: {
        out.energy_cost =
            p.energy * s.energy * (s.energy / s.horizon - p.must_take);
        break;
    }
    case Regime::RampOnly: {
        const double curv = params.mu / (4.0 * p.ramping);
        const double qd0 = params.qdot0;
        const double T = s.horizon;
        out.ramping_cost =
            p.ramping *
            ((4.0 * curv * curv * T / 3.0 + 2.0 * curv * qd0) * T + qd0 * qd0) * T;
        out.sign_split_at = ramp_only_sign_change(params);
        break;
    }
    case Regime::General: {
        const QuadraticIntegrals integrals =
            (params.omega * s.horizon < kPolyCrossover)
                ? general_integrals_poly(params)
                : general_integrals_exp(params);
        out.energy_cost = p.energy * (integrals.q2 - p.must_take * integrals.q);
        out.ramping_cost = p.ramping * integrals.dq2;
        out.sign_split_at = general_sign_change(params);
        break;
    }
    }

    if (params.regime != Regime::EnergyOnly) {
        if (out.sign_split_at) {
            const double q_mid = eval_power(params, *out.sign_split_at);
            out.power_cost = power_piece(p.power, p.must_take, s.q0, q_mid) +
                             power_piece(p.power, p.must_take, q_mid, s.qt);
        } else {
            out.power_cost = power_piece(p.power, p.must_take, s.q0, s.qt);
        }
    }
    out.total = out.energy_cost + out.power_cost + out.ramping_cost;
    return out;
}

CostBreakdown base_case_cost(const PriceSet& prices, const HourSchedule& sched) {
    const double a = prices.energy, b = prices.power, c = prices.ramping;
    const double qz = prices.must_take;
    const double T = sched.horizon;
    const double q0 = sched.q0, qt = sched.qt;
    const double qe = 1.2 * (sched.energy / T - (q0 + qt) / 12.0);

    CostBreakdown out{0.0, 0.0, 0.0, 0.0, std::nullopt};
    out.energy_cost =
        a * T / 18.0 * (qt * qt + qt * qe + 14.0 * qe * qe + qe * q0 + q0 * q0) -
        a * T / 12.0 * (qt + 10.0 * qe + q0) * qz;
    out.power_cost = std::fabs(0.5 * b * (qe - q0)) * (qe + q0 - 2.0 * qz) +
                     std::fabs(0.5 * b * (qt - qe)) * (qt + qe - 2.0 * qz);
    out.ramping_cost =
        6.0 * c / T *
        (qt * qt - 2.0 * qt * qe + 2.0 * qe * qe - 2.0 * q0 * qe + q0 * q0);
    out.total = out.energy_cost + out.power_cost + out.ramping_cost;
    return out;
}

double discrete_cost(const DiscreteTrajectory& traj, const PriceSet& prices) {
    if (traj.samples.size() < 2)
        throw EmptyTrajectory("discrete_cost: need at least two samples");
    const double a = prices.energy, b = prices.power, c = prices.ramping;
    const double qz = prices.must_take;
    const double ts = traj.step_seconds / 3600.0;

    double total = 0.0;
    for (std::size_t k = 0; k + 1 < traj.samples.size(); ++k) {
        const double q = traj.samples[k];
        const double qn = traj.samples[k + 1];
        total += a * ts / 4.0 *
                     (q * q + 2.0 * q * qn + qn * qn - 2.0 * qz * (q + qn)) +
                 0.5 * std::fabs(b * (qn - q)) * (qn + q - 2.0 * qz) +
                 c / ts * (qn - q) * (qn - q);
    }
    return total;
}

SecondVariation second_variation_terms(const PriceSet& prices) {
    return SecondVariation{2.0 * prices.energy, prices.power, 2.0 * prices.ramping};
}

bool is_minimizer(const PriceSet& prices) {
    const SecondVariation sv = second_variation_terms(prices);
    return sv.alpha > 0.0 && sv.gamma > 0.0;
}

}  // namespace rampopt
