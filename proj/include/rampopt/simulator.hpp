#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rampopt/controller.hpp"
#include "rampopt/cost.hpp"
#include "rampopt/trajectory.hpp"

namespace rampopt {

/// Prices and schedule for one simulated hour.
struct HourInput {
    PriceSet prices;
    double q0;      // MW; ignored for hours > 0 when chaining is enabled
    double qt;      // MW
    double energy;  // MWh
};

/// Gaussian schedule-error model (MW).
struct ErrorModel {
    double mean_mw = 0.0;
    double std_mw = 0.0;
};

/// Multi-hour scenario. The seed fully determines every error draw; hour k
/// uses substream k, so results do not depend on evaluation order.
struct ScenarioConfig {
    std::vector<HourInput> hours;
    ErrorModel error;
    std::uint64_t seed = 0;
    double step_seconds = 300.0;
    SampleMode mode = SampleMode::Sampled;
    bool chain_initial_power = false;  // hour k+1 starts from hour k's last sample
    double horizon_hours = 1.0;
};

/// Per-hour accounting. savings = cost_base - cost_discrete.
/// carried_error is the energy [MWh] still owed after the hour (scheduled
/// minus delivered); it is added to the next hour's scheduled energy.
struct HourResult {
    int hour;
    double cost_optimal;
    double cost_base;
    double cost_discrete;
    double savings;
    double energy_delivered;  // MWh
    double carried_error;     // MWh
};

/// Simulate every hour in order: draw the schedule error, fold in the energy
/// carried over from the previous hour, solve, sample the dispatch, and book
/// the three costs. Solver failures rethrow as SimulationError with the hour
/// index attached.
std::vector<HourResult> run_scenario(const ScenarioConfig& config);

/// Time series sorted in descending order (stable ties).
struct DurationCurve {
    std::vector<double> values;
};

DurationCurve duration_curve(std::span<const double> values);

/// Total savings of the scenario re-run with every hour's ramping price
/// scaled by each factor.
std::vector<std::pair<double, double>> sensitivity_sweep(
    const ScenarioConfig& config, std::span<const double> c_factors);

}  // namespace rampopt
