#include "rampopt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tridiag.hpp"

namespace rampopt {

namespace {

struct Workspace {
    int n;        // intervals
    double h;     // grid spacing [h]
    double q0, qt, qz, a, b, c;
    double energy_rhs;  // required h * sum of interior values
};

// One KKT solve under a fixed ramp-sign pattern (signs[j] for interval j).
std::vector<double> solve_fixed_signs(const Workspace& ws,
                                      const std::vector<int>& signs) {
    const int m = ws.n - 1;  // interior unknowns
    std::vector<double> diag(m), lower(m), upper(m), rhs(m);
    const double couple = 2.0 * ws.c / ws.h;
    for (int i = 1; i <= m; ++i) {
        const double sign_jump =
            ws.b * static_cast<double>(signs[i - 1] - signs[i]);
        diag[i - 1] = 2.0 * ws.a * ws.h + sign_jump + 2.0 * couple;
        lower[i - 1] = -couple;
        upper[i - 1] = -couple;
        rhs[i - 1] = ws.a * ws.h * ws.qz + sign_jump * ws.qz;
    }
    rhs.front() += couple * ws.q0;
    rhs.back() += couple * ws.qt;

    auto base = detail::solve_tridiagonal(diag, lower, upper, rhs);
    auto homog = detail::solve_tridiagonal(diag, lower, upper,
                                           std::vector<double>(m, ws.h));
    const double sum_base = std::accumulate(base.begin(), base.end(), 0.0);
    const double sum_homog = std::accumulate(homog.begin(), homog.end(), 0.0);
    if (sum_homog == 0.0) throw SingularKKT("oracle: degenerate border row");
    const double nu = (ws.h * sum_base - ws.energy_rhs) / (ws.h * sum_homog);

    std::vector<double> grid(ws.n + 1);
    grid.front() = ws.q0;
    grid.back() = ws.qt;
    for (int i = 0; i < m; ++i) grid[i + 1] = base[i] - nu * homog[i];
    return grid;
}

std::vector<int> ramp_signs(const std::vector<double>& grid,
                            const std::vector<int>& previous, double deadband) {
    std::vector<int> signs(grid.size() - 1);
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
        const double step = grid[j + 1] - grid[j];
        if (std::fabs(step) <= deadband)
            signs[j] = previous.empty() ? 0 : previous[j];
        else
            signs[j] = step > 0.0 ? 1 : -1;
    }
    return signs;
}

double evaluate_cost(const Workspace& ws, const std::vector<double>& grid) {
    double cost = 0.0;
    for (int k = 0; k <= ws.n; ++k) {
        const double weight = (k == 0 || k == ws.n) ? 0.5 * ws.h : ws.h;
        cost += weight * ws.a * (grid[k] - ws.qz) * grid[k];
    }
    for (int j = 0; j < ws.n; ++j) {
        const double step = grid[j + 1] - grid[j];
        cost += ws.b * std::fabs(step) * (0.5 * (grid[j] + grid[j + 1]) - ws.qz) +
                ws.c * step * step / ws.h;
    }
    return cost;
}

}  // namespace

OracleSolution solve_numeric(const PriceSet& prices, const HourSchedule& sched,
                             int steps) {
    if (steps < 8) throw InvalidInput("solve_numeric: need at least 8 steps");
    Workspace ws{};
    ws.n = steps;
    ws.h = sched.horizon / steps;
    ws.q0 = sched.q0;
    ws.qt = sched.qt;
    ws.qz = prices.must_take;
    ws.a = prices.energy;
    ws.b = prices.power;
    ws.c = prices.ramping;
    ws.energy_rhs = sched.energy - 0.5 * ws.h * (ws.q0 + ws.qt);

    const std::vector<int> no_signs(steps, 0);
    Workspace unsigned_ws = ws;
    unsigned_ws.b = 0.0;
    std::vector<double> grid = solve_fixed_signs(unsigned_ws, no_signs);
    int iterations = 0;

    if (ws.b > 0.0) {
        const double scale = std::max(
            {std::fabs(ws.q0), std::fabs(ws.qt),
             std::fabs(*std::max_element(grid.begin(), grid.end())), 1.0});
        const double deadband = 1e-9 * scale;
        std::vector<int> signs = ramp_signs(grid, {}, deadband);
        bool settled = false;
        for (iterations = 1; iterations <= 10; ++iterations) {
            grid = solve_fixed_signs(ws, signs);
            std::vector<int> next = ramp_signs(grid, signs, deadband);
            if (next == signs) {
                settled = true;
                break;
            }
            signs = std::move(next);
        }
        if (!settled)
            throw NoConvergence("solve_numeric: ramp-sign pattern cycled");
    }

    OracleSolution out{};
    out.grid = std::move(grid);
    out.cost = evaluate_cost(ws, out.grid);
    double trapezoid = 0.0;
    for (int k = 0; k < ws.n; ++k)
        trapezoid += 0.5 * ws.h * (out.grid[k] + out.grid[k + 1]);
    out.energy_gap = trapezoid - sched.energy;
    out.endpoint_gap0 = out.grid.front() - sched.q0;
    out.endpoint_gap_t = out.grid.back() - sched.qt;
    out.sign_iterations = iterations;
    return out;
}

double compare(const CostBreakdown& analytic, const OracleSolution& numeric) {
    return std::fabs(analytic.total - numeric.cost) /
           std::max(1.0, std::fabs(numeric.cost));
}

}  // namespace rampopt
