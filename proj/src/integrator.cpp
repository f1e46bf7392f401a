#include "gliosim/integrator.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "gliosim/errors.hpp"
#include "gliosim/expact.hpp"
#include "gliosim/grid.hpp"
#include "gliosim/stencil.hpp"

namespace gliosim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double sq_dist(const std::array<double, 3>& p, const std::array<double, 3>& q) {
    const double dx = p[0] - q[0];
    const double dy = p[1] - q[1];
    const double dz = p[2] - q[2];
    return dx * dx + dy * dy + dz * dz;
}

}  // namespace

std::vector<double> seed_initial(const Grid& grid, const SimConfig& cfg) {
    if (!grid.contains(cfg.seed_center))
        throw data_error("seed center lies outside the computational domain");
    std::vector<double> u(static_cast<std::size_t>(grid.num_points()));
    std::int64_t v = 0;
    for (int k = 1; k <= grid.nz; ++k)
        for (int j = 1; j <= grid.ny; ++j)
            for (int i = 1; i <= grid.nx; ++i, ++v)
                u[v] = cfg.seed_amplitude *
                       std::exp(-cfg.seed_width * sq_dist(grid.point(i, j, k), cfg.seed_center));
    return u;
}

std::vector<double> seed_initial(const DiffusionField& d, const SimConfig& cfg) {
    std::vector<double> u = seed_initial(d.grid, cfg);
    for (std::size_t v = 0; v < u.size(); ++v)
        if (d.d[v] == 0.0) u[v] = 0.0;
    return u;
}

std::vector<double> step(const SparseOperator& a, const std::vector<double>& u,
                         double rho, double tau, double tol, int workers) {
    std::vector<double> g(u.size());
    a.apply(u, g, workers);
    for (std::size_t i = 0; i < u.size(); ++i)
        g[i] += rho * u[i] * (1.0 - u[i]);
    const std::vector<double> incr = phi1v(tau, a, g, tol, workers);
    std::vector<double> out = u;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += tau * incr[i];
    return out;
}

StepMetrics compute_metrics(int step, double time, const std::vector<double>& u,
                            const Grid& grid, const SimConfig& cfg) {
    StepMetrics m;
    m.step = step;
    m.time = time;
    double sum = 0.0;
    double max_u = u.empty() ? 0.0 : u[0];
    double min_u = max_u;
    double r2 = 0.0;
    for (std::size_t v = 0; v < u.size(); ++v) {
        sum += u[v];
        max_u = std::max(max_u, u[v]);
        min_u = std::min(min_u, u[v]);
        if (u[v] >= cfg.front_threshold) {
            const auto c = grid_coords(static_cast<std::int64_t>(v), grid);
            r2 = std::max(r2, sq_dist(grid.point(c[0], c[1], c[2]), cfg.seed_center));
        }
    }
    const double cell = grid.h * grid.h * grid.h;
    m.total_mass = cell * sum;
    m.max_density = max_u;
    m.min_density = min_u;
    m.radius = std::sqrt(r2);
    return m;
}

RunResult run(const SimConfig& cfg, const DiffusionField& d, std::vector<double> u0,
              int workers, const SnapshotSink& snapshot, const RangeWarning& on_range,
              const StepWatcher& on_step) {
    cfg.validate();
    const Grid& grid = d.grid;
    if (u0.size() != static_cast<std::size_t>(grid.num_points()))
        throw std::invalid_argument("run: initial state length does not match the grid");
    if (d.d.size() != u0.size())
        throw std::invalid_argument("run: diffusion field length does not match the grid");

    RunResult res;

    auto tic = Clock::now();
    const SparseOperator a = assemble_diffusion(d);
    res.timings.assemble_seconds = seconds_since(tic);

    const TimeGrid tg{cfg.t0, cfg.t_end, cfg.num_steps};
    const double tau = tg.tau();
    std::vector<double> u = std::move(u0);

    const auto emit = [&](int n, double time) {
        if (!snapshot) return;
        auto io_tic = Clock::now();
        snapshot(n, time, u);
        res.timings.io_seconds += seconds_since(io_tic);
    };

    res.metrics.reserve(static_cast<std::size_t>(cfg.num_steps) + 1);
    res.metrics.push_back(compute_metrics(0, tg.time(0), u, grid, cfg));
    emit(0, tg.time(0));

    for (int n = 1; n <= cfg.num_steps; ++n) {
        tic = Clock::now();
        u = step(a, u, cfg.rho, tau, cfg.exp_tol, workers);
        res.timings.step_seconds += seconds_since(tic);

        const StepMetrics m = compute_metrics(n, tg.time(n), u, grid, cfg);
        res.metrics.push_back(m);
        if (on_step) on_step(m);
        if (on_range && (m.min_density < -0.01 || m.max_density > 1.01))
            on_range(n, m.min_density, m.max_density);
        if (n % cfg.snapshot_every == 0 || n == cfg.num_steps)
            emit(n, tg.time(n));
    }

    res.u = std::move(u);
    return res;
}

}  // namespace gliosim
