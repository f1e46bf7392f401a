#ifndef GLIOSIM_INTEGRATOR_HPP
#define GLIOSIM_INTEGRATOR_HPP

#include <functional>
#include <vector>

#include "gliosim/config.hpp"
#include "gliosim/fields.hpp"
#include "gliosim/sparse.hpp"

namespace gliosim {

/*
 * Exponential Euler integration of du/dt = A u + f(u), f(u) = rho u (1 - u):
 *     u_{n+1} = u_n + tau phi_1(tau A) (A u_n + f(u_n)).
 * The scheme is exact when f is zero (pure diffusion reduces to
 * u_{n+1} = exp(tau A) u_n) and first order in tau otherwise.
 */

struct TimeGrid {
    double t0 = 0.0;
    double t_end = 1.0;
    int num_steps = 1;  // must be >= 1

    double tau() const { return (t_end - t0) / num_steps; }
    // Rounds the last node to t_end exactly.
    double time(int n) const { return n >= num_steps ? t_end : t0 + n * tau(); }
};

struct StepMetrics {
    int step = 0;
    double time = 0.0;
    double total_mass = 0.0;   // cell volume times the sum of u
    double max_density = 0.0;
    double min_density = 0.0;  // tracked for range diagnostics, not part of the CSV
    double radius = 0.0;       // farthest voxel above the front threshold, mm from the seed
};

struct RunTimings {
    double assemble_seconds = 0.0;
    double step_seconds = 0.0;
    double io_seconds = 0.0;
};

struct RunResult {
    std::vector<StepMetrics> metrics;  // one record per time node, step 0 included
    std::vector<double> u;             // final state
    RunTimings timings;
};

// Gaussian seed u(x) = amplitude exp(-width |x - center|^2); width in 1/mm^2.
// The center must lie inside the grid box.
std::vector<double> seed_initial(const Grid& grid, const SimConfig& cfg);

// Same, then clamped to zero wherever the tissue does not diffuse (d = 0).
std::vector<double> seed_initial(const DiffusionField& d, const SimConfig& cfg);

// One exponential Euler step of length tau.
std::vector<double> step(const SparseOperator& a, const std::vector<double>& u,
                         double rho, double tau, double tol, int workers = 1);

StepMetrics compute_metrics(int step, double time, const std::vector<double>& u,
                            const Grid& grid, const SimConfig& cfg);

// Called after each stored snapshot step with the current state.
using SnapshotSink = std::function<void(int step, double time, const std::vector<double>& u)>;
// Called whenever the state leaves [-0.01, 1.01].
using RangeWarning = std::function<void(int step, double min_u, double max_u)>;
// Called once per completed step with its metrics.
using StepWatcher = std::function<void(const StepMetrics&)>;

// Assembles the operator once, advances num_steps steps, records metrics at
// every node and hands states to `snapshot` at step 0, every snapshot_every
// steps, and the final step.
RunResult run(const SimConfig& cfg, const DiffusionField& d, std::vector<double> u0,
              int workers = 1, const SnapshotSink& snapshot = {},
              const RangeWarning& on_range = {}, const StepWatcher& on_step = {});

}  // namespace gliosim

#endif
