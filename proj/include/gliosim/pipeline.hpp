#ifndef GLIOSIM_PIPELINE_HPP
#define GLIOSIM_PIPELINE_HPP

#include <string>
#include <vector>

#include "gliosim/analysis.hpp"
#include "gliosim/config.hpp"
#include "gliosim/fields.hpp"
#include "gliosim/integrator.hpp"

namespace gliosim {

// Constant-coefficient fields for runs without imaging data.
DiffusionField uniform_diffusion(const Grid& grid, double d);
MaterialVolume uniform_labels(const Grid& grid, Material m);

// Seeds the initial state from cfg, runs the simulation, and writes
// snapshot_NNNN.vtk (with the material array when `materials` is given) plus
// metrics.csv into out_dir, creating the directory if needed.
RunResult run_to_directory(const SimConfig& cfg, const DiffusionField& d,
                           const MaterialVolume* materials, const std::string& out_dir,
                           int workers = 1, const StepWatcher& on_step = {},
                           const RangeWarning& on_range = {});

struct WaveSpeedResult {
    VelocityReadings theory;  // for pure white matter
    double measured = 0.0;
    double deviation = 0.0;  // |measured - v_kpp| / v_kpp
};

// Homogeneous-white-matter front-speed measurement on a thin slab (~160 mm
// at cfg.h spacing): seeds near one end, tracks the interpolated front every
// step, and fits its position over the window at least 5h away from both the
// seed and the far boundary, skipping the early relaxation transient.
// Requires rho > 0.
WaveSpeedResult wave_speed_experiment(const SimConfig& cfg, int workers = 1);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

// Wave-speed agreement (skipped when rho = 0) plus conservation and
// stability properties of the pure-diffusion operator, run on a small
// internal grid at cfg's spacing and coefficients.
ValidationReport validate_suite(const SimConfig& cfg, int workers = 1);

}  // namespace gliosim

#endif
