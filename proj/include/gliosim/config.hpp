#ifndef GLIOSIM_CONFIG_HPP
#define GLIOSIM_CONFIG_HPP

#include <array>
#include <string>

#include "gliosim/grid.hpp"

namespace gliosim {

// Full simulation setup. Defaults reproduce the three-dimensional reference
// run: 50^3 points over [0,200]^3 mm, 100 steps over days 150..3500.
// Units are fixed by convention: lengths in mm, times in days, diffusion in
// mm^2/day, proliferation in 1/day. No implicit conversions anywhere.
struct SimConfig {
    // [model]
    double rho = 0.025;       // proliferation rate, 1/day
    double d_white = 0.13;    // white matter diffusivity, mm^2/day
    double d_gray = 0.013;    // gray matter diffusivity, mm^2/day
    double exp_tol = 1e-8;    // relative tolerance for exponential actions

    // [grid]
    int nx = 50;
    int ny = 50;
    int nz = 50;
    double h = 200.0 / 49.0;  // spacing, mm
    std::array<double, 3> origin{0.0, 0.0, 0.0};

    // [time]
    double t0 = 150.0;        // days
    double t_end = 3500.0;    // days
    int num_steps = 100;

    // [seed]
    std::array<double, 3> seed_center{102.0, 138.0, 96.0};  // mm
    double seed_amplitude = 0.1;
    double seed_width = 10.0;  // Gaussian sharpness, mm^-2

    // [imaging] intensity breakpoints, each band is (previous, value]
    int threshold_air = 1;     // intensity <= threshold_air        -> Air
    int threshold_white = 230; // air < intensity <= threshold_white -> WhiteMatter
    int threshold_gray = 240;  // white < intensity <= threshold_gray -> GrayMatter
    int threshold_max = 255;   // upper end of the intensity range; above gray -> Skull
    double slice_thickness = 1.0;  // mm per source slice, informational only

    // [output]
    int snapshot_every = 2;
    double front_threshold = 0.1;  // density level defining the tumor front

    Grid grid() const { return Grid(nx, ny, nz, h, origin); }
    double tau() const { return (t_end - t0) / num_steps; }

    // Throws data_error naming the offending key on any invariant violation.
    void validate() const;
};

// Plain-text config: one `key = value` per line, `#` comments, sections in
// square brackets. An empty file yields the defaults. Unknown keys and
// invariant violations are errors naming the key.
SimConfig load_config(const std::string& path);
SimConfig parse_config(const std::string& text, const std::string& origin_name = "<string>");
std::string serialize_config(const SimConfig& cfg);

// Named setups for the reference experiments: "paper-2d" (193x193 slice run),
// "paper-3d" (50^3 volume run), "bench-32" (32^3 timing run).
SimConfig preset_config(const std::string& name);

}  // namespace gliosim

#endif
