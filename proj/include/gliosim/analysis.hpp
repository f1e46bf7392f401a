#ifndef GLIOSIM_ANALYSIS_HPP
#define GLIOSIM_ANALYSIS_HPP

#include <array>
#include <vector>

#include "gliosim/config.hpp"
#include "gliosim/fields.hpp"

namespace gliosim {

/*
 * Traveling-wave diagnostics. A logistic reaction-diffusion front moves
 * asymptotically at 2 sqrt(D rho); the literature also circulates the variant
 * 2 sqrt(D) rho, so both are reported and the caller picks.
 */

struct VelocityReadings {
    double v_kpp = 0.0;    // 2 sqrt(D_eff rho)
    double v_paper = 0.0;  // 2 sqrt(D_eff) rho
};

// Effective medium D_eff = p_w D_w + p_g D_g; fractions must be nonnegative
// and sum to one.
VelocityReadings theoretical_velocity(double p_w, double p_g, const SimConfig& cfg);

// Distance from seed_center to the farthest u >= threshold crossing along the
// grid line through the seed parallel to `axis` (0 = x, 1 = y, 2 = z). The
// crossing is placed by linear interpolation between the outermost voxel
// still above threshold and its neighbor below; 0 if the line never reaches
// the threshold.
double front_position(const ScalarField& u, int axis, double threshold,
                      const std::array<double, 3>& seed_center);

struct FitWindow {
    double r_min = 0.0;            // drop samples closer to the seed than this
    double r_max = 1e300;          // drop samples closer to the boundary than this allows
    double skip_leading = 0.2;     // drop this fraction of early samples outright
};

// Least-squares slope of position vs. time over the window. Needs at least
// three usable samples.
double estimate_velocity(const std::vector<double>& times, const std::vector<double>& positions,
                         const FitWindow& window);

}  // namespace gliosim

#endif
