#include "gliosim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gliosim/errors.hpp"
#include "gliosim/grid.hpp"

namespace gliosim {

VelocityReadings theoretical_velocity(double p_w, double p_g, const SimConfig& cfg) {
    if (p_w < 0.0 || p_g < 0.0 || std::abs(p_w + p_g - 1.0) > 1e-9)
        throw std::invalid_argument("theoretical_velocity: fractions must be nonnegative and sum to 1");
    const double d_eff = p_w * cfg.d_white + p_g * cfg.d_gray;
    VelocityReadings v;
    v.v_kpp = 2.0 * std::sqrt(d_eff * cfg.rho);
    v.v_paper = 2.0 * std::sqrt(d_eff) * cfg.rho;
    return v;
}

double front_position(const ScalarField& u, int axis, double threshold,
                      const std::array<double, 3>& seed_center) {
    if (axis < 0 || axis > 2)
        throw std::invalid_argument("front_position: axis must be 0, 1, or 2");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("front_position: threshold must lie in (0, 1)");

    const Grid& g = u.grid;
    const int counts[3] = {g.nx, g.ny, g.nz};

    // Voxel line through the seed, parallel to the requested axis.
    int idx[3];
    for (int ax = 0; ax < 3; ++ax) {
        const long nearest = 1 + std::lround((seed_center[ax] - g.origin[ax]) / g.h);
        idx[ax] = static_cast<int>(std::clamp(nearest, 1L, static_cast<long>(counts[ax])));
    }

    const auto value_at = [&](int t) {
        int c[3] = {idx[0], idx[1], idx[2]};
        c[axis] = t;
        return u.values[static_cast<std::size_t>(global_index(c[0], c[1], c[2], g))];
    };
    const auto coord_at = [&](double t) { return g.origin[axis] + (t - 1.0) * g.h; };

    const int n = counts[axis];
    const int t0 = idx[axis];
    double best = 0.0;
    for (int dir : {+1, -1}) {
        // Outermost above-threshold voxel in this direction.
        const int last = dir > 0 ? n : 1;
        for (int t = last; (t - t0) * dir >= 0; t -= dir) {
            const double v = value_at(t);
            if (v < threshold) continue;
            double cross = static_cast<double>(t);
            const int tn = t + dir;
            if (tn >= 1 && tn <= n) {
                const double vn = value_at(tn);
                if (vn < threshold) cross += dir * (v - threshold) / (v - vn);
            }
            best = std::max(best, std::abs(coord_at(cross) - seed_center[axis]));
            break;
        }
    }
    return best;
}

double estimate_velocity(const std::vector<double>& times, const std::vector<double>& positions,
                         const FitWindow& window) {
    if (times.size() != positions.size())
        throw std::invalid_argument("estimate_velocity: times and positions differ in length");

    const std::size_t n = times.size();
    const std::size_t first = static_cast<std::size_t>(window.skip_leading * n);
    std::vector<double> t, r;
    for (std::size_t i = first; i < n; ++i) {
        if (positions[i] < window.r_min || positions[i] > window.r_max) continue;
        t.push_back(times[i]);
        r.push_back(positions[i]);
    }
    if (t.size() < 3)
        throw data_error("estimate_velocity: fewer than 3 samples inside the fit window");

    // Centered least squares: slope = cov(t, r) / var(t).
    const double m = static_cast<double>(t.size());
    double t_mean = 0.0, r_mean = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        t_mean += t[i];
        r_mean += r[i];
    }
    t_mean /= m;
    r_mean /= m;
    double cov = 0.0, var = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        cov += (t[i] - t_mean) * (r[i] - r_mean);
        var += (t[i] - t_mean) * (t[i] - t_mean);
    }
    if (var == 0.0)
        throw data_error("estimate_velocity: all usable samples share one time point");
    return cov / var;
}

}  // namespace gliosim
