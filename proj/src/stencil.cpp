#include "gliosim/stencil.hpp"

namespace gliosim {

SparseOperator assemble_diffusion(const DiffusionField& d) {
    const Grid& g = d.grid;
    const std::int64_t n = g.num_points();
    const double inv_h2 = 1.0 / (g.h * g.h);
    const std::int64_t sx = 1;
    const std::int64_t sy = g.nx;
    const std::int64_t sz = static_cast<std::int64_t>(g.nx) * g.ny;

    CsrBuilder builder(n);
    std::vector<std::pair<std::int32_t, double>> row;
    row.reserve(7);
    for (int k = 1; k <= g.nz; ++k) {
        for (int j = 1; j <= g.ny; ++j) {
            for (int i = 1; i <= g.nx; ++i) {
                std::int64_t v = global_index(i, j, k, g);
                double dv = d.d[static_cast<std::size_t>(v)];
                row.clear();
                if (dv != 0.0) {
                    double w = dv * inv_h2;
                    int neighbors = 0;
                    auto link = [&](bool exists, std::int64_t other) {
                        if (!exists) return;
                        row.emplace_back(static_cast<std::int32_t>(other), w);
                        ++neighbors;
                    };
                    link(i > 1, v - sx);
                    link(i < g.nx, v + sx);
                    link(j > 1, v - sy);
                    link(j < g.ny, v + sy);
                    link(k > 1, v - sz);
                    link(k < g.nz, v + sz);
                    row.emplace_back(static_cast<std::int32_t>(v), -neighbors * w);
                }
                builder.push_row(row);
            }
        }
    }
    return builder.finish();
}

void reaction(const std::vector<double>& u, double rho, std::vector<double>& out) {
    out.resize(u.size());
    for (std::size_t v = 0; v < u.size(); ++v) out[v] = rho * u[v] * (1.0 - u[v]);
}

std::vector<double> reaction(const std::vector<double>& u, double rho) {
    std::vector<double> out;
    reaction(u, rho, out);
    return out;
}

}  // namespace gliosim
