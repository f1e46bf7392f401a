#ifndef GLIOSIM_GRID_HPP
#define GLIOSIM_GRID_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gliosim {

// Regular axis-aligned lattice. Lattice point (i,j,k), 1-based, sits at
// origin + ((i-1)h, (j-1)h, (k-1)h). A 2D grid is a 3D grid with nz = 1.
// Units are mm throughout.
struct Grid {
    int nx = 2;
    int ny = 2;
    int nz = 1;
    double h = 1.0;  // spacing, identical on all axes
    std::array<double, 3> origin{0.0, 0.0, 0.0};

    Grid() = default;
    Grid(int nx_, int ny_, int nz_, double h_, std::array<double, 3> origin_ = {0, 0, 0})
        : nx(nx_), ny(ny_), nz(nz_), h(h_), origin(origin_) {
        if (nx < 1 || ny < 1 || nz < 1)
            throw std::invalid_argument("Grid: point counts must be >= 1");
        if (!(h > 0.0))
            throw std::invalid_argument("Grid: spacing h must be positive");
    }

    std::int64_t num_points() const {
        return static_cast<std::int64_t>(nx) * ny * nz;
    }

    std::array<double, 3> point(int i, int j, int k) const {
        return {origin[0] + (i - 1) * h, origin[1] + (j - 1) * h, origin[2] + (k - 1) * h};
    }

    // Physical extent along each axis: (n-1)*h.
    std::array<double, 3> extent() const {
        return {(nx - 1) * h, (ny - 1) * h, (nz - 1) * h};
    }

    bool contains(const std::array<double, 3>& p) const {
        for (int a = 0; a < 3; ++a) {
            double lo = origin[a];
            double hi = origin[a] + extent()[a];
            if (p[a] < lo || p[a] > hi) return false;
        }
        return true;
    }
};

// Row-major flattening, x fastest: (i,j,k) 1-based -> 0-based flat index.
inline std::int64_t global_index(int i, int j, int k, const Grid& g) {
    if (i < 1 || i > g.nx || j < 1 || j > g.ny || k < 1 || k > g.nz)
        throw std::out_of_range("global_index: (" + std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k) + ") outside grid " + std::to_string(g.nx) +
                                "x" + std::to_string(g.ny) + "x" + std::to_string(g.nz));
    return (i - 1) + static_cast<std::int64_t>(j - 1) * g.nx +
           static_cast<std::int64_t>(k - 1) * g.nx * g.ny;
}

// Inverse of global_index.
inline std::array<int, 3> grid_coords(std::int64_t flat, const Grid& g) {
    if (flat < 0 || flat >= g.num_points())
        throw std::out_of_range("grid_coords: flat index " + std::to_string(flat) +
                                " outside [0, " + std::to_string(g.num_points()) + ")");
    const std::int64_t plane = static_cast<std::int64_t>(g.nx) * g.ny;
    int k = static_cast<int>(flat / plane);
    std::int64_t rem = flat % plane;
    int j = static_cast<int>(rem / g.nx);
    int i = static_cast<int>(rem % g.nx);
    return {i + 1, j + 1, k + 1};
}

}  // namespace gliosim

#endif
