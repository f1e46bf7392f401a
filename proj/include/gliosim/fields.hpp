#ifndef GLIOSIM_FIELDS_HPP
#define GLIOSIM_FIELDS_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gliosim/grid.hpp"

namespace gliosim {

enum class Material : std::uint8_t {
    Air = 0,
    WhiteMatter = 1,
    GrayMatter = 2,
    Skull = 3,
};

// Tumor cell density degrees of freedom, flattened in global_index order.
// Values are normalized cell densities (dimensionless, nominally in [0,1]).
struct ScalarField {
    Grid grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid(g), values(static_cast<std::size_t>(g.num_points()), fill) {}
    ScalarField(const Grid& g, std::vector<double> vals) : grid(g), values(std::move(vals)) {
        if (values.size() != static_cast<std::size_t>(g.num_points()))
            throw std::invalid_argument("ScalarField: value count does not match the grid");
    }

    double& operator[](std::int64_t v) { return values[static_cast<std::size_t>(v)]; }
    double operator[](std::int64_t v) const { return values[static_cast<std::size_t>(v)]; }
    std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
};

// Per-voxel material labels in global_index order.
struct MaterialVolume {
    Grid grid;
    std::vector<Material> labels;

    MaterialVolume() = default;
    explicit MaterialVolume(const Grid& g, Material fill = Material::Air)
        : grid(g), labels(static_cast<std::size_t>(g.num_points()), fill) {}
};

// Per-voxel diffusion coefficient, mm^2 day^-1. Zero on Air and Skull when
// derived from a MaterialVolume.
struct DiffusionField {
    Grid grid;
    std::vector<double> d;

    DiffusionField() = default;
    explicit DiffusionField(const Grid& g, double fill = 0.0)
        : grid(g), d(static_cast<std::size_t>(g.num_points()), fill) {
        if (fill < 0.0) throw std::invalid_argument("DiffusionField: coefficient must be >= 0");
    }
};

}  // namespace gliosim

#endif
