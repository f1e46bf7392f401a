#ifndef GLIOSIM_IMAGING_HPP
#define GLIOSIM_IMAGING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gliosim/config.hpp"
#include "gliosim/fields.hpp"

namespace gliosim {

// Stack of 8-bit grayscale slices, bottom slice first. Intensity at pixel
// (x, y) of slice z lives at x + y*width + z*width*height.
struct ImageStack {
    int width = 0;
    int height = 0;
    int num_slices = 0;
    std::vector<std::uint8_t> intensities;

    std::uint8_t at(int x, int y, int z) const {
        return intensities[static_cast<std::size_t>(x) +
                           static_cast<std::size_t>(y) * width +
                           static_cast<std::size_t>(z) * width * height];
    }
};

// Binary 8-bit PGM (magic P5, maxval 255) slices; all must share dimensions.
ImageStack load_stack(const std::vector<std::string>& paths);

// Single-file raw volume: ASCII header "nx ny nz" on line one, then
// nx*ny*nz raw bytes in x-fastest order.
ImageStack load_raw_volume(const std::string& path);

Material classify(int intensity, const SimConfig& cfg);

// Nearest-neighbor resampling of the stack onto the grid; ties round toward
// the lower source index.
MaterialVolume resample(const ImageStack& stack, const Grid& grid, const SimConfig& cfg);

DiffusionField diffusion_from_materials(const MaterialVolume& mv, const SimConfig& cfg);

struct MatterFractions {
    double white = 0.0;
    double gray = 0.0;
};

// Fractions over tissue voxels only; Air and Skull are excluded.
MatterFractions matter_fractions(const MaterialVolume& mv);

// Label volume file: same header as the raw volume, one byte per voxel
// (0=Air, 1=WhiteMatter, 2=GrayMatter, 3=Skull).
void write_label_volume(const MaterialVolume& mv, const std::string& path);
MaterialVolume read_label_volume(const std::string& path, const Grid& grid);

}  // namespace gliosim

#endif
