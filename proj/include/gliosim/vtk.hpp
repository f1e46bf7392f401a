#ifndef GLIOSIM_VTK_HPP
#define GLIOSIM_VTK_HPP

#include <string>
#include <vector>

#include "gliosim/fields.hpp"
#include "gliosim/integrator.hpp"

namespace gliosim {

/*
 * Snapshot and metrics serialization. Snapshots use the legacy ASCII VTK
 * structured-points dialect, which ParaView and friends read directly:
 *
 *     # vtk DataFile Version 3.0
 *     tumor density snapshot
 *     ASCII
 *     DATASET STRUCTURED_POINTS
 *     DIMENSIONS nx ny nz
 *     SPACING h h h
 *     ORIGIN ox oy oz
 *     POINT_DATA n
 *     SCALARS tumor_density float 1
 *     LOOKUP_TABLE default
 *     <n values, one per line, 17 significant digits>
 *
 * With a material volume a second array follows the first:
 *
 *     SCALARS material int 1
 *     LOOKUP_TABLE default
 *     <n labels, one per line>
 *
 * Values appear in global index order (x fastest, then y, then z). Output is
 * byte-identical across runs for identical inputs.
 */

// Writes u (and optionally the material labels) to path.
void write_vtk(const ScalarField& u, const std::string& path,
               const MaterialVolume* materials = nullptr);

// Reads a snapshot written by write_vtk; a trailing material array is ignored.
ScalarField read_vtk(const std::string& path);

// CSV with header step,time_days,total_mass,max_density,radius_mm and one
// row per record, numbers at 17 significant digits.
void write_metrics_csv(const std::vector<StepMetrics>& series, const std::string& path);

}  // namespace gliosim

#endif
