#ifndef GLIOSIM_STENCIL_HPP
#define GLIOSIM_STENCIL_HPP

#include <vector>

#include "gliosim/fields.hpp"
#include "gliosim/sparse.hpp"

namespace gliosim {

// Finite-difference operator for div(D grad u) on the regular grid with
// homogeneous Neumann (zero-flux) boundaries.
//
// Row for voxel v with coefficient D_v, spacing h:
//   off-diagonal  D_v / h^2   toward each in-grid axis neighbor,
//   diagonal     -(number of in-grid neighbors) * D_v / h^2.
// Missing neighbors at domain faces are mirrored ghosts (ghost value equals
// the interior value), which cancels their contribution, so every row sums
// to zero. Voxels with D_v = 0 get empty rows.
SparseOperator assemble_diffusion(const DiffusionField& d);

// Logistic proliferation rho * u * (1 - u), elementwise.
std::vector<double> reaction(const std::vector<double>& u, double rho);
void reaction(const std::vector<double>& u, double rho, std::vector<double>& out);

}  // namespace gliosim

#endif
