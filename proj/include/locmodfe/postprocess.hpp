// Error norms, interpolation helpers and VTK output.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "locmodfe/fe_values.hpp"
#include "locmodfe/patch_mesh.hpp"
#include "locmodfe/problems.hpp"

namespace locmodfe {

struct ErrorNorms {
  double l2 = 0.0;
  double h1 = 0.0;  // H1 semi-norm of the error (gradient part)
};

// || u_h - u ||_L2 and | u_h - u |_H1 using the patch quadrature; the exact
// solution branch is selected by the discrete sub-cell domain.
ErrorNorms compute_errors(const PatchMesh& mesh,
                          const std::vector<double>& coefficients,
                          BasisKind basis, const InterfaceProblem& problem);

// log2(error_coarse / error_fine) for meshes refined by a factor of 2.
double convergence_rate(double error_coarse, double error_fine);

// Coefficient vector whose finite element function interpolates g at all
// (possibly moved) nodes.
std::vector<double> interpolate(const PatchMesh& mesh, BasisKind basis,
                                const std::function<double(const Vec2&)>& g);

// Nodal values u_h(x_i) of a finite element function (identity for the
// standard basis).
std::vector<double> nodal_values(const PatchMesh& mesh, BasisKind basis,
                                 const std::vector<double>& coefficients);

// Legacy ASCII VTK file with the sub-cell mesh, nodal solution values and
// per-cell domain / femtype markers.
void write_vtk(const std::string& path, const PatchMesh& mesh,
               const std::vector<double>& nodal);

}  // namespace locmodfe
