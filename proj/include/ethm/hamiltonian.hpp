#pragma once

#include <complex>

#include <Eigen/Dense>

#include "ethm/field.hpp"
#include "ethm/geometry.hpp"

namespace ethm {

// Winding basis for the confined problem: psi_n(phi) ~ e^{i(p + omega n) phi},
// n = -n_max..n_max, with fixed angular quantum number p. Matrix elements are
// evaluated by the periodic trapezoid rule on quad_points nodes.
struct BasisSpec {
  int p = 0;
  int n_max = 2;
  int quad_points = 2048;

  // n_max >= 1; quad_points even and >= 64.
  void validate() const;
};

// Dense effective Hamiltonian in the winding basis. Energies are the
// dimensionless eps = 2 m E R^2 / hbar^2 of a unit-charge particle confined
// to the curve in the given field. includes_vmag records whether the
// curvature-coupled magnetic term was kept (dropping it is only useful to
// demonstrate the hermiticity defect it repairs).
struct HamiltonianMatrix {
  int dim = 0;
  Eigen::MatrixXcd entries;
  bool includes_vmag = true;
  HelixSpec spec;
  FieldSpec field;
  BasisSpec basis;
};

// Integrand of one matrix element at angle phi: the phase e^{i omega (n-m) phi}
// times the second-order polynomial in q = p + omega n that the confined
// Hamiltonian reduces to. This is the raw bracket of the eigenvalue problem
// in the form (L + eps) Psi = 0, i.e. L = -H; assemble() flips the sign.
std::complex<double> matrix_element_integrand(const HelixSpec& spec, const FieldSpec& field,
                                              int p, int m, int n, double phi,
                                              bool include_vmag = true);

// Assembles H = -(1/2 pi) integral of the bracket over one period for every
// (m, n). The quadrature is checked by comparing against the half-density
// node subset; a max-entry difference above 1e-9 throws
// QuadratureNotConverged.
HamiltonianMatrix assemble(const HelixSpec& spec, const FieldSpec& field, const BasisSpec& basis,
                           bool include_vmag = true);

// max |H - H^dagger| over entries.
double hermiticity_defect(const Eigen::MatrixXcd& H);
double hermiticity_defect(const HamiltonianMatrix& H);

}  // namespace ethm
