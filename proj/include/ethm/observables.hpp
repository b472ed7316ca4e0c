#pragma once

#include <string>

#include <Eigen/Dense>

#include "ethm/eigensolver.hpp"
#include "ethm/field.hpp"
#include "ethm/geometry.hpp"
#include "ethm/hamiltonian.hpp"

namespace ethm {

// Which expression is evaluated for the tangential current density.
//   paper:           kinetic probability current of the basis expansion only.
//   gauge_invariant: adds the diamagnetic term -A_T |chi|^2, which makes the
//                    current gauge invariant in a nonzero field.
enum class CurrentModel { paper, gauge_invariant };

CurrentModel parse_current_model(const std::string& name);
std::string to_string(CurrentModel model);

// One evaluated state: the inputs that produced it, its dimensionless energy,
// and its toroidal moment in units of e hbar R / m.
struct MomentRecord {
  HelixSpec spec;
  FieldSpec field;
  BasisSpec basis;
  int alpha = 0;
  double sweep_param = 0.0;
  double eigenvalue = 0.0;
  Eigen::Vector3d moment = Eigen::Vector3d::Zero();
  std::string error;  // empty on success
};

// Tangential current density of state alpha at angle phi, in units of
// e hbar / (m R^2); the current vector is j(phi) T_hat. Uses the Hermitian
// combination conj(C_m) C_n so the density is real for complex coefficients
// and reduces to the plain product when they are real.
double current_density(const HelixSpec& spec, const BasisSpec& basis, const EigenSolution& sol,
                       int alpha, double phi, CurrentModel model, const FieldSpec& fs);

// Toroidal moment T = (1/10) closed integral of [(j.r) r - 2 r^2 j] f dphi,
// by the periodic trapezoid rule on basis.quad_points nodes. Units
// e hbar R / m.
Eigen::Vector3d toroidal_moment(const HelixSpec& spec, const BasisSpec& basis,
                                const EigenSolution& sol, int alpha, CurrentModel model,
                                const FieldSpec& fs);

// Classical loop oracle: a point charge circulating with angular momentum
// p hbar along the helix carries current I = 2 pi p / L^2 (dimensionless) and
// toroidal moment (0, 0, -pi omega I a b R / 2).
Eigen::Vector3d classical_moment(const HelixSpec& spec, int p);

}  // namespace ethm
