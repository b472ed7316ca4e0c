#pragma once

#include <Eigen/Dense>

#include "ethm/geometry.hpp"

namespace ethm {

// Constant magnetic field of arbitrary orientation, described by two
// dimensionless flux parameters,
//
//   tau0 = e R^2 B_z / hbar,   tau1 = e R^2 B_rho / hbar,
//
// where B_z is the component along the torus axis and B_rho the in-plane
// component, pointing along azimuth phi_M. The tilt angle is
// theta = atan2(tau1, tau0).
struct FieldSpec {
  double tau0 = 0.0;
  double tau1 = 0.0;
  double phi_M = 0.0;

  static FieldSpec from_fluxes(double tau0, double tau1, double phi_M = 0.0);
  // Fixed total strength tau_max tilted by theta from the axis.
  static FieldSpec from_polar(double tau_max, double theta, double phi_M = 0.0);
  // Laboratory input: field in tesla and the torus major radius in meters.
  static FieldSpec from_tesla(double B_z, double B_rho, double R_meters, double phi_M = 0.0);

  double theta() const;
  double tau_max() const;
};

// Projections of the symmetric-gauge vector potential A = (1/2) B x r onto
// the local frame, split by field component: the *_rho entries multiply tau1,
// the *_z entries multiply tau0. All are per unit tau, in units of R.
struct PotentialComponents {
  double A_T_rho = 0.0;
  double A_N_rho = 0.0;
  double A_B_rho = 0.0;
  double A_T_z = 0.0;
  double A_N_z = 0.0;
  double A_B_z = 0.0;
};

// Unit-tau field directions: rho_hat(phi_M) for the in-plane part, z_hat for
// the axial part.
Eigen::Vector3d field_vector(const FieldSpec& field);

// A(r) = (1/2) B x r for a unit-strength field along direction `axis`.
Eigen::Vector3d vector_potential_direct(const Eigen::Vector3d& axis, const Eigen::Vector3d& point);

// Frame projections of the two unit-tau potentials at angle phi on the curve,
// computed by projecting (1/2) axis x r onto T, N, B directly.
PotentialComponents potential_components(const HelixSpec& spec, double phi, double phi_M);
PotentialComponents potential_components(const HelixSpec& spec, const FrenetData& node, double phi_M);

// Same projections from the fully expanded scalar forms. A published
// transcription of A_B_rho ends in b sin(phi_M) where b sin(omega phi)
// belongs; pass variant_final_term = true to reproduce that slip, false for
// the corrected form that agrees with the direct projection.
PotentialComponents potential_components_expanded(const HelixSpec& spec, double phi, double phi_M,
                                                  bool variant_final_term = false);

}  // namespace ethm
