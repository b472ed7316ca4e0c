#pragma once

#include <Eigen/Dense>

namespace ethm {

// Elliptic toroidal helix (ETH): a curve winding omega times around a torus
// whose minor cross section is an ellipse,
//
//   r(phi) = (W cos phi, W sin phi, b sin(omega phi)),
//   W(phi) = R + a cos(omega phi),
//
// with major radius R, minor horizontal semi-axis a, minor vertical semi-axis b.
// All lengths are in units of R unless stated otherwise.
struct HelixSpec {
  double R = 1.0;
  double a = 0.5;
  double b = 0.5;
  int omega = 4;

  // R, a, b > 0; a < R so the curve cannot reach the symmetry axis; omega >= 1.
  void validate() const;
};

// Metric factor f = |dr/dphi| and its first two phi-derivatives, plus the
// helper lengths W and P = sqrt(a^2 sin^2(omega phi) + b^2 cos^2(omega phi)).
struct Metric {
  double W = 0.0;
  double P = 0.0;
  double f = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
};

// Per-phi bundle: metric data, curvature, torsion, and the right-handed
// orthonormal frame (T, N, B). kappa and torsion are in 1/R units.
struct FrenetData {
  double phi = 0.0;
  double W = 0.0;
  double P = 0.0;
  double f = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double kappa = 0.0;
  double torsion = 0.0;
  Eigen::Vector3d T = Eigen::Vector3d::Zero();
  Eigen::Vector3d N = Eigen::Vector3d::Zero();
  Eigen::Vector3d B = Eigen::Vector3d::Zero();
};

// Components of the fixed unit vectors i, j, k and the azimuthal unit vector
// phi_hat(phi) in the local frame, from the closed-form expansions.
struct FrameProjections {
  double i_T = 0.0, i_N = 0.0, i_B = 0.0;
  double j_T = 0.0, j_N = 0.0, j_B = 0.0;
  double k_T = 0.0, k_N = 0.0, k_B = 0.0;
  double phi_T = 0.0, phi_N = 0.0, phi_B = 0.0;
};

Eigen::Vector3d position(const HelixSpec& spec, double phi);

// d r / d phi and higher derivatives, closed form.
Eigen::Vector3d curve_d1(const HelixSpec& spec, double phi);
Eigen::Vector3d curve_d2(const HelixSpec& spec, double phi);
Eigen::Vector3d curve_d3(const HelixSpec& spec, double phi);

Metric metric(const HelixSpec& spec, double phi);

// Throws FrameSingularity where the curvature vanishes and N is undefined.
FrenetData frenet(const HelixSpec& spec, double phi);

FrameProjections frame_projections(const HelixSpec& spec, double phi);

// Total arc length L = integral of f over one azimuthal period, by the
// periodic trapezoid rule; the grid is doubled until L is stable to 1e-12
// relative, starting from quad_points.
double arc_length(const HelixSpec& spec, int quad_points = 2048);

}  // namespace ethm
