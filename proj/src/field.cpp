#include "ethm/field.hpp"

#include <cmath>

#include "ethm/constants.hpp"

namespace ethm {

FieldSpec FieldSpec::from_fluxes(double tau0, double tau1, double phi_M) {
  return FieldSpec{tau0, tau1, phi_M};
}

FieldSpec FieldSpec::from_polar(double tau_max, double theta, double phi_M) {
  return FieldSpec{tau_max * std::cos(theta), tau_max * std::sin(theta), phi_M};
}

FieldSpec FieldSpec::from_tesla(double B_z, double B_rho, double R_meters, double phi_M) {
  const double scale =
      constants::elementary_charge * R_meters * R_meters / constants::hbar;
  return FieldSpec{scale * B_z, scale * B_rho, phi_M};
}

double FieldSpec::theta() const { return std::atan2(tau1, tau0); }

double FieldSpec::tau_max() const { return std::hypot(tau0, tau1); }

Eigen::Vector3d field_vector(const FieldSpec& field) {
  return {field.tau1 * std::cos(field.phi_M), field.tau1 * std::sin(field.phi_M), field.tau0};
}

Eigen::Vector3d vector_potential_direct(const Eigen::Vector3d& axis, const Eigen::Vector3d& point) {
  return 0.5 * axis.cross(point);
}

PotentialComponents potential_components(const HelixSpec& spec, const FrenetData& node,
                                         double phi_M) {
  const Eigen::Vector3d r = position(spec, node.phi);
  const Eigen::Vector3d rho_M{std::cos(phi_M), std::sin(phi_M), 0.0};
  const Eigen::Vector3d z_hat{0.0, 0.0, 1.0};
  const Eigen::Vector3d A_rho = vector_potential_direct(rho_M, r);
  const Eigen::Vector3d A_z = vector_potential_direct(z_hat, r);

  PotentialComponents pc;
  pc.A_T_rho = A_rho.dot(node.T);
  pc.A_N_rho = A_rho.dot(node.N);
  pc.A_B_rho = A_rho.dot(node.B);
  pc.A_T_z = A_z.dot(node.T);
  pc.A_N_z = A_z.dot(node.N);
  pc.A_B_z = A_z.dot(node.B);
  return pc;
}

PotentialComponents potential_components(const HelixSpec& spec, double phi, double phi_M) {
  return potential_components(spec, frenet(spec, phi), phi_M);
}

PotentialComponents potential_components_expanded(const HelixSpec& spec, double phi, double phi_M,
                                                  bool variant_final_term) {
  const Metric m = metric(spec, phi);
  const FrameProjections fp = frame_projections(spec, phi);
  const double s = std::sin(phi), c = std::cos(phi);
  const double rot = std::cos(phi_M) * s - std::sin(phi_M) * c;
  const double bs = spec.b * std::sin(spec.omega * phi);

  PotentialComponents pc;
  pc.A_T_rho = 0.5 * m.W * fp.k_T * rot + 0.5 * bs * std::sin(phi_M) * fp.i_T -
               0.5 * bs * std::cos(phi_M) * fp.j_T;
  pc.A_N_rho = 0.5 * m.W * fp.k_N * rot + 0.5 * bs * std::sin(phi_M) * fp.i_N -
               0.5 * bs * std::cos(phi_M) * fp.j_N;
  const double last = variant_final_term ? spec.b * std::sin(phi_M) : bs;
  pc.A_B_rho = 0.5 * m.W * fp.k_B * rot + 0.5 * bs * std::sin(phi_M) * fp.i_B -
               0.5 * last * std::cos(phi_M) * fp.j_B;
  pc.A_T_z = 0.5 * m.W * fp.phi_T;
  pc.A_N_z = 0.5 * m.W * fp.phi_N;
  pc.A_B_z = 0.5 * m.W * fp.phi_B;
  return pc;
}

}  // namespace ethm
