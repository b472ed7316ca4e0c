#include "ethm/observables.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ethm {

CurrentModel parse_current_model(const std::string& name) {
  if (name == "paper") return CurrentModel::paper;
  if (name == "gauge_invariant") return CurrentModel::gauge_invariant;
  throw std::invalid_argument("unknown current model: " + name);
}

std::string to_string(CurrentModel model) {
  return model == CurrentModel::paper ? "paper" : "gauge_invariant";
}

double current_density(const HelixSpec& spec, const BasisSpec& basis, const EigenSolution& sol,
                       int alpha, double phi, CurrentModel model, const FieldSpec& fs) {
  const int dim = 2 * basis.n_max + 1;
  if (alpha < 0 || alpha >= dim || sol.eigenvectors.cols() != dim) {
    throw std::out_of_range("current_density: state index out of range");
  }

  const Metric m = metric(spec, phi);
  const double inv_f2 = 1.0 / (m.f * m.f);
  const double sine_weight = m.f1 / (2.0 * m.f * m.f * m.f);
  const int w = spec.omega;

  double j = 0.0;
  for (int mi = 0; mi < dim; ++mi) {
    for (int ni = 0; ni < dim; ++ni) {
      const std::complex<double> cc =
          std::conj(sol.eigenvectors(mi, alpha)) * sol.eigenvectors(ni, alpha);
      const double ang = w * (ni - mi) * phi;
      const double ca = std::cos(ang), sa = std::sin(ang);
      const double qn = basis.p + static_cast<double>(w) * (ni - basis.n_max);
      j += qn * inv_f2 * (cc.real() * ca - cc.imag() * sa) -
           sine_weight * (cc.real() * sa + cc.imag() * ca);
    }
  }
  j /= 2.0 * M_PI;

  if (model == CurrentModel::gauge_invariant) {
    std::complex<double> u = 0.0;
    for (int ni = 0; ni < dim; ++ni) {
      const double ang = w * (ni - basis.n_max) * phi;
      u += sol.eigenvectors(ni, alpha) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    const FrenetData nd = frenet(spec, phi);
    const PotentialComponents A = potential_components(spec, nd, fs.phi_M);
    const double aT = fs.tau1 * A.A_T_rho + fs.tau0 * A.A_T_z;
    j -= aT * std::norm(u) / (2.0 * M_PI * m.f);
  }
  return j;
}

Eigen::Vector3d toroidal_moment(const HelixSpec& spec, const BasisSpec& basis,
                                const EigenSolution& sol, int alpha, CurrentModel model,
                                const FieldSpec& fs) {
  const int nq = basis.quad_points;
  const double two_pi = 2.0 * M_PI;

  Eigen::Vector3d acc = Eigen::Vector3d::Zero();
  for (int k = 0; k < nq; ++k) {
    const double phi = two_pi * k / nq;
    const double j = current_density(spec, basis, sol, alpha, phi, model, fs);
    const Metric m = metric(spec, phi);
    const Eigen::Vector3d r = position(spec, phi);
    const Eigen::Vector3d jvec = j * curve_d1(spec, phi) / m.f;
    acc += (jvec.dot(r) * r - 2.0 * r.squaredNorm() * jvec) * m.f;
  }
  return 0.1 * acc * two_pi / nq;
}

Eigen::Vector3d classical_moment(const HelixSpec& spec, int p) {
  const double L = arc_length(spec);
  const double I = 2.0 * M_PI * p / (L * L);
  return {0.0, 0.0, -M_PI * spec.omega * I * spec.a * spec.b * spec.R / 2.0};
}

}  // namespace ethm
