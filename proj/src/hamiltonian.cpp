#include "ethm/hamiltonian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ethm/errors.hpp"

namespace ethm {
namespace {

using cd = std::complex<double>;

struct NodeCoeffs {
  cd c0;
  cd c1;
  double c2;
};

// Coefficients of the bracket c0 + q c1 + q^2 c2 at one node, q = p + omega n.
NodeCoeffs bracket_coefficients(const HelixSpec& spec, const FieldSpec& field,
                                const FrenetData& nd, bool include_vmag) {
  const PotentialComponents A = potential_components(spec, nd, field.phi_M);
  const double t0 = field.tau0, t1 = field.tau1;
  const double aT = t1 * A.A_T_rho + t0 * A.A_T_z;
  const double aN = t1 * A.A_N_rho + t0 * A.A_N_z;
  const double asq =
      t1 * t1 * (A.A_T_rho * A.A_T_rho + A.A_N_rho * A.A_N_rho + A.A_B_rho * A.A_B_rho) +
      t0 * t0 * (A.A_T_z * A.A_T_z + A.A_N_z * A.A_N_z + A.A_B_z * A.A_B_z) +
      2.0 * t0 * t1 * (A.A_T_rho * A.A_T_z + A.A_N_rho * A.A_N_z + A.A_B_rho * A.A_B_z);

  const double f = nd.f, f1 = nd.f1, f2 = nd.f2, kap = nd.kappa;
  const double f_2 = f * f, f_3 = f_2 * f, f_4 = f_2 * f_2;

  NodeCoeffs nc;
  nc.c0 = cd(1.25 * f1 * f1 / f_4 - f2 / (2.0 * f_3) + 0.25 * kap * kap - asq,
             -f1 / f_2 * aT + (include_vmag ? kap * aN : 0.0));
  nc.c1 = cd(-2.0 * aT / f, -2.0 * f1 / f_3);
  nc.c2 = -1.0 / f_2;
  return nc;
}

}  // namespace

void BasisSpec::validate() const {
  if (n_max < 1) throw std::invalid_argument("BasisSpec: n_max must be >= 1");
  if (quad_points < 64 || quad_points % 2 != 0)
    throw std::invalid_argument("BasisSpec: quad_points must be even and >= 64");
}

std::complex<double> matrix_element_integrand(const HelixSpec& spec, const FieldSpec& field,
                                              int p, int m, int n, double phi,
                                              bool include_vmag) {
  const FrenetData nd = frenet(spec, phi);
  const NodeCoeffs nc = bracket_coefficients(spec, field, nd, include_vmag);
  const double q = p + static_cast<double>(spec.omega) * n;
  const cd bracket = nc.c0 + q * nc.c1 + q * q * nc.c2;
  const double ang = spec.omega * (n - m) * phi;
  return cd(std::cos(ang), std::sin(ang)) * bracket;
}

HamiltonianMatrix assemble(const HelixSpec& spec, const FieldSpec& field, const BasisSpec& basis,
                           bool include_vmag) {
  spec.validate();
  basis.validate();

  const int nq = basis.quad_points;
  const int nmax = basis.n_max;
  const int dim = 2 * nmax + 1;
  const int w = spec.omega;
  const double two_pi = 2.0 * M_PI;

  std::vector<NodeCoeffs> nodes(nq);
  for (int k = 0; k < nq; ++k) {
    nodes[k] = bracket_coefficients(spec, field, frenet(spec, two_pi * k / nq), include_vmag);
  }

  // The matrix element only sees the Fourier transform of each coefficient at
  // offset d = n - m, so accumulate those once per d. stride 2 reuses the
  // even-index nodes as the half-density trapezoid rule.
  auto build = [&](int stride) {
    const int nd_off = 2 * nmax;
    std::vector<cd> S0(4 * nmax + 1), S1(4 * nmax + 1), S2(4 * nmax + 1);
    for (int d = -2 * nmax; d <= 2 * nmax; ++d) {
      cd s0 = 0.0, s1 = 0.0, s2 = 0.0;
      int count = 0;
      for (int k = 0; k < nq; k += stride) {
        const double ang = w * d * (two_pi * k / nq);
        const cd ph(std::cos(ang), std::sin(ang));
        s0 += ph * nodes[k].c0;
        s1 += ph * nodes[k].c1;
        s2 += ph * nodes[k].c2;
        ++count;
      }
      S0[d + nd_off] = s0 / static_cast<double>(count);
      S1[d + nd_off] = s1 / static_cast<double>(count);
      S2[d + nd_off] = s2 / static_cast<double>(count);
    }
    Eigen::MatrixXcd H(dim, dim);
    for (int mi = 0; mi < dim; ++mi) {
      for (int ni = 0; ni < dim; ++ni) {
        const int d = ni - mi;
        const double q = basis.p + static_cast<double>(w) * (ni - nmax);
        H(mi, ni) = -(S0[d + nd_off] + q * S1[d + nd_off] + q * q * S2[d + nd_off]);
      }
    }
    return H;
  };

  Eigen::MatrixXcd H = build(1);
  const Eigen::MatrixXcd H_half = build(2);
  const double quad_defect = (H - H_half).cwiseAbs().maxCoeff();
  if (quad_defect > 1e-9) {
    std::ostringstream msg;
    msg << "assemble: trapezoid rule not converged at " << nq
        << " nodes, half-grid max entry difference " << quad_defect;
    throw QuadratureNotConverged(msg.str());
  }

  HamiltonianMatrix out;
  out.dim = dim;
  out.entries = std::move(H);
  out.includes_vmag = include_vmag;
  out.spec = spec;
  out.field = field;
  out.basis = basis;
  return out;
}

double hermiticity_defect(const Eigen::MatrixXcd& H) {
  return (H - H.adjoint()).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const HamiltonianMatrix& H) { return hermiticity_defect(H.entries); }

}  // namespace ethm
