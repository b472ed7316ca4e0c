#include "ethm/eigensolver.hpp"

#include <complex>
#include <sstream>

#include "ethm/errors.hpp"

namespace ethm {

EigenSolution eigh(const HamiltonianMatrix& H, double tol) {
  const double defect = hermiticity_defect(H.entries);
  if (defect >= 1e-8 && H.includes_vmag) {
    std::ostringstream msg;
    msg << "eigh: hermiticity defect " << defect << " exceeds 1e-8";
    throw NotHermitian(msg.str());
  }

  const Eigen::MatrixXcd A = 0.5 * (H.entries + H.entries.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(A);
  if (solver.info() != Eigen::Success) {
    throw EigenSolveFailure("eigh: dense Hermitian solver did not converge");
  }

  EigenSolution sol;
  sol.p = H.basis.p;
  sol.eigenvalues = solver.eigenvalues();
  sol.eigenvectors = solver.eigenvectors();

  const int dim = H.dim;
  for (int c = 0; c < dim; ++c) {
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < dim; ++i) {
      const double mag = std::abs(sol.eigenvectors(i, c));
      if (mag > best) {
        best = mag;
        imax = i;
      }
    }
    const std::complex<double> pivot = sol.eigenvectors(imax, c);
    if (best > 0.0) sol.eigenvectors.col(c) *= std::conj(pivot) / best;
  }

  sol.residuals.resize(dim);
  const double scale = A.norm();
  for (int c = 0; c < dim; ++c) {
    sol.residuals[c] =
        (A * sol.eigenvectors.col(c) - sol.eigenvalues[c] * sol.eigenvectors.col(c)).norm();
    if (sol.residuals[c] > tol * scale) {
      std::ostringstream msg;
      msg << "eigh: residual " << sol.residuals[c] << " for eigenpair " << c << " exceeds "
          << tol * scale;
      throw EigenSolveFailure(msg.str());
    }
  }
  return sol;
}

}  // namespace ethm
