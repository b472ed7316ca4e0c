#pragma once

#include <Eigen/Dense>

#include "ethm/hamiltonian.hpp"

namespace ethm {

// Spectrum of one Hamiltonian block: eigenvalues ascending, eigenvectors as
// columns in matching order. Each column is phase-fixed so its largest-modulus
// component is real and positive (first such index on ties), making results
// reproducible across runs and backends. residuals[k] = |H v_k - eps_k v_k|_2.
struct EigenSolution {
  int p = 0;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  Eigen::VectorXd residuals;
};

// Dense Hermitian diagonalization. Requires a hermiticity defect below 1e-8
// unless the matrix was assembled without the curvature-coupled magnetic term,
// in which case the Hermitian part (H + H^dagger)/2 is diagonalized so the
// defect can still be demonstrated downstream. Throws NotHermitian on a
// defective matrix and EigenSolveFailure when any residual exceeds
// tol * |H|_F.
EigenSolution eigh(const HamiltonianMatrix& H, double tol = 1e-10);

}  // namespace ethm
