#include <cmath>
#include <complex>

#include "doctest.h"

#include "ethm/eigensolver.hpp"
#include "ethm/errors.hpp"

using namespace ethm;

namespace {
const HelixSpec kCircular{1.0, 0.5, 0.5, 4};

BasisSpec basis_for(int p) {
  BasisSpec b;
  b.p = p;
  return b;
}
}  // namespace

TEST_CASE("spectrum is ascending with tight residuals and fixed phases") {
  const HamiltonianMatrix H = assemble(kCircular, FieldSpec{2.0, 1.0, 0.7}, basis_for(1));
  const EigenSolution sol = eigh(H);

  CHECK(sol.p == 1);
  for (int k = 1; k < H.dim; ++k) CHECK(sol.eigenvalues[k] >= sol.eigenvalues[k - 1]);
  for (int k = 0; k < H.dim; ++k) CHECK(sol.residuals[k] <= 1e-10 * H.entries.norm());

  for (int c = 0; c < H.dim; ++c) {
    int imax = 0;
    for (int i = 1; i < H.dim; ++i) {
      if (std::abs(sol.eigenvectors(i, c)) > std::abs(sol.eigenvectors(imax, c))) imax = i;
    }
    CHECK(sol.eigenvectors(imax, c).real() > 0.0);
    CHECK(std::abs(sol.eigenvectors(imax, c).imag()) < 1e-13);
    CHECK(sol.eigenvectors.col(c).norm() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("ground energy of the field-free circular helix") {
  const EigenSolution sol = eigh(assemble(kCircular, FieldSpec{}, basis_for(1)));
  CHECK(sol.eigenvalues[0] == doctest::Approx(-0.541743327993).epsilon(1e-8));
}

TEST_CASE("eigenpairs reproduce the matrix") {
  const HamiltonianMatrix H = assemble(kCircular, FieldSpec{1.0, 0.5, 0.2}, basis_for(2));
  const EigenSolution sol = eigh(H);
  const Eigen::MatrixXcd reconstructed = sol.eigenvectors *
                                         sol.eigenvalues.asDiagonal().toDenseMatrix() *
                                         sol.eigenvectors.adjoint();
  CHECK((reconstructed - H.entries).cwiseAbs().maxCoeff() < 1e-12 * H.entries.norm());
}

TEST_CASE("non-hermitian input is rejected unless flagged as the demonstration") {
  HamiltonianMatrix bad = assemble(kCircular, FieldSpec{1.0, 1.0, 0.0}, basis_for(0));
  bad.entries(0, 1) += std::complex<double>(0.0, 0.5);
  CHECK_THROWS_AS(eigh(bad), NotHermitian);

  const HamiltonianMatrix demo =
      assemble(kCircular, FieldSpec{1.0, 1.0, 0.0}, basis_for(0), false);
  CHECK(hermiticity_defect(demo) > 1e-6);
  CHECK_NOTHROW(eigh(demo));
}
