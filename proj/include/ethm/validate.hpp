#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace ethm {

// Coefficients of the monic characteristic polynomial det(lambda I - A),
// index k holding the lambda^k coefficient (index n is 1). Uses the
// Faddeev-LeVerrier recurrence; for Hermitian input the coefficients are
// real up to rounding.
std::vector<double> char_poly_real(const Eigen::MatrixXcd& A);

// All real roots of the polynomial inside [lo, hi], found by sign changes on
// a dense sample followed by bisection. Intended for well-separated spectra
// such as the small Hamiltonian blocks here.
std::vector<double> real_roots_bracketed(const std::vector<double>& coeffs, double lo, double hi);

// Independent cross-checks of the numerics, one line per check written to
// out; returns true when every check passes:
//  - frame derivatives against finite differences,
//  - closed-form potential projections against the direct (1/2) B x r form
//    (the corrected final term; the as-printed variant is reported),
//  - recombination of the projected potential back to (1/2) B x r,
//  - basis overlap matrix against the identity,
//  - dense eigensolver against characteristic-polynomial roots,
//  - matrix quadrature stability under node doubling.
bool run_validation(std::ostream& out);

}  // namespace ethm
