#include <cmath>

#include "doctest.h"

#include "ethm/constants.hpp"
#include "ethm/field.hpp"
#include "ethm/geometry.hpp"

using namespace ethm;

namespace {
const HelixSpec kCircular{1.0, 0.5, 0.5, 4};
const HelixSpec kTall{1.0, 0.25, 0.75, 4};
}  // namespace

TEST_CASE("field constructors") {
  const FieldSpec polar = FieldSpec::from_polar(2.0, 0.9, 0.3);
  CHECK(polar.tau0 == doctest::Approx(2.0 * std::cos(0.9)).epsilon(1e-15));
  CHECK(polar.tau1 == doctest::Approx(2.0 * std::sin(0.9)).epsilon(1e-15));
  CHECK(polar.theta() == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(polar.tau_max() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(polar.phi_M == 0.3);

  const FieldSpec tesla = FieldSpec::from_tesla(1.0, 0.0, 1.0);
  CHECK(tesla.tau0 ==
        doctest::Approx(constants::elementary_charge / constants::hbar).epsilon(1e-15));
  CHECK(tesla.tau1 == 0.0);

  const Eigen::Vector3d B = field_vector(FieldSpec{1.5, 2.0, M_PI / 2});
  CHECK(B.x() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(B.y() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(B.z() == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("symmetric gauge potential has the field as its curl") {
  const double h = 1e-6;
  const Eigen::Vector3d axes[] = {{0, 0, 1}, {1, 0, 0}, {0.3, -0.4, 0.86}};
  const Eigen::Vector3d at{0.7, -0.2, 0.4};
  for (const auto& axis : axes) {
    Eigen::Vector3d curl;
    for (int c = 0; c < 3; ++c) {
      const int u = (c + 1) % 3, v = (c + 2) % 3;
      Eigen::Vector3d du = Eigen::Vector3d::Zero(), dv = Eigen::Vector3d::Zero();
      du[u] = h;
      dv[v] = h;
      curl[c] = (vector_potential_direct(axis, at + du)[v] -
                 vector_potential_direct(axis, at - du)[v]) /
                    (2 * h) -
                (vector_potential_direct(axis, at + dv)[u] -
                 vector_potential_direct(axis, at - dv)[u]) /
                    (2 * h);
    }
    CHECK((curl - axis).norm() < 1e-9);
  }
}

TEST_CASE("closed-form potential projections match the direct ones") {
  for (const auto& spec : {kCircular, kTall}) {
    for (double phi : {0.0, 0.3, 0.9, 2.5, 5.1}) {
      for (double phi_M : {0.0, 0.7, 2.9}) {
        const PotentialComponents direct = potential_components(spec, phi, phi_M);
        const PotentialComponents closed = potential_components_expanded(spec, phi, phi_M);
        CHECK(closed.A_T_rho == doctest::Approx(direct.A_T_rho).epsilon(1e-13));
        CHECK(closed.A_N_rho == doctest::Approx(direct.A_N_rho).epsilon(1e-13));
        CHECK(closed.A_B_rho == doctest::Approx(direct.A_B_rho).epsilon(1e-13));
        CHECK(closed.A_T_z == doctest::Approx(direct.A_T_z).epsilon(1e-13));
        CHECK(closed.A_N_z == doctest::Approx(direct.A_N_z).epsilon(1e-13));
        CHECK(closed.A_B_z == doctest::Approx(direct.A_B_z).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("misprinted final term of the binormal projection is wrong") {
  const PotentialComponents direct = potential_components(kTall, 0.9, 0.7);
  const PotentialComponents printed = potential_components_expanded(kTall, 0.9, 0.7, true);
  CHECK(std::abs(printed.A_B_rho - direct.A_B_rho) > 1e-6);
}

TEST_CASE("frozen potential projections, circular helix") {
  const PotentialComponents A = potential_components(kCircular, 0.9, 0.0);
  CHECK(A.A_T_rho == doctest::Approx(-0.1315179320421542).epsilon(1e-12));
  CHECK(A.A_T_z == doctest::Approx(0.073333214799684479).epsilon(1e-12));
  CHECK(A.A_N_rho == doctest::Approx(0.19340238752821001).epsilon(1e-12));
  CHECK(A.A_N_z == doctest::Approx(0.061071107620582793).epsilon(1e-12));
  CHECK(A.A_B_rho == doctest::Approx(-0.064923389731278022).epsilon(1e-12));
  CHECK(A.A_B_z == doctest::Approx(-0.25877390501504349).epsilon(1e-12));
}
