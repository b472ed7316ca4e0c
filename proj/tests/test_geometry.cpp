#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "ethm/geometry.hpp"

using namespace ethm;

namespace {

const HelixSpec kCircular{1.0, 0.5, 0.5, 4};
const HelixSpec kTall{1.0, 0.25, 0.75, 4};
const HelixSpec kFlat8{1.0, 0.75, 0.25, 8};

const double kPhis[] = {0.0, 0.3, 0.9, 1.7, 2.5, 4.0, 5.9};

}  // namespace

TEST_CASE("spec validation rejects degenerate shapes") {
  CHECK_NOTHROW(kCircular.validate());
  CHECK_THROWS_AS((HelixSpec{1.0, 1.0, 0.5, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((HelixSpec{1.0, 0.5, 0.0, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((HelixSpec{0.0, 0.5, 0.5, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((HelixSpec{1.0, 0.5, 0.5, 0}.validate()), std::invalid_argument);
}

TEST_CASE("curve derivatives agree with finite differences of position") {
  const double h = 1e-6;
  for (const auto& spec : {kCircular, kTall, kFlat8}) {
    for (double phi : kPhis) {
      const Eigen::Vector3d d1_fd = (position(spec, phi + h) - position(spec, phi - h)) / (2 * h);
      CHECK((curve_d1(spec, phi) - d1_fd).norm() < 1e-7);

      const Eigen::Vector3d d2_fd = (curve_d1(spec, phi + h) - curve_d1(spec, phi - h)) / (2 * h);
      CHECK((curve_d2(spec, phi) - d2_fd).norm() < 1e-7);

      const Eigen::Vector3d d3_fd = (curve_d2(spec, phi + h) - curve_d2(spec, phi - h)) / (2 * h);
      CHECK((curve_d3(spec, phi) - d3_fd).norm() < 1e-6);
    }
  }
}

TEST_CASE("metric factor and its derivatives") {
  const double h = 1e-6;
  for (const auto& spec : {kCircular, kTall, kFlat8}) {
    for (double phi : kPhis) {
      const Metric m = metric(spec, phi);
      CHECK(m.f == doctest::Approx(curve_d1(spec, phi).norm()).epsilon(1e-14));
      CHECK(m.W == doctest::Approx(spec.R + spec.a * std::cos(spec.omega * phi)).epsilon(1e-14));

      const double f1_fd = (metric(spec, phi + h).f - metric(spec, phi - h).f) / (2 * h);
      CHECK(m.f1 == doctest::Approx(f1_fd).epsilon(1e-8));

      const double f2_fd = (metric(spec, phi + h).f1 - metric(spec, phi - h).f1) / (2 * h);
      CHECK(m.f2 == doctest::Approx(f2_fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("frenet frame is right-handed and orthonormal") {
  for (const auto& spec : {kCircular, kTall, kFlat8}) {
    for (double phi : kPhis) {
      const FrenetData d = frenet(spec, phi);
      CHECK(std::abs(d.T.norm() - 1.0) < 1e-13);
      CHECK(std::abs(d.N.norm() - 1.0) < 1e-13);
      CHECK(std::abs(d.B.norm() - 1.0) < 1e-13);
      CHECK(std::abs(d.T.dot(d.N)) < 1e-13);
      CHECK(std::abs(d.T.dot(d.B)) < 1e-13);
      CHECK(std::abs(d.N.dot(d.B)) < 1e-13);
      CHECK((d.B - d.T.cross(d.N)).norm() < 1e-13);
    }
  }
}

TEST_CASE("curvature and torsion match the cross-product forms") {
  for (const auto& spec : {kCircular, kTall, kFlat8}) {
    for (double phi : kPhis) {
      const FrenetData d = frenet(spec, phi);
      const Eigen::Vector3d r1 = curve_d1(spec, phi);
      const Eigen::Vector3d r2 = curve_d2(spec, phi);
      const Eigen::Vector3d r3 = curve_d3(spec, phi);
      const Eigen::Vector3d c12 = r1.cross(r2);

      const double kappa_std = c12.norm() / std::pow(r1.norm(), 3);
      CHECK(d.kappa == doctest::Approx(kappa_std).epsilon(1e-12));

      const double torsion_std = c12.dot(r3) / c12.squaredNorm();
      CHECK(d.torsion == doctest::Approx(torsion_std).epsilon(1e-12));

      // N must point along the curvature vector.
      const Eigen::Vector3d Tp = (r2 - d.f1 * d.T) / d.f;
      CHECK((d.N - Tp.normalized()).norm() < 1e-12);
    }
  }
}

TEST_CASE("frame projections match direct dot products") {
  for (const auto& spec : {kCircular, kTall, kFlat8}) {
    for (double phi : kPhis) {
      const FrenetData d = frenet(spec, phi);
      const FrameProjections fp = frame_projections(spec, phi);
      const Eigen::Vector3d i{1, 0, 0}, j{0, 1, 0}, k{0, 0, 1};
      const Eigen::Vector3d ph{-std::sin(phi), std::cos(phi), 0};

      CHECK(fp.i_T == doctest::Approx(i.dot(d.T)).epsilon(1e-12));
      CHECK(fp.i_N == doctest::Approx(i.dot(d.N)).epsilon(1e-12));
      CHECK(fp.i_B == doctest::Approx(i.dot(d.B)).epsilon(1e-12));
      CHECK(fp.j_T == doctest::Approx(j.dot(d.T)).epsilon(1e-12));
      CHECK(fp.j_N == doctest::Approx(j.dot(d.N)).epsilon(1e-12));
      CHECK(fp.j_B == doctest::Approx(j.dot(d.B)).epsilon(1e-12));
      CHECK(fp.k_T == doctest::Approx(k.dot(d.T)).epsilon(1e-12));
      CHECK(fp.k_N == doctest::Approx(k.dot(d.N)).epsilon(1e-12));
      CHECK(fp.k_B == doctest::Approx(k.dot(d.B)).epsilon(1e-12));
      CHECK(fp.phi_T == doctest::Approx(ph.dot(d.T)).epsilon(1e-12));
      CHECK(fp.phi_N == doctest::Approx(ph.dot(d.N)).epsilon(1e-12));
      CHECK(fp.phi_B == doctest::Approx(ph.dot(d.B)).epsilon(1e-12));
    }
  }
}

TEST_CASE("arc length of the circular 4-turn helix") {
  CHECK(arc_length(kCircular) == doctest::Approx(14.190100249319515).epsilon(1e-12));
}

TEST_CASE("arc length approaches the circle for a thin helix") {
  const HelixSpec thin{1.0, 1e-4, 1e-4, 4};
  CHECK(std::abs(arc_length(thin) - 2.0 * M_PI) < 1e-3);
}
