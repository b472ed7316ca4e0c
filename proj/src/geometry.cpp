#include "ethm/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "ethm/errors.hpp"

namespace ethm {

void HelixSpec::validate() const {
  if (!(R > 0.0) || !std::isfinite(R)) throw std::invalid_argument("HelixSpec: R must be positive and finite");
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("HelixSpec: a must be positive and finite");
  if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("HelixSpec: b must be positive and finite");
  if (!(a < R)) throw std::invalid_argument("HelixSpec: need a < R so the curve stays off the symmetry axis");
  if (omega < 1) throw std::invalid_argument("HelixSpec: omega must be a positive integer");
}

Eigen::Vector3d position(const HelixSpec& spec, double phi) {
  const double wp = spec.omega * phi;
  const double W = spec.R + spec.a * std::cos(wp);
  return {W * std::cos(phi), W * std::sin(phi), spec.b * std::sin(wp)};
}

Eigen::Vector3d curve_d1(const HelixSpec& spec, double phi) {
  const double w = spec.omega;
  const double wp = w * phi;
  const double c = std::cos(phi), s = std::sin(phi);
  const double W = spec.R + spec.a * std::cos(wp);
  const double Wd = -spec.a * w * std::sin(wp);
  return {Wd * c - W * s, Wd * s + W * c, spec.b * w * std::cos(wp)};
}

Eigen::Vector3d curve_d2(const HelixSpec& spec, double phi) {
  const double w = spec.omega;
  const double wp = w * phi;
  const double c = std::cos(phi), s = std::sin(phi);
  const double W = spec.R + spec.a * std::cos(wp);
  const double Wd = -spec.a * w * std::sin(wp);
  const double Wdd = -spec.a * w * w * std::cos(wp);
  return {Wdd * c - 2.0 * Wd * s - W * c, Wdd * s + 2.0 * Wd * c - W * s,
          -spec.b * w * w * std::sin(wp)};
}

Eigen::Vector3d curve_d3(const HelixSpec& spec, double phi) {
  const double w = spec.omega;
  const double wp = w * phi;
  const double c = std::cos(phi), s = std::sin(phi);
  const double W = spec.R + spec.a * std::cos(wp);
  const double Wd = -spec.a * w * std::sin(wp);
  const double Wdd = -spec.a * w * w * std::cos(wp);
  const double Wddd = spec.a * w * w * w * std::sin(wp);
  return {Wddd * c - 3.0 * Wdd * s - 3.0 * Wd * c + W * s,
          Wddd * s + 3.0 * Wdd * c - 3.0 * Wd * s - W * c,
          -spec.b * w * w * w * std::cos(wp)};
}

Metric metric(const HelixSpec& spec, double phi) {
  const double w = spec.omega;
  const double wp = w * phi;
  const double sw = std::sin(wp), cw = std::cos(wp);

  Metric m;
  m.W = spec.R + spec.a * cw;
  // P^2 = a^2 sin^2(w phi) + b^2 cos^2(w phi)
  const double P2 = spec.a * spec.a * sw * sw + spec.b * spec.b * cw * cw;
  m.P = std::sqrt(P2);

  const double f2sq = w * w * P2 + m.W * m.W;
  m.f = std::sqrt(f2sq);

  // (f^2)' and (f^2)'' by the chain rule on P^2 and W.
  const double Wd = -spec.a * w * sw;
  const double Wdd = -spec.a * w * w * cw;
  const double dP2 = w * (spec.a * spec.a - spec.b * spec.b) * std::sin(2.0 * wp);
  const double ddP2 = 2.0 * w * w * (spec.a * spec.a - spec.b * spec.b) * std::cos(2.0 * wp);
  const double df2 = w * w * dP2 + 2.0 * m.W * Wd;
  const double ddf2 = w * w * ddP2 + 2.0 * (Wd * Wd + m.W * Wdd);

  m.f1 = df2 / (2.0 * m.f);
  m.f2 = ddf2 / (2.0 * m.f) - df2 * df2 / (4.0 * f2sq * m.f);
  return m;
}

FrenetData frenet(const HelixSpec& spec, double phi) {
  const Metric m = metric(spec, phi);
  const double w = spec.omega;
  const double wp = w * phi;
  const double sw = std::sin(wp), cw = std::cos(wp);
  const double f2sq = m.f * m.f;

  // Curvature components along the horizontal-vertical split of the normal
  // plane; kappa = sqrt(P1^2 + P2^2).
  const double P1 = -spec.b * (spec.a * w * w + m.W * cw) / (f2sq * m.P);
  const double P2 = sw / (m.f * m.P) *
                    (spec.a + (w * w * m.W * (spec.a * spec.a - spec.b * spec.b) * cw +
                               m.P * m.P * spec.a * w * w) /
                                  f2sq);
  const double kappa = std::hypot(P1, P2);
  if (!(kappa > 1e-12)) {
    throw FrameSingularity("frenet: curvature vanished, normal direction undefined");
  }

  FrenetData d;
  d.phi = phi;
  d.W = m.W;
  d.P = m.P;
  d.f = m.f;
  d.f1 = m.f1;
  d.f2 = m.f2;
  d.kappa = kappa;

  const Eigen::Vector3d r1 = curve_d1(spec, phi);
  const Eigen::Vector3d r2 = curve_d2(spec, phi);
  const Eigen::Vector3d r3 = curve_d3(spec, phi);

  d.T = r1 / m.f;
  d.N = ((r2 - m.f1 * d.T) / (f2sq * kappa)).normalized();
  d.B = d.T.cross(d.N);

  const Eigen::Vector3d c12 = r1.cross(r2);
  d.torsion = c12.dot(r3) / c12.squaredNorm();
  return d;
}

FrameProjections frame_projections(const HelixSpec& spec, double phi) {
  const Metric m = metric(spec, phi);
  const double w = spec.omega;
  const double wp = w * phi;
  const double sw = std::sin(wp), cw = std::cos(wp);
  const double c = std::cos(phi), s = std::sin(phi);
  const double f2sq = m.f * m.f;

  const double P1 = -spec.b * (spec.a * w * w + m.W * cw) / (f2sq * m.P);
  const double P2 = sw / (m.f * m.P) *
                    (spec.a + (w * w * m.W * (spec.a * spec.a - spec.b * spec.b) * cw +
                               m.P * m.P * spec.a * w * w) /
                                  f2sq);
  const double kappa = std::hypot(P1, P2);
  if (!(kappa > 1e-12)) {
    throw FrameSingularity("frame_projections: curvature vanished");
  }

  FrameProjections fp;
  fp.i_T = -(spec.a * w * sw * c + m.W * s) / m.f;
  fp.j_T = (-spec.a * w * sw * s + m.W * c) / m.f;
  fp.k_T = spec.b * w * cw / m.f;

  const double kP = kappa * m.P;
  const double kf = kappa * m.f;
  fp.i_N = (P1 * spec.b * cw * c) / kP - (P2 * spec.a * m.W * sw * c) / (kP * m.f) +
           (P2 * m.P * w * s) / kf;
  fp.i_B = (P2 * spec.b * cw * c) / kP + (P1 * spec.a * m.W * sw * c) / (kP * m.f) -
           (P1 * m.P * w * s) / kf;
  fp.j_N = (P1 * spec.b * cw * s) / kP - (P2 * spec.a * m.W * sw * s) / (kP * m.f) -
           (P2 * m.P * w * c) / kf;
  fp.j_B = (P2 * spec.b * cw * s) / kP + (P1 * spec.a * m.W * sw * s) / (kP * m.f) +
           (P1 * m.P * w * c) / kf;
  fp.k_N = (P1 * spec.a * sw + P2 * spec.b * m.W * cw / m.f) / kP;
  fp.k_B = (P2 * spec.a * sw - P1 * spec.b * m.W * cw / m.f) / kP;

  fp.phi_T = m.W / m.f;
  fp.phi_N = -w * P2 * m.P / kf;
  fp.phi_B = w * P1 * m.P / kf;
  return fp;
}

double arc_length(const HelixSpec& spec, int quad_points) {
  if (quad_points < 8) quad_points = 8;
  const double two_pi = 2.0 * M_PI;

  auto trapz = [&](int n) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      acc += metric(spec, two_pi * i / n).f;
    }
    return acc * two_pi / n;
  };

  double prev = trapz(quad_points);
  for (int n = 2 * quad_points; n <= (1 << 22); n *= 2) {
    const double cur = trapz(n);
    if (std::abs(cur - prev) <= 1e-12 * std::abs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace ethm
