#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "ethm/eigensolver.hpp"
#include "ethm/field.hpp"
#include "ethm/geometry.hpp"
#include "ethm/hamiltonian.hpp"
#include "ethm/observables.hpp"
#include "ethm/sweep.hpp"
#include "ethm/validate.hpp"

using namespace ethm;

namespace {

int failures = 0;

void verdict(int k, const char* name, bool ok) {
  std::printf("[%d/8] %-28s %s\n", k, name, ok ? "PASS" : "FAIL");
  if (!ok) ++failures;
}

void detail(const std::string& line) { std::printf("      %s\n", line.c_str()); }

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

BasisSpec basis_for(int p, int n_max = 2) {
  BasisSpec b;
  b.p = p;
  b.n_max = n_max;
  return b;
}

const HelixSpec kCirc4{1.0, 0.5, 0.5, 4};
const HelixSpec kCirc8{1.0, 0.5, 0.5, 8};
const HelixSpec kTall4{1.0, 0.25, 0.75, 4};

// 1. The curvature-coupled magnetic term is what keeps the matrix Hermitian.
void criterion_hermiticity() {
  double worst_with = 0.0;
  double best_without = 1e30;
  for (int p : {0, 1, 2}) {
    for (double phi_M : {0.0, 0.7}) {
      const FieldSpec field{1.0, 1.0, phi_M};
      worst_with =
          std::max(worst_with, hermiticity_defect(assemble(kCirc4, field, basis_for(p), true)));
      best_without = std::min(best_without,
                              hermiticity_defect(assemble(kCirc4, field, basis_for(p), false)));
    }
  }
  const bool ok = worst_with < 1e-10 && best_without >= 1e-6;
  verdict(1, "hermiticity restoration", ok);
  detail("circular 4-turn helix, tau0 = tau1 = 1, p in {0,1,2}, phi_M in {0, 0.7}");
  detail("max defect with term    " + num(worst_with) + "  (limit 1e-10)");
  detail("min defect without term " + num(best_without) + "  (must be >= 1e-6)");
}

// 2. Zero-field ground-state moment against the classical loop value. The
// 8-turn circular helix is used: for 4 turns the p=2 family sits exactly on a
// basis-degeneracy point (q = +-2 couple into standing waves) where the
// moment collapses to zero and no classical comparison is possible.
void criterion_classical_limit() {
  const double frozen_dev[2] = {4.2256573464595704e-04, 6.5857037221149148e-04};

  bool match_ok = true;
  bool monotone_ok = true;
  bool frozen_ok = true;
  std::vector<std::string> lines;

  for (int pi = 0; pi < 2; ++pi) {
    const int p = pi + 1;
    const double classical = classical_moment(kCirc8, p).z();
    std::vector<double> devs;
    std::string seq;
    for (int n_max = 2; n_max <= 6; ++n_max) {
      const EigenSolution sol = eigh(assemble(kCirc8, FieldSpec{}, basis_for(p, n_max)));
      const BasisSpec basis = basis_for(p, n_max);
      const double tm_z =
          toroidal_moment(kCirc8, basis, sol, 0, CurrentModel::paper, FieldSpec{}).z();
      devs.push_back(std::abs(tm_z - classical) / std::abs(classical));
      if (n_max == 2) {
        lines.push_back("p=" + std::to_string(p) + " classical TM_z " + num(classical) +
                        ", quantum (n_max=2) " + num(tm_z));
      }
      seq += (n_max > 2 ? "  " : "") + num(devs.back());
    }
    lines.push_back("p=" + std::to_string(p) + " relative deviation, n_max = 2..6:");
    lines.push_back("  " + seq);

    match_ok = match_ok && devs[0] < 5e-3;
    for (std::size_t i = 1; i < devs.size(); ++i) {
      monotone_ok = monotone_ok && devs[i] <= devs[i - 1];
    }
    frozen_ok = frozen_ok && std::abs(devs[0] - frozen_dev[pi]) < 1e-12;
  }

  const bool ok = match_ok && monotone_ok && frozen_ok;
  verdict(2, "classical-limit oracle", ok);
  detail("circular 8-turn helix, zero field, ground state vs classical loop");
  for (const auto& line : lines) detail(line);
  detail(std::string("matches classical at n_max=2 (< 5e-3): ") + (match_ok ? "pass" : "FAIL"));
  detail(std::string("n_max=2 deviation equals frozen regression value: ") +
         (frozen_ok ? "pass" : "FAIL"));
  detail(std::string("deviation shrinks monotonically to n_max=6: ") +
         (monotone_ok ? "pass" : "FAIL"));
  if (!monotone_ok) {
    detail("the n_max=2 truncation error happens to cancel part of the intrinsic");
    detail("zero-point offset from the classical value, so enlarging the basis first");
    detail("raises the deviation by ~0.6% of itself before it settles; the sequence");
    detail("is converged (flat to machine precision) from n_max=3 on");
  }
}

// 3. Tilting the field into the plane kills the axial moment at p=0.
void criterion_theta_zeros() {
  double worst = 0.0;
  for (const HelixSpec& spec : {kCirc4, kCirc8}) {
    for (double theta : {M_PI / 2, 3 * M_PI / 2}) {
      const FieldSpec field = FieldSpec::from_polar(2.0, theta, 0.0);
      const BasisSpec basis = basis_for(0);
      const EigenSolution sol = eigh(assemble(spec, field, basis));
      for (int alpha = 0; alpha < 5; ++alpha) {
        const double tm_z =
            toroidal_moment(spec, basis, sol, alpha, CurrentModel::paper, field).z();
        worst = std::max(worst, std::abs(tm_z));
      }
    }
  }
  const bool ok = worst < 1e-3;
  verdict(3, "theta-sweep zeros", ok);
  detail("circular helix, p=0, omega in {4,8}, theta in {pi/2, 3pi/2}, all five states");
  detail("max |TM_z| " + num(worst) + "  (limit 1e-3)");
}

// 4. More turns give a larger peak moment, but not proportionally.
void criterion_omega_monotonicity() {
  double peak[2] = {0.0, 0.0};
  const char* names[2] = {"theta-circ-w4-p0", "theta-circ-w8-p0"};
  for (int i = 0; i < 2; ++i) {
    const SweepPlan plan = find_preset(names[i])->plan;
    for (const MomentRecord& rec : run_sweep(plan)) {
      if (rec.error.empty()) peak[i] = std::max(peak[i], std::abs(rec.moment.z()));
    }
  }
  const double ratio = peak[1] / peak[0];
  const bool ok = peak[1] > peak[0] && std::abs(ratio - 2.0) > 0.01;
  verdict(4, "omega growth, not linear", ok);
  detail("max_theta |TM_z|: 4 turns " + num(peak[0]) + ", 8 turns " + num(peak[1]));
  detail("ratio " + num(ratio) + " (must exceed 1 and differ from 2)");
}

// 5. The moment does not care where the in-plane field component points.
void criterion_azimuthal_invariance() {
  double worst = 0.0;
  for (const HelixSpec& spec : {kCirc4, kTall4}) {
    const BasisSpec basis = basis_for(1);
    std::vector<Eigen::Vector3d> base;
    for (double phi_M : {0.0, M_PI / 3, 1.1}) {
      const FieldSpec field = FieldSpec::from_polar(2.0, 0.9, phi_M);
      const EigenSolution sol = eigh(assemble(spec, field, basis));
      for (int alpha = 0; alpha < 5; ++alpha) {
        const Eigen::Vector3d tm =
            toroidal_moment(spec, basis, sol, alpha, CurrentModel::paper, field);
        if (phi_M == 0.0) {
          base.push_back(tm);
        } else {
          worst = std::max(worst, (tm - base[alpha]).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  const bool ok = worst < 1e-8;
  verdict(5, "azimuthal invariance", ok);
  detail("circular and tall helices, p=1, theta=0.9, tau_max=2, phi_M in {0, pi/3, 1.1}");
  detail("max |TM component change| " + num(worst) + "  (limit 1e-8)");
}

// 6. In-plane flux alone induces nothing at p=0.
void criterion_tau1_null() {
  const SweepPlan plan = find_preset("tau1-circ-w4-p0")->plan;
  double worst = 0.0;
  bool clean = true;
  for (const MomentRecord& rec : run_sweep(plan)) {
    clean = clean && rec.error.empty();
    if (rec.error.empty()) worst = std::max(worst, rec.moment.norm());
  }
  const bool ok = clean && worst < 1e-6;
  verdict(6, "tau1 null result at p=0", ok);
  detail("circular 4-turn helix, tau0=0, tau1 in [0,5] (101 points), all five states");
  detail("max |TM| " + num(worst) + "  (limit 1e-6)");
}

// 7. Independent oracle suite.
void criterion_oracles() {
  std::ostringstream log;
  const bool ok = run_validation(log);
  verdict(7, "oracle suites", ok);
  std::istringstream lines(log.str());
  std::string line;
  while (std::getline(lines, line)) detail(line);
}

// 8. Bit-identical output no matter how often or how parallel.
void criterion_determinism() {
  SweepPlan plan = find_preset("fig1a")->plan;
  auto render = [&](int workers) {
    plan.workers = workers;
    std::ostringstream out;
    emit_csv(run_sweep(plan), out);
    return out.str();
  };
  const std::string serial_a = render(1);
  const std::string serial_b = render(1);
  const std::string parallel = render(4);
  const bool ok = serial_a == serial_b && serial_a == parallel;
  verdict(8, "determinism", ok);
  detail("preset fig1a run twice serially and once with 4 workers");
  detail(std::string("serial repeat identical: ") + (serial_a == serial_b ? "yes" : "NO"));
  detail(std::string("1 vs 4 workers identical: ") + (serial_a == parallel ? "yes" : "NO"));
}

}  // namespace

int main() {
  criterion_hermiticity();
  criterion_classical_limit();
  criterion_theta_zeros();
  criterion_omega_monotonicity();
  criterion_azimuthal_invariance();
  criterion_tau1_null();
  criterion_oracles();
  criterion_determinism();

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
