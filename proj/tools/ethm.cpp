#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ethm/constants.hpp"
#include "ethm/eigensolver.hpp"
#include "ethm/errors.hpp"
#include "ethm/field.hpp"
#include "ethm/geometry.hpp"
#include "ethm/hamiltonian.hpp"
#include "ethm/observables.hpp"
#include "ethm/sweep.hpp"
#include "ethm/validate.hpp"
#include "ethm/version.hpp"

namespace {

struct Options {
  double R = 1.0;
  double a = 0.5;
  double b = 0.5;
  int omega = 4;
  int p = 0;
  int n_max = 2;
  int quad_points = 2048;
  std::optional<double> tau0;
  std::optional<double> tau1;
  std::optional<double> theta;
  double phi_M = 0.0;
  double B_max = 2.0;
  std::optional<double> R_meters;
  std::string model = "paper";
  bool no_vmag = false;
  std::string preset;
  std::string config;
  std::string output;
  std::string format = "csv";
  int workers = 0;
  bool list_presets = false;
};

void add_physics_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--R", opt.R, "major radius (unit of length)");
  cmd->add_option("--a", opt.a, "minor horizontal semi-axis");
  cmd->add_option("--b", opt.b, "minor vertical semi-axis");
  cmd->add_option("--omega", opt.omega, "number of turns");
  cmd->add_option("--p", opt.p, "angular quantum number");
  cmd->add_option("--n-max", opt.n_max, "winding basis cutoff, dimension 2 n_max + 1");
  cmd->add_option("--quad-points", opt.quad_points, "trapezoid nodes per period");
  cmd->add_option("--tau0", opt.tau0, "axial flux parameter e R^2 B_z / hbar");
  cmd->add_option("--tau1", opt.tau1, "in-plane flux parameter e R^2 B_rho / hbar");
  cmd->add_option("--theta", opt.theta,
                  "field tilt from the axis; with --B-max replaces --tau0/--tau1");
  cmd->add_option("--phi-M", opt.phi_M, "azimuth of the in-plane field component");
  cmd->add_option("--B-max", opt.B_max, "field strength used with --theta (tau units)");
  cmd->add_option("--R-meters", opt.R_meters,
                  "major radius in meters; field inputs are then in tesla");
  cmd->add_option("--current-model", opt.model, "current density model: paper|gauge_invariant");
  cmd->add_flag("--no-vmag", opt.no_vmag, "drop the curvature-coupled magnetic term");
}

// Flags beat the preset/config base; tesla inputs are scaled by e R_m^2/hbar.
ethm::FieldSpec resolve_field(const Options& opt) {
  double scale = 1.0;
  if (opt.R_meters) {
    scale = ethm::constants::elementary_charge * (*opt.R_meters) * (*opt.R_meters) /
            ethm::constants::hbar;
  }
  if (opt.tau0 || opt.tau1) {
    return ethm::FieldSpec::from_fluxes(scale * opt.tau0.value_or(0.0),
                                        scale * opt.tau1.value_or(0.0), opt.phi_M);
  }
  if (opt.theta) {
    return ethm::FieldSpec::from_polar(scale * opt.B_max, *opt.theta, opt.phi_M);
  }
  return ethm::FieldSpec{0.0, 0.0, opt.phi_M};
}

ethm::SweepPlan single_point_plan(const Options& opt) {
  ethm::SweepPlan plan;
  plan.kind = ethm::SweepKind::single_point;
  plan.grid = {0.0};
  plan.spec = ethm::HelixSpec{opt.R, opt.a, opt.b, opt.omega};
  plan.field = resolve_field(opt);
  plan.tau_max = opt.B_max;
  plan.basis.p = opt.p;
  plan.basis.n_max = opt.n_max;
  plan.basis.quad_points = opt.quad_points;
  plan.p_list = {opt.p};
  plan.model = ethm::parse_current_model(opt.model);
  plan.include_vmag = !opt.no_vmag;
  plan.output_path = opt.output;
  plan.format = ethm::parse_output_format(opt.format);
  plan.workers = opt.workers;
  return plan;
}

void echo_plan(const ethm::SweepPlan& plan) {
  std::cerr << "resolved parameters:\n" << ethm::describe_plan(plan);
}

int run_eigen(const Options& opt) {
  const ethm::SweepPlan plan = single_point_plan(opt);
  echo_plan(plan);

  const ethm::HamiltonianMatrix H =
      ethm::assemble(plan.spec, plan.field, plan.basis, plan.include_vmag);
  const ethm::EigenSolution sol = ethm::eigh(H);

  const Eigen::IOFormat wide(Eigen::FullPrecision, 0, "  ", "\n", "  ");
  std::cout << "hermiticity defect = " << ethm::hermiticity_defect(H) << '\n';
  std::cout << "eigenvalues (2 m E R^2 / hbar^2, ascending):\n"
            << sol.eigenvalues.transpose().format(wide) << '\n';
  std::cout << "eigenvectors (columns, winding order n = -n_max..n_max):\n"
            << sol.eigenvectors.format(wide) << '\n';
  std::cout << "residuals:\n" << sol.residuals.transpose().format(wide) << '\n';
  return 0;
}

int run_moment(const Options& opt) {
  const ethm::SweepPlan plan = single_point_plan(opt);
  echo_plan(plan);

  const std::vector<ethm::MomentRecord> records = ethm::run_sweep(plan);
  if (plan.output_path.empty()) {
    if (plan.format == ethm::OutputFormat::csv) {
      ethm::emit_csv(records, std::cout);
    } else {
      ethm::emit_json(records, std::cout);
    }
  } else {
    ethm::emit(records, plan.format, plan.output_path);
  }
  for (const auto& rec : records) {
    if (!rec.error.empty()) {
      std::cerr << "moment: point failed: " << rec.error << '\n';
      return 1;
    }
  }
  return 0;
}

int run_sweep_cmd(const Options& opt, const CLI::App* cmd) {
  if (opt.list_presets) {
    for (const auto& pr : ethm::presets()) {
      std::cout << pr.name << "\t" << pr.description << '\n';
    }
    return 0;
  }

  ethm::SweepPlan plan;
  if (!opt.preset.empty()) {
    const ethm::Preset* preset = ethm::find_preset(opt.preset);
    if (preset == nullptr) {
      std::cerr << "unknown preset: " << opt.preset << " (see --list-presets)\n";
      return 2;
    }
    plan = preset->plan;
  } else if (!opt.config.empty()) {
    std::ifstream in(opt.config);
    if (!in) {
      std::cerr << "cannot open config file: " << opt.config << '\n';
      return 2;
    }
    plan = ethm::load_plan(in);
  } else {
    std::cerr << "sweep needs --preset or --config\n";
    return 2;
  }

  auto passed = [&](const char* flag) { return cmd->count(flag) > 0; };
  if (passed("--R")) plan.spec.R = opt.R;
  if (passed("--a")) plan.spec.a = opt.a;
  if (passed("--b")) plan.spec.b = opt.b;
  if (passed("--omega")) plan.spec.omega = opt.omega;
  if (passed("--p")) plan.p_list = {opt.p};
  if (passed("--n-max")) plan.basis.n_max = opt.n_max;
  if (passed("--quad-points")) plan.basis.quad_points = opt.quad_points;
  if (passed("--tau0") || passed("--tau1") || passed("--theta") || passed("--phi-M")) {
    Options base = opt;
    if (!passed("--tau0") && plan.kind != ethm::SweepKind::theta) base.tau0 = plan.field.tau0;
    if (!passed("--tau1") && plan.kind != ethm::SweepKind::theta) base.tau1 = plan.field.tau1;
    if (!passed("--phi-M")) base.phi_M = plan.field.phi_M;
    plan.field = resolve_field(base);
  }
  if (passed("--B-max")) plan.tau_max = opt.B_max;
  if (passed("--current-model")) plan.model = ethm::parse_current_model(opt.model);
  if (passed("--no-vmag")) plan.include_vmag = false;
  if (passed("--output")) plan.output_path = opt.output;
  if (passed("--format")) plan.format = ethm::parse_output_format(opt.format);
  if (passed("--workers")) plan.workers = opt.workers;

  echo_plan(plan);
  const std::vector<ethm::MomentRecord> records = ethm::run_sweep(plan);
  if (plan.output_path.empty()) {
    if (plan.format == ethm::OutputFormat::csv) {
      ethm::emit_csv(records, std::cout);
    } else {
      ethm::emit_json(records, std::cout);
    }
  } else {
    ethm::emit(records, plan.format, plan.output_path);
    std::cerr << "wrote " << records.size() << " rows to " << plan.output_path << '\n';
  }
  return 0;
}

int run_hermiticity_demo(const Options& opt) {
  Options demo = opt;
  if (!demo.tau0 && !demo.tau1 && !demo.theta) {
    demo.tau0 = 1.0;
    demo.tau1 = 1.0;
  }
  const ethm::SweepPlan plan = single_point_plan(demo);
  echo_plan(plan);

  const double with_vmag =
      ethm::hermiticity_defect(ethm::assemble(plan.spec, plan.field, plan.basis, true));
  const double without_vmag =
      ethm::hermiticity_defect(ethm::assemble(plan.spec, plan.field, plan.basis, false));

  std::cout << "hermiticity defect with curvature-coupled magnetic term:    " << with_vmag
            << '\n';
  std::cout << "hermiticity defect without curvature-coupled magnetic term: " << without_vmag
            << '\n';
  const bool demonstrated = with_vmag < 1e-10 && without_vmag >= 1e-6;
  std::cout << (demonstrated ? "term restores hermiticity"
                             : "demonstration failed (unexpected defects)")
            << '\n';
  return demonstrated ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toroidal moments of a charged particle on an elliptic toroidal helix"};
  app.set_version_flag("--version", ethm::version);
  app.require_subcommand(1);

  Options opt;

  CLI::App* eigen_cmd = app.add_subcommand("eigen", "eigenvalues and eigenvectors at one point");
  add_physics_flags(eigen_cmd, opt);

  CLI::App* moment_cmd =
      app.add_subcommand("moment", "toroidal moment of every eigenstate at one point");
  add_physics_flags(moment_cmd, opt);
  moment_cmd->add_option("--output", opt.output, "output file (default stdout)");
  moment_cmd->add_option("--format", opt.format, "csv|json");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep preset or config");
  add_physics_flags(sweep_cmd, opt);
  sweep_cmd->add_option("--preset", opt.preset, "named experiment (see --list-presets)");
  sweep_cmd->add_option("--config", opt.config, "key=value plan file");
  sweep_cmd->add_option("--output", opt.output, "output file (default stdout)");
  sweep_cmd->add_option("--format", opt.format, "csv|json");
  sweep_cmd->add_option("--workers", opt.workers,
                        "worker threads (0: ETHM_WORKERS env var, then hardware)");
  sweep_cmd->add_flag("--list-presets", opt.list_presets, "list presets and exit");

  CLI::App* herm_cmd = app.add_subcommand(
      "hermiticity-demo", "show the defect with and without the curvature-coupled term");
  add_physics_flags(herm_cmd, opt);

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "run the oracle cross-check suite");
  (void)validate_cmd;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand("eigen")) return run_eigen(opt);
    if (app.got_subcommand("moment")) return run_moment(opt);
    if (app.got_subcommand("sweep")) return run_sweep_cmd(opt, sweep_cmd);
    if (app.got_subcommand("hermiticity-demo")) return run_hermiticity_demo(opt);
    if (app.got_subcommand("validate")) return ethm::run_validation(std::cout) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
