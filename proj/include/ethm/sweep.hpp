#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ethm/field.hpp"
#include "ethm/geometry.hpp"
#include "ethm/hamiltonian.hpp"
#include "ethm/observables.hpp"

namespace ethm {

// Which parameter the grid values are applied to. theta tilts a field of
// fixed strength tau_max; the flux kinds scan one flux component with the
// other taken from the base field; the eccentricity kinds scan one minor
// semi-axis of the helix.
enum class SweepKind { theta, flux_tau0, flux_tau1, eccentricity_b, eccentricity_a, single_point };

enum class OutputFormat { csv, json };

SweepKind parse_sweep_kind(const std::string& name);
std::string to_string(SweepKind kind);
OutputFormat parse_output_format(const std::string& name);
std::string to_string(OutputFormat format);

// One experiment: a grid of values for the swept parameter applied on top of
// base helix/field/basis settings, evaluated for every p in p_list and every
// eigenstate alpha.
struct SweepPlan {
  SweepKind kind = SweepKind::single_point;
  std::vector<double> grid{0.0};
  HelixSpec spec;
  FieldSpec field;
  double tau_max = 2.0;
  BasisSpec basis;
  std::vector<int> p_list{0};
  CurrentModel model = CurrentModel::paper;
  bool include_vmag = true;
  std::string output_path;
  OutputFormat format = OutputFormat::csv;
  int workers = 0;  // 0: ETHM_WORKERS env var, then hardware concurrency

  // Grid nonempty and strictly monotone; every grid point must yield a valid
  // HelixSpec; single_point takes exactly one grid entry.
  void validate() const;
};

std::vector<double> linspace(double lo, double hi, int n);

// Evaluates the plan. Grid points are independent work items handed to a
// small thread pool; records are assembled in grid order regardless of the
// execution schedule, so serial and parallel runs emit identical files.
// A failure at one point (frame singularity, unconverged quadrature, solver
// breakdown) is recorded in that point's rows via the error field and NaN
// values, never aborting the sweep.
std::vector<MomentRecord> run_sweep(const SweepPlan& plan);

// CSV columns, in order:
//   sweep_param,R,a,b,omega,p,alpha,tau0,tau1,theta,phi_M,
//   eigenvalue,TM_x,TM_y,TM_z,error
// Floats carry 17 significant digits. JSON is an array of objects with the
// same keys. Neither format embeds timestamps, keeping reruns bit-identical.
void emit_csv(const std::vector<MomentRecord>& records, std::ostream& out);
void emit_json(const std::vector<MomentRecord>& records, std::ostream& out);

// Writes to the given path (records must be nonempty); I/O failures carry the
// path in the exception message.
void emit(const std::vector<MomentRecord>& records, OutputFormat format, const std::string& path);

// Inverse of emit_csv over the emitted columns; fields the CSV does not carry
// (n_max, quad_points) take their defaults.
std::vector<MomentRecord> parse_csv(std::istream& in);

// Human-readable resolved-parameter echo, one key per line.
std::string describe_plan(const SweepPlan& plan);

// Line-oriented key=value config. Keys: kind, grid (lo:hi:n or a comma list),
// R, a, b, omega, p_list, n_max, quad_points, tau0, tau1, theta, phi_M,
// B_max, current_model, include_vmag, output, format, workers. '#' starts a
// comment. theta, when present, sets the field from (B_max, theta, phi_M).
SweepPlan load_plan(std::istream& in);

struct Preset {
  std::string name;
  std::string description;
  SweepPlan plan;
};

// Built-in experiments: the systematic family
// {theta,tau0,tau1}-{circ,tall,flat}-w{4,8}-p{0,1,2} plus
// {eccb,ecca}-w{4,8}-p{0,1,2}, and figure-panel aliases fig1a..fig10b.
const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

}  // namespace ethm
