#include "ethm/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "ethm/eigensolver.hpp"

namespace ethm {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ETHM_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

std::vector<MomentRecord> evaluate_point(const SweepPlan& plan, double value) {
  HelixSpec spec = plan.spec;
  FieldSpec field = plan.field;
  switch (plan.kind) {
    case SweepKind::theta:
      field = FieldSpec::from_polar(plan.tau_max, value, plan.field.phi_M);
      break;
    case SweepKind::flux_tau0:
      field.tau0 = value;
      break;
    case SweepKind::flux_tau1:
      field.tau1 = value;
      break;
    case SweepKind::eccentricity_b:
      spec.b = value;
      break;
    case SweepKind::eccentricity_a:
      spec.a = value;
      break;
    case SweepKind::single_point:
      break;
  }

  const int dim = 2 * plan.basis.n_max + 1;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<MomentRecord> out;
  out.reserve(plan.p_list.size() * dim);

  for (int p : plan.p_list) {
    BasisSpec basis = plan.basis;
    basis.p = p;
    auto blank = [&](int alpha) {
      MomentRecord rec;
      rec.spec = spec;
      rec.field = field;
      rec.basis = basis;
      rec.alpha = alpha;
      rec.sweep_param = value;
      return rec;
    };
    try {
      const HamiltonianMatrix H = assemble(spec, field, basis, plan.include_vmag);
      const EigenSolution sol = eigh(H);
      for (int alpha = 0; alpha < dim; ++alpha) {
        MomentRecord rec = blank(alpha);
        rec.eigenvalue = sol.eigenvalues[alpha];
        try {
          rec.moment = toroidal_moment(spec, basis, sol, alpha, plan.model, field);
        } catch (const std::exception& e) {
          rec.moment.setConstant(nan);
          rec.error = e.what();
        }
        out.push_back(std::move(rec));
      }
    } catch (const std::exception& e) {
      for (int alpha = 0; alpha < dim; ++alpha) {
        MomentRecord rec = blank(alpha);
        rec.eigenvalue = nan;
        rec.moment.setConstant(nan);
        rec.error = e.what();
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

}  // namespace

SweepKind parse_sweep_kind(const std::string& name) {
  if (name == "theta") return SweepKind::theta;
  if (name == "flux_tau0") return SweepKind::flux_tau0;
  if (name == "flux_tau1") return SweepKind::flux_tau1;
  if (name == "eccentricity_b") return SweepKind::eccentricity_b;
  if (name == "eccentricity_a") return SweepKind::eccentricity_a;
  if (name == "single_point") return SweepKind::single_point;
  throw std::invalid_argument("unknown sweep kind: " + name);
}

std::string to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::theta: return "theta";
    case SweepKind::flux_tau0: return "flux_tau0";
    case SweepKind::flux_tau1: return "flux_tau1";
    case SweepKind::eccentricity_b: return "eccentricity_b";
    case SweepKind::eccentricity_a: return "eccentricity_a";
    case SweepKind::single_point: return "single_point";
  }
  return "?";
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format: " + name);
}

std::string to_string(OutputFormat format) {
  return format == OutputFormat::csv ? "csv" : "json";
}

void SweepPlan::validate() const {
  if (grid.empty()) throw std::invalid_argument("SweepPlan: grid is empty");
  if (kind == SweepKind::single_point && grid.size() != 1)
    throw std::invalid_argument("SweepPlan: single_point takes exactly one grid entry");
  if (grid.size() > 1) {
    const bool inc = grid[1] > grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i) {
      if (inc ? !(grid[i] > grid[i - 1]) : !(grid[i] < grid[i - 1]))
        throw std::invalid_argument("SweepPlan: grid must be strictly monotone");
    }
  }
  if (p_list.empty()) throw std::invalid_argument("SweepPlan: p_list is empty");
  basis.validate();
  for (double v : grid) {
    HelixSpec s = spec;
    if (kind == SweepKind::eccentricity_b) s.b = v;
    if (kind == SweepKind::eccentricity_a) s.a = v;
    s.validate();
  }
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) return {lo};
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + i * (hi - lo) / (n - 1);
  return out;
}

std::vector<MomentRecord> run_sweep(const SweepPlan& plan) {
  plan.validate();
  const int npts = static_cast<int>(plan.grid.size());
  std::vector<std::vector<MomentRecord>> slots(npts);

  std::atomic<int> next{0};
  auto work = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= npts) break;
      slots[i] = evaluate_point(plan, plan.grid[i]);
    }
  };

  const int nw = std::min(resolve_workers(plan.workers), npts);
  if (nw <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nw - 1);
    for (int t = 0; t < nw - 1; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
  }

  std::vector<MomentRecord> records;
  for (auto& slot : slots) {
    for (auto& rec : slot) records.push_back(std::move(rec));
  }
  return records;
}

void emit_csv(const std::vector<MomentRecord>& records, std::ostream& out) {
  out << "sweep_param,R,a,b,omega,p,alpha,tau0,tau1,theta,phi_M,"
         "eigenvalue,TM_x,TM_y,TM_z,error\n";
  for (const auto& rec : records) {
    out << fmt17(rec.sweep_param) << ',' << fmt17(rec.spec.R) << ',' << fmt17(rec.spec.a) << ','
        << fmt17(rec.spec.b) << ',' << rec.spec.omega << ',' << rec.basis.p << ',' << rec.alpha
        << ',' << fmt17(rec.field.tau0) << ',' << fmt17(rec.field.tau1) << ','
        << fmt17(rec.field.theta()) << ',' << fmt17(rec.field.phi_M) << ','
        << fmt17(rec.eigenvalue) << ',' << fmt17(rec.moment.x()) << ',' << fmt17(rec.moment.y())
        << ',' << fmt17(rec.moment.z()) << ',' << csv_escape(rec.error) << '\n';
  }
}

void emit_json(const std::vector<MomentRecord>& records, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json row;
    row["sweep_param"] = rec.sweep_param;
    row["R"] = rec.spec.R;
    row["a"] = rec.spec.a;
    row["b"] = rec.spec.b;
    row["omega"] = rec.spec.omega;
    row["p"] = rec.basis.p;
    row["alpha"] = rec.alpha;
    row["tau0"] = rec.field.tau0;
    row["tau1"] = rec.field.tau1;
    row["theta"] = rec.field.theta();
    row["phi_M"] = rec.field.phi_M;
    row["eigenvalue"] = rec.eigenvalue;
    row["TM_x"] = rec.moment.x();
    row["TM_y"] = rec.moment.y();
    row["TM_z"] = rec.moment.z();
    row["error"] = rec.error;
    arr.push_back(std::move(row));
  }
  out << arr.dump(2) << '\n';
}

void emit(const std::vector<MomentRecord>& records, OutputFormat format,
          const std::string& path) {
  if (records.empty()) throw std::invalid_argument("emit: no records");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit: cannot open output file: " + path);
  if (format == OutputFormat::csv) {
    emit_csv(records, out);
  } else {
    emit_json(records, out);
  }
  out.flush();
  if (!out) throw std::runtime_error("emit: write failed: " + path);
}

std::vector<MomentRecord> parse_csv(std::istream& in) {
  std::vector<MomentRecord> records;
  std::string line;
  if (!std::getline(in, line)) return records;

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string::size_type start = 0;
    for (int c = 0; c < 15; ++c) {
      const auto comma = line.find(',', start);
      if (comma == std::string::npos)
        throw std::runtime_error("parse_csv: malformed row: " + line);
      cells.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    std::string err = line.substr(start);
    if (err.size() >= 2 && err.front() == '"' && err.back() == '"') {
      std::string unq;
      for (std::size_t i = 1; i + 1 < err.size(); ++i) {
        if (err[i] == '"' && i + 2 < err.size() && err[i + 1] == '"') ++i;
        unq += err[i];
      }
      err = unq;
    }

    MomentRecord rec;
    rec.sweep_param = std::strtod(cells[0].c_str(), nullptr);
    rec.spec.R = std::strtod(cells[1].c_str(), nullptr);
    rec.spec.a = std::strtod(cells[2].c_str(), nullptr);
    rec.spec.b = std::strtod(cells[3].c_str(), nullptr);
    rec.spec.omega = std::atoi(cells[4].c_str());
    rec.basis.p = std::atoi(cells[5].c_str());
    rec.alpha = std::atoi(cells[6].c_str());
    rec.field.tau0 = std::strtod(cells[7].c_str(), nullptr);
    rec.field.tau1 = std::strtod(cells[8].c_str(), nullptr);
    rec.field.phi_M = std::strtod(cells[10].c_str(), nullptr);
    rec.eigenvalue = std::strtod(cells[11].c_str(), nullptr);
    rec.moment.x() = std::strtod(cells[12].c_str(), nullptr);
    rec.moment.y() = std::strtod(cells[13].c_str(), nullptr);
    rec.moment.z() = std::strtod(cells[14].c_str(), nullptr);
    rec.error = err;
    records.push_back(std::move(rec));
  }
  return records;
}

std::string describe_plan(const SweepPlan& plan) {
  std::ostringstream out;
  out << "kind = " << to_string(plan.kind) << '\n';
  out << "grid = " << plan.grid.size() << " points";
  if (!plan.grid.empty())
    out << " [" << fmt17(plan.grid.front()) << ", " << fmt17(plan.grid.back()) << "]";
  out << '\n';
  out << "R = " << fmt17(plan.spec.R) << '\n';
  out << "a = " << fmt17(plan.spec.a) << '\n';
  out << "b = " << fmt17(plan.spec.b) << '\n';
  out << "omega = " << plan.spec.omega << '\n';
  out << "p_list =";
  for (int p : plan.p_list) out << ' ' << p;
  out << '\n';
  out << "n_max = " << plan.basis.n_max << '\n';
  out << "quad_points = " << plan.basis.quad_points << '\n';
  out << "tau0 = " << fmt17(plan.field.tau0) << '\n';
  out << "tau1 = " << fmt17(plan.field.tau1) << '\n';
  out << "tau_max = " << fmt17(plan.tau_max) << '\n';
  out << "phi_M = " << fmt17(plan.field.phi_M) << '\n';
  out << "current_model = " << to_string(plan.model) << '\n';
  out << "include_vmag = " << (plan.include_vmag ? "true" : "false") << '\n';
  out << "format = " << to_string(plan.format) << '\n';
  out << "output = " << (plan.output_path.empty() ? "(stdout)" : plan.output_path) << '\n';
  out << "workers = " << (plan.workers > 0 ? std::to_string(plan.workers) : "auto") << '\n';
  return out.str();
}

SweepPlan load_plan(std::istream& in) {
  SweepPlan plan;
  bool saw_theta = false;
  double theta = 0.0;
  std::string line;
  int lineno = 0;

  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos) fail("expected key=value");

    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) fail("expected key=value");

    auto as_double = [&]() {
      char* end = nullptr;
      const double v = std::strtod(val.c_str(), &end);
      if (end == val.c_str() || *end != '\0') fail("bad number for " + key + ": " + val);
      return v;
    };
    auto as_int = [&]() {
      const double v = as_double();
      if (v != static_cast<int>(v)) fail("expected integer for " + key);
      return static_cast<int>(v);
    };
    auto as_bool = [&]() {
      if (val == "true" || val == "1") return true;
      if (val == "false" || val == "0") return false;
      fail("expected true/false for " + key);
      return false;
    };
    auto split_list = [&](const std::string& s) {
      std::vector<std::string> parts;
      std::string::size_type pos = 0;
      while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        const auto end = comma == std::string::npos ? s.size() : comma;
        parts.push_back(trim(s.substr(pos, end - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      return parts;
    };

    if (key == "kind") {
      plan.kind = parse_sweep_kind(val);
    } else if (key == "grid") {
      const auto colon1 = val.find(':');
      if (colon1 != std::string::npos) {
        const auto colon2 = val.find(':', colon1 + 1);
        if (colon2 == std::string::npos) fail("grid range needs lo:hi:n");
        const double lo = std::strtod(val.substr(0, colon1).c_str(), nullptr);
        const double hi = std::strtod(val.substr(colon1 + 1, colon2 - colon1 - 1).c_str(), nullptr);
        const int n = std::atoi(val.substr(colon2 + 1).c_str());
        if (n < 1) fail("grid range needs n >= 1");
        plan.grid = linspace(lo, hi, n);
      } else {
        plan.grid.clear();
        for (const auto& part : split_list(val))
          plan.grid.push_back(std::strtod(part.c_str(), nullptr));
      }
    } else if (key == "R") {
      plan.spec.R = as_double();
    } else if (key == "a") {
      plan.spec.a = as_double();
    } else if (key == "b") {
      plan.spec.b = as_double();
    } else if (key == "omega") {
      plan.spec.omega = as_int();
    } else if (key == "p_list") {
      plan.p_list.clear();
      for (const auto& part : split_list(val)) plan.p_list.push_back(std::atoi(part.c_str()));
    } else if (key == "n_max") {
      plan.basis.n_max = as_int();
    } else if (key == "quad_points") {
      plan.basis.quad_points = as_int();
    } else if (key == "tau0") {
      plan.field.tau0 = as_double();
    } else if (key == "tau1") {
      plan.field.tau1 = as_double();
    } else if (key == "theta") {
      theta = as_double();
      saw_theta = true;
    } else if (key == "phi_M") {
      plan.field.phi_M = as_double();
    } else if (key == "B_max") {
      plan.tau_max = as_double();
    } else if (key == "current_model") {
      plan.model = parse_current_model(val);
    } else if (key == "include_vmag") {
      plan.include_vmag = as_bool();
    } else if (key == "output") {
      plan.output_path = val;
    } else if (key == "format") {
      plan.format = parse_output_format(val);
    } else if (key == "workers") {
      plan.workers = as_int();
    } else {
      fail("unknown key: " + key);
    }
  }

  if (saw_theta) {
    plan.field = FieldSpec::from_polar(plan.tau_max, theta, plan.field.phi_M);
  }
  return plan;
}

namespace {

struct Shape {
  const char* token;
  const char* label;
  double a;
  double b;
};

constexpr Shape kShapes[] = {
    {"circ", "circular", 0.5, 0.5},
    {"tall", "tall elliptic", 0.25, 0.75},
    {"flat", "flat elliptic", 0.75, 0.25},
};

SweepPlan base_plan(double a, double b, int omega, int p) {
  SweepPlan plan;
  plan.spec = HelixSpec{1.0, a, b, omega};
  plan.p_list = {p};
  return plan;
}

std::vector<Preset> build_presets() {
  std::vector<Preset> out;
  const double two_pi = 2.0 * M_PI;

  for (const Shape& sh : kShapes) {
    for (int omega : {4, 8}) {
      for (int p : {0, 1, 2}) {
        const std::string tag =
            std::string(sh.token) + "-w" + std::to_string(omega) + "-p" + std::to_string(p);
        const std::string where = std::string(sh.label) + " helix (a=" + fmt17(sh.a) +
                                  ", b=" + fmt17(sh.b) + "), " + std::to_string(omega) +
                                  " turns, p=" + std::to_string(p);

        SweepPlan theta = base_plan(sh.a, sh.b, omega, p);
        theta.kind = SweepKind::theta;
        theta.grid = linspace(0.0, two_pi, 241);
        theta.tau_max = 2.0;
        out.push_back({"theta-" + tag, "moment vs field tilt, " + where, theta});

        SweepPlan tau0 = base_plan(sh.a, sh.b, omega, p);
        tau0.kind = SweepKind::flux_tau0;
        tau0.grid = linspace(0.0, 5.0, 101);
        tau0.field = FieldSpec{0.0, 0.0, 0.0};
        out.push_back({"tau0-" + tag, "moment vs axial flux, " + where, tau0});

        SweepPlan tau1 = base_plan(sh.a, sh.b, omega, p);
        tau1.kind = SweepKind::flux_tau1;
        tau1.grid = linspace(0.0, 5.0, 101);
        tau1.field = FieldSpec{0.0, 0.0, 0.0};
        out.push_back({"tau1-" + tag, "moment vs in-plane flux, " + where, tau1});
      }
    }
  }

  for (int omega : {4, 8}) {
    for (int p : {0, 1, 2}) {
      const std::string suffix = "-w" + std::to_string(omega) + "-p" + std::to_string(p);
      const std::string where =
          std::to_string(omega) + " turns, p=" + std::to_string(p) + ", axial flux tau0=2";

      SweepPlan eccb = base_plan(0.25, 0.5, omega, p);
      eccb.kind = SweepKind::eccentricity_b;
      eccb.grid = linspace(0.1, 0.9, 81);
      eccb.field = FieldSpec{2.0, 0.0, 0.0};
      out.push_back(
          {"eccb" + suffix, "moment vs vertical semi-axis b at a=0.25, " + where, eccb});

      SweepPlan ecca = base_plan(0.5, 0.25, omega, p);
      ecca.kind = SweepKind::eccentricity_a;
      ecca.grid = linspace(0.1, 0.9, 81);
      ecca.field = FieldSpec{2.0, 0.0, 0.0};
      out.push_back(
          {"ecca" + suffix, "moment vs horizontal semi-axis a at b=0.25, " + where, ecca});
    }
  }

  const std::pair<const char*, const char*> aliases[] = {
      {"fig1a", "theta-circ-w4-p0"},  {"fig1b", "theta-circ-w8-p0"},
      {"fig2a", "theta-tall-w4-p0"},  {"fig2b", "theta-flat-w4-p0"},
      {"fig2c", "theta-tall-w8-p0"},  {"fig2d", "theta-flat-w8-p0"},
      {"fig3a", "theta-circ-w4-p1"},  {"fig3b", "theta-circ-w8-p1"},
      {"fig4a", "theta-tall-w4-p1"},  {"fig4b", "theta-flat-w4-p1"},
      {"fig4c", "theta-tall-w8-p1"},  {"fig4d", "theta-flat-w8-p1"},
      {"fig5a", "theta-circ-w4-p2"},  {"fig5b", "theta-circ-w8-p2"},
      {"fig6a", "theta-tall-w4-p2"},  {"fig6b", "theta-flat-w4-p2"},
      {"fig6c", "theta-tall-w8-p2"},  {"fig6d", "theta-flat-w8-p2"},
      {"fig7a", "tau0-circ-w4-p2"},   {"fig7b", "tau0-circ-w8-p2"},
      {"fig8a", "tau0-tall-w4-p0"},   {"fig8b", "tau0-flat-w4-p0"},
      {"fig8c", "tau0-tall-w8-p0"},   {"fig8d", "tau0-flat-w8-p0"},
      {"fig9a", "eccb-w4-p2"},        {"fig9b", "eccb-w8-p2"},
      {"fig10a", "ecca-w4-p2"},       {"fig10b", "ecca-w8-p2"},
  };
  for (const auto& [alias, target] : aliases) {
    const Preset* t = nullptr;
    for (const auto& pr : out) {
      if (pr.name == target) {
        t = &pr;
        break;
      }
    }
    out.push_back({alias, std::string("alias of ") + target + "; " + t->description, t->plan});
  }
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = build_presets();
  return table;
}

const Preset* find_preset(const std::string& name) {
  for (const auto& pr : presets()) {
    if (pr.name == name) return &pr;
  }
  return nullptr;
}

}  // namespace ethm
