#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "spinctrl/bounds.hpp"
#include "spinctrl/hybrid.hpp"
#include "spinctrl/propagator.hpp"
#include "spinctrl/schedule_io.hpp"
#include "spinctrl/spin_core.hpp"
#include "spinctrl/sweep.hpp"
#include "spinctrl/synthesis.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

// Shortest round-trip decimal form.
std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void check_polar(double theta, const char* name) {
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::invalid_argument(std::string(name) + " must lie in [0, pi]");
}

struct AngleArgs {
  double theta0 = 0.0;
  double phi0 = 0.0;
  double thetaf = 0.0;
  double phif = 0.0;
};

struct ParamArgs {
  double omega0 = 0.0;
  double omega1max = 0.0;
  double wb_minus = 0.0;
  double wb_plus = 0.0;

  spinctrl::PhysicalParams params() const {
    spinctrl::PhysicalParams p{omega0, omega1max, wb_minus, wb_plus};
    p.validate();
    return p;
  }
};

void add_angle_options(CLI::App* cmd, AngleArgs* a) {
  cmd->add_option("--theta0", a->theta0, "initial polar angle [rad]");
  cmd->add_option("--phi0", a->phi0, "initial azimuthal angle [rad]");
  cmd->add_option("--thetaf", a->thetaf, "target polar angle [rad]");
  cmd->add_option("--phif", a->phif, "target azimuthal angle [rad]");
}

void add_param_options(CLI::App* cmd, ParamArgs* p, bool need_band) {
  cmd->add_option("--omega0", p->omega0, "static-field precession rate [rad/s]")
      ->required();
  cmd->add_option("--omega1max", p->omega1max, "drive amplitude cap [rad/s]")
      ->required();
  auto* minus =
      cmd->add_option("--wb-minus", p->wb_minus, "carrier band extent below omega0 [rad/s]");
  auto* plus =
      cmd->add_option("--wb-plus", p->wb_plus, "carrier band extent above omega0 [rad/s]");
  if (need_band) {
    minus->required();
    plus->required();
  }
}

int run_synthesize(const std::string& algo, const ParamArgs& pa, const AngleArgs& aa,
                   double t0, const std::string& out_path) {
  check_polar(aa.theta0, "--theta0");
  check_polar(aa.thetaf, "--thetaf");
  const spinctrl::PhysicalParams params = pa.params();
  const spinctrl::BlochAngles init{aa.theta0, aa.phi0};
  const spinctrl::BlochAngles target{aa.thetaf, aa.phif};

  spinctrl::SynthesisResult result;
  if (algo == "apm3") {
    result = spinctrl::synth_apm3(params, init, target, t0);
  } else if (algo == "apm1") {
    result = spinctrl::synth_apm1(params, init, target, t0);
  } else if (algo == "fapm2") {
    result = spinctrl::synth_fapm2(params, init, target, t0);
  } else if (algo == "fapm1") {
    result = spinctrl::synth_fapm1(params, init, target, t0);
  } else {
    if (!spinctrl::drive_limited(params))
      std::cerr << "warning: carrier band narrower than the drive cap; the "
                   "hybrid near-optimality guarantee is void\n";
    result = algo == "hybrid" ? spinctrl::hybrid_select(params, init, target, t0)
                              : spinctrl::simplified_hybrid(params, init, target, t0);
  }

  std::cout << spinctrl::algorithm_name(result.algorithm) << " k=" << result.k_index
            << " transition_time=" << fmt(result.transition_time) << " s\n";
  if (!out_path.empty())
    spinctrl::write_schedule_file(out_path, params.omega0, result.schedule);
  return 0;
}

int run_verify(const std::string& schedule_path, const AngleArgs& aa,
               const std::string& method, double dt, bool dt_set, double omega0,
               bool omega0_set) {
  check_polar(aa.theta0, "--theta0");
  check_polar(aa.thetaf, "--thetaf");
  const spinctrl::ScheduleFile file = spinctrl::read_schedule_file(schedule_path);
  const double w0 = omega0_set ? omega0 : file.omega0;
  if (!(w0 > 0.0)) throw std::invalid_argument("--omega0 must be positive");

  const spinctrl::SpinState psi0 =
      spinctrl::bloch_to_state(spinctrl::BlochAngles{aa.theta0, aa.phi0});
  spinctrl::SpinState psif;
  std::string drift_note;
  if (method == "analytic") {
    psif = spinctrl::propagate(w0, file.schedule, psi0);
  } else {
    double step = dt_set ? dt : spinctrl::default_oracle_dt(w0, file.schedule);
    if (dt_set && (!(dt > 0.0) || dt >= file.schedule.duration()))
      throw std::invalid_argument("--dt must be positive and below the schedule duration");
    spinctrl::Rk4Stats stats;
    psif = spinctrl::rk4_oracle(w0, file.schedule, psi0, step, &stats);
    drift_note = " norm_drift=" + fmt(stats.max_segment_drift);
  }

  const double fid = spinctrl::fidelity(
      psif, spinctrl::bloch_to_state(spinctrl::BlochAngles{aa.thetaf, aa.phif}));
  const spinctrl::BlochAngles reached = spinctrl::state_to_bloch(psif);
  std::cout << "fidelity=" << fmt(fid) << " final_theta=" << fmt(reached.theta)
            << " final_phi=" << fmt(reached.phi) << drift_note << "\n";
  return fid >= 1.0 - 1e-6 ? 0 : 2;
}

int run_sweep(const ParamArgs& pa, int grid, const std::string& quantity, double phi0,
              double phif, const std::string& out_path) {
  const spinctrl::PhysicalParams params = pa.params();
  spinctrl::SweepQuantity q = spinctrl::SweepQuantity::HybridMin;
  if (quantity == "apm1") q = spinctrl::SweepQuantity::Apm1;
  else if (quantity == "fapm1") q = spinctrl::SweepQuantity::Fapm1;
  else if (quantity == "diff") q = spinctrl::SweepQuantity::Diff;

  const std::vector<spinctrl::SweepRow> rows =
      spinctrl::sweep_grid(params, grid, q, phi0, phif);

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out)
      throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out = &file_out;
  }
  *out << "theta0,thetaf,value\n";
  for (const spinctrl::SweepRow& row : rows)
    *out << fmt(row.theta0) << ',' << fmt(row.thetaf) << ',' << fmt(row.value) << '\n';
  if (!*out) throw std::runtime_error("sweep output failed");
  return 0;
}

int run_bounds(const ParamArgs& pa) {
  const spinctrl::PhysicalParams params = pa.params();
  const double fapm = spinctrl::bound_fapm(params);  // shared by both detuned variants
  std::cout << "apm3_bound=" << fmt(spinctrl::bound_apm3(params)) << " s\n"
            << "apm1_bound=" << fmt(spinctrl::bound_apm1(params)) << " s\n"
            << "fapm2_bound=" << fmt(fapm) << " s\n"
            << "fapm1_bound=" << fmt(fapm) << " s\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Control-pulse synthesis for steering a spin-1/2 between Bloch states"};
  app.require_subcommand(1);

  AngleArgs syn_angles;
  ParamArgs syn_params;
  std::string algo = "hybrid";
  double syn_t0 = 0.0;
  std::string syn_out;
  CLI::App* syn = app.add_subcommand("synthesize", "Generate a pulse schedule");
  syn->add_option("--algo", algo, "modulation algorithm")
      ->check(CLI::IsMember({"apm1", "apm3", "fapm1", "fapm2", "hybrid", "hybrid-simple"}));
  add_param_options(syn, &syn_params, false);
  add_angle_options(syn, &syn_angles);
  syn->add_option("--t0", syn_t0, "lab-frame start time [s]");
  syn->add_option("--out", syn_out, "write the schedule as JSON to this path");

  AngleArgs ver_angles;
  std::string ver_schedule, ver_method = "analytic";
  double ver_dt = 0.0, ver_omega0 = 0.0;
  CLI::App* ver = app.add_subcommand("verify", "Propagate a schedule and check the target");
  ver->add_option("--schedule", ver_schedule, "schedule JSON path")->required();
  add_angle_options(ver, &ver_angles);
  ver->add_option("--method", ver_method, "propagation method")
      ->check(CLI::IsMember({"analytic", "rk4"}));
  CLI::Option* dt_opt = ver->add_option("--dt", ver_dt, "integration step cap [s]");
  CLI::Option* w0_opt =
      ver->add_option("--omega0", ver_omega0, "override the schedule's omega0 [rad/s]");

  ParamArgs sweep_params;
  int sweep_grid_n = 101;
  std::string sweep_quantity = "hybrid-min", sweep_out;
  double sweep_phi0 = 0.0, sweep_phif = 0.0;
  CLI::App* sw = app.add_subcommand("sweep", "Tabulate time estimates over polar-angle pairs");
  add_param_options(sw, &sweep_params, false);
  sw->add_option("--grid", sweep_grid_n, "points per axis")->check(CLI::PositiveNumber);
  sw->add_option("--quantity", sweep_quantity, "value to tabulate")
      ->check(CLI::IsMember({"apm1", "fapm1", "diff", "hybrid-min"}));
  sw->add_option("--phi0", sweep_phi0, "initial azimuthal angle [rad]");
  sw->add_option("--phif", sweep_phif, "target azimuthal angle [rad]");
  sw->add_option("--out", sweep_out, "write CSV here instead of stdout");

  ParamArgs bounds_params;
  CLI::App* bd = app.add_subcommand("bounds", "Print worst-case transition-time bounds");
  add_param_options(bd, &bounds_params, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*syn) return run_synthesize(algo, syn_params, syn_angles, syn_t0, syn_out);
    if (*ver)
      return run_verify(ver_schedule, ver_angles, ver_method, ver_dt,
                        dt_opt->count() > 0, ver_omega0, w0_opt->count() > 0);
    if (*sw)
      return run_sweep(sweep_params, sweep_grid_n, sweep_quantity, sweep_phi0,
                       sweep_phif, sweep_out);
    if (*bd) return run_bounds(bounds_params);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
