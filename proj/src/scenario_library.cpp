#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "paratrap/circuit.hpp"
#include "paratrap/constants.hpp"
#include "paratrap/coupling.hpp"
#include "paratrap/lindblad.hpp"
#include "paratrap/noise.hpp"
#include "paratrap/quantum.hpp"
#include "paratrap/scenario.hpp"
#include "paratrap/trap.hpp"

namespace paratrap::scenario {

namespace {

using constants::elementary_charge;
using constants::electron_mass;
using constants::hbar;
using constants::pi;
using constants::two_pi;

using Params = std::map<std::string, Quantity>;

ScenarioSpec make_spec(const std::string& name, Params params) {
  ScenarioSpec spec;
  spec.name = name;
  spec.params = std::move(params);
  return spec;
}

Integrator integrator_of(const ScenarioSpec& s) {
  if (s.integrator == "rk4-fixed") return Integrator::rk4_fixed;
  if (s.integrator == "rk45-adaptive") return Integrator::rk45_adaptive;
  throw ScenarioError("unknown integrator '" + s.integrator + "'");
}

// ---------------------------------------------------------------- chains

Params chain_params(double n, bool transmon, double stop_fraction) {
  const double g_p = 1.1e6;
  const double delta = std::sqrt(8.0 * n * n / (2.0 * n + 1.0)) * g_p;
  Params p = {
      {"g_p", {g_p, "Hz"}},
      {"n", {n, "1"}},
      {"delta", {delta, "Hz"}},
      {"heating_rate", {8100.0, "quanta/s"}},
      {"bus_t1", {45e-6, "s"}},
      {"electron_dim", {4, "1"}},
      {"bus_dim", {4, "1"}},
      {"transmon_end", {transmon ? 1.0 : 0.0, "1"}},
      {"stop_fraction", {stop_fraction, "1"}},
      {"steps", {6000, "1"}},
      {"record_stride", {10, "1"}},
  };
  if (transmon) {
    p["transmon_t1"] = {70e-6, "s"};
    p["transmon_t2"] = {92e-6, "s"};
  }
  return p;
}

RunResult run_chain(const ScenarioSpec& s) {
  const double g_p = two_pi * s.param("g_p");
  const double delta = two_pi * s.param("delta");
  const int n = static_cast<int>(s.param("n"));
  const bool transmon = s.param("transmon_end") != 0;
  const int edim = static_cast<int>(s.param("electron_dim"));
  const int bdim = static_cast<int>(s.param("bus_dim"));

  LindbladModel model = build_chain_hamiltonian(
      transmon ? ChainKind::electron_transmon : ChainKind::electron_electron,
      g_p, g_p, delta, edim, bdim);
  const HilbertSpace& space = model.space;

  const auto e1 = mode_operators(edim);
  const auto bus = mode_operators(bdim);
  const OperatorMatrix a1 = embed(e1.a, space, 0);
  const OperatorMatrix a1_dag = embed(e1.a_dagger, space, 0);
  const OperatorMatrix n_bus = embed(bus.n, space, 1);

  const double heat = s.param("heating_rate");
  if (heat > 0)
    for (auto& c : heating_collapse(a1, a1_dag, heat))
      model.collapse_ops.push_back(c);
  for (auto& c : resonator_collapse(embed(bus.a, space, 1), s.param("bus_t1")))
    model.collapse_ops.push_back(c);
  OperatorMatrix n_end;
  if (transmon) {
    const OperatorMatrix sm = embed(sigma_minus(), space, 2);
    const OperatorMatrix sz = embed(sigma_z(), space, 2);
    for (auto& c : qubit_collapse(
             sm, sz, {s.param("transmon_t1"), s.param("transmon_t2")}))
      model.collapse_ops.push_back(c);
    n_end = OperatorMatrix{sm.adjoint().entries * sm.entries, true};
  } else {
    const auto e2 = mode_operators(edim);
    if (heat > 0)
      for (auto& c : heating_collapse(embed(e2.a, space, 2),
                                      embed(e2.a_dagger, space, 2), heat))
        model.collapse_ops.push_back(c);
    n_end = embed(e2.n, space, 2);
  }

  const MagicDetuning md = magic_detuning(n, g_p);
  const double stop_fraction = s.param("stop_fraction");
  const double t_end = stop_fraction * md.tau_swap;
  const int steps = static_cast<int>(s.param("steps"));

  EvolutionConfig cfg;
  cfg.t_end = t_end;
  cfg.step = t_end / steps;
  cfg.method = integrator_of(s);
  cfg.observables = {embed(e1.n, space, 0), n_bus, n_end};

  const QuantumState rho0 = QuantumState::fock(space, {1, 0, 0});
  Trajectory traj = evolve_lindblad(model, rho0, cfg);
  const QuantumState final_state = sanitize_state(space, traj.final_rho);

  QuantumState target = [&] {
    if (stop_fraction > 0.999) return QuantumState::fock(space, {0, 0, 1});
    VectorXcd bell = (QuantumState::fock_ket(space, {0, 0, 1}) -
                      Complex(0, 1) * QuantumState::fock_ket(space, {1, 0, 0})) /
                     std::sqrt(2.0);
    return QuantumState::from_ket(space, bell);
  }();

  RunResult out;
  out.add_summary("tau_swap", md.tau_swap, "s");
  out.add_summary("t_final", t_end, "s");
  out.add_summary("fidelity", state_fidelity(final_state, target));
  out.add_summary("bus_population_final",
                  expectation(final_state, n_bus).real());

  Table pops;
  pops.file_name = "populations.csv";
  pops.columns = {"time [s]", "electron [quanta]", "bus [quanta]",
                  "end [quanta]"};
  const int stride = std::max(1, static_cast<int>(s.param("record_stride")));
  for (std::size_t i = 0; i < traj.times.size(); i += stride)
    pops.rows.push_back({traj.times[i], traj.observable_records[0][i].real(),
                         traj.observable_records[1][i].real(),
                         traj.observable_records[2][i].real()});
  out.tables.push_back(std::move(pops));
  return out;
}

// ---------------------------------------------------------------- cooling

RunResult run_cooling(const ScenarioSpec& s) {
  const double g_p = two_pi * s.param("g_p");
  const double t_end = pi / (2.0 * g_p);
  const int steps = static_cast<int>(s.param("steps"));

  GaussianModel model;
  model.coupling = Eigen::MatrixXcd::Zero(2, 2);
  model.coupling(0, 1) = model.coupling(1, 0) = g_p;
  // Electrode field noise pumps both hybridized branches during the swap,
  // so the quoted quanta/s acts on the electron and the resonator alike.
  const double heat = s.param("heating_rate");
  model.down_rates =
      Eigen::Vector2d(heat, heat + 1.0 / s.param("resonator_t1"));
  model.up_rates = Eigen::Vector2d(heat, heat);
  model.initial_occupation = Eigen::Vector2d(s.param("nbar"), 0.0);

  GaussianTrajectory traj = evolve_gaussian(model, t_end, t_end / steps);
  const double residual = traj.occupations.back()(0);

  RunResult out;
  out.add_summary("swap_time", t_end, "s");
  out.add_summary("residual_occupation", residual, "quanta");
  out.add_summary("ground_state_fidelity", 1.0 / (1.0 + residual));
  out.add_summary("resonator_occupation_final", traj.occupations.back()(1),
                  "quanta");

  Table occ;
  occ.file_name = "occupations.csv";
  occ.columns = {"time [s]", "electron [quanta]", "resonator [quanta]"};
  const int stride = std::max(1, static_cast<int>(s.param("record_stride")));
  for (std::size_t i = 0; i < traj.times.size(); i += stride)
    occ.rows.push_back(
        {traj.times[i], traj.occupations[i](0), traj.occupations[i](1)});
  out.tables.push_back(std::move(occ));
  return out;
}

// ---------------------------------------------------------------- spin map

RunResult run_spin_motion(const ScenarioSpec& s) {
  ElectronParams electron;
  electron.omega_y = two_pi * s.param("omega_y");
  electron.omega_spin = two_pi * s.param("omega_spin");
  electron.bias_field = s.param("bias_field");
  electron.validate();

  const SpinMotionRate rate = spin_motion_rate(s.param("coil_radius"),
                                               s.param("current"), electron);
  const SpinMotionMapResult map = spin_motion_map_sim(
      two_pi * s.param("rabi"), s.param("heating_rate"),
      static_cast<int>(s.param("motion_dim")));
  const double noise_asd = s.param("field_noise");
  const double t2 = spin_coherence(noise_asd * noise_asd);

  RunResult out;
  out.add_summary("gradient", rate.gradient, "T/m");
  out.add_summary("rabi_calculated", rate.rabi / two_pi, "Hz");
  out.add_summary("rabi_used", s.param("rabi"), "Hz");
  out.add_summary("map_time", map.map_time, "s");
  out.add_summary("map_fidelity", map.fidelity);
  out.add_summary("spin_t2", t2, "s");

  Table table;
  table.file_name = "spin_motion.csv";
  table.columns = {"map_time [s]", "map_fidelity [1]", "rabi_calculated [Hz]",
                   "spin_t2 [s]"};
  table.rows.push_back({map.map_time, map.fidelity, rate.rabi / two_pi, t2});
  out.tables.push_back(std::move(table));
  return out;
}

// ---------------------------------------------------------------- rwa

RunResult run_rwa(const ScenarioSpec& s) {
  RateCard rates;
  rates.g_p = two_pi * s.param("g_p");
  rates.g = 2.0 * rates.g_p;
  ErFrequencies freqs;
  freqs.omega_resonator = two_pi * s.param("omega_resonator");
  freqs.omega_motion = two_pi * s.param("omega_motion");
  freqs.omega_drive = freqs.omega_resonator - freqs.omega_motion;

  const int mdim = static_cast<int>(s.param("motion_dim"));
  const int rdim = static_cast<int>(s.param("resonator_dim"));
  const double t_exchange = pi / (2.0 * rates.g_p);
  const double t_end = s.param("span_factor") * t_exchange;

  auto evolve_population = [&](ErMode mode, int steps) {
    LindbladModel model = build_er_hamiltonian(rates, freqs, mode, mdim, rdim);
    EvolutionConfig cfg;
    cfg.t_end = t_end;
    cfg.step = t_end / steps;
    cfg.method = integrator_of(s);
    cfg.observables = {embed(mode_operators(rdim).n, model.space, 1)};
    const QuantumState rho0 = QuantumState::fock(model.space, {1, 0});
    return evolve_lindblad(model, rho0, cfg);
  };

  const int full_steps = static_cast<int>(s.param("steps"));
  Trajectory full = evolve_population(ErMode::full_time_dependent, full_steps);
  Trajectory rwa = evolve_population(ErMode::rwa_beamsplitter, full_steps / 40);

  auto max_of = [](const Trajectory& t) {
    double best = 0;
    for (const Complex& v : t.observable_records[0])
      best = std::max(best, v.real());
    return best;
  };
  const double full_max = max_of(full);
  const double rwa_max = max_of(rwa);

  RunResult out;
  out.add_summary("t_exchange", t_exchange, "s");
  out.add_summary("full_transfer_max", full_max, "quanta");
  out.add_summary("rwa_transfer_max", rwa_max, "quanta");
  out.add_summary("relative_difference",
                  std::abs(full_max - rwa_max) / rwa_max);

  auto dump = [&](const Trajectory& t, const std::string& file, int stride) {
    Table table;
    table.file_name = file;
    table.columns = {"time [s]", "resonator [quanta]"};
    for (std::size_t i = 0; i < t.times.size(); i += stride)
      table.rows.push_back({t.times[i], t.observable_records[0][i].real()});
    out.tables.push_back(std::move(table));
  };
  dump(full, "transfer_full.csv", std::max(1, full_steps / 1000));
  dump(rwa, "transfer_rwa.csv", std::max(1, full_steps / 40000));
  return out;
}

// ---------------------------------------------------------------- trap

RunResult run_trap_stability(const ScenarioSpec& s) {
  const double mass = s.param("mass");
  const double charge = s.param("charge");
  const double omega = two_pi * s.param("omega_trap");

  std::vector<std::pair<double, double>> grid;
  const double q_min = s.param("q_min");
  const double q_max = s.param("q_max");
  const double q_step = s.param("q_step");
  for (double q = q_min; q <= q_max + 1e-12; q += q_step)
    grid.push_back({s.param("a_scan"), q});
  const auto scan = trap::stability_scan(mass, charge, omega, grid,
                                         static_cast<int>(s.param("periods")));

  double q_edge = q_max;
  for (std::size_t i = 1; i < scan.size(); ++i) {
    if (scan[i - 1].stable && !scan[i].stable) {
      q_edge = 0.5 * (scan[i - 1].q + scan[i].q);
      break;
    }
  }

  // Reference card point: integrate and measure the secular line.
  trap::TrapFieldModel card = trap::TrapFieldModel::from_mathieu(
      mass, charge, omega, s.param("a_card"), s.param("q_card"));
  const double h = two_pi / omega / 120.0;
  const int samples = static_cast<int>(s.param("card_samples"));
  trap::TrajectoryRecord traj = trap::integrate_motion(
      card, {0, 1e-6, 0}, {0, 0, 0}, samples * h, h);
  double secular = 0;
  if (!traj.escaped) {
    const auto peaks = trap::extract_spectrum(traj, 1, 1e-3);
    if (!peaks.empty()) secular = peaks.front().frequency;
  }
  const double q_card = s.param("q_card");
  const double secular_pseudo =
      (omega / 2.0) * std::sqrt(s.param("a_card") + q_card * q_card / 2.0);

  RunResult out;
  out.add_summary("q_edge", q_edge);
  out.add_summary("card_stable", traj.escaped ? 0.0 : 1.0);
  out.add_summary("secular_measured", secular / two_pi, "Hz");
  out.add_summary("secular_pseudopotential", secular_pseudo / two_pi, "Hz");

  Table table;
  table.file_name = "stability.csv";
  table.columns = {"a [1]", "q [1]", "stable [1]"};
  for (const auto& p : scan)
    table.rows.push_back({p.a, p.q, p.stable ? 1.0 : 0.0});
  out.tables.push_back(std::move(table));
  return out;
}

RunResult run_sidebands(const ScenarioSpec& s) {
  const double mass = s.param("mass");
  const double charge = s.param("charge");
  const double omega = two_pi * s.param("omega_trap");
  const int samples = static_cast<int>(s.param("samples"));
  const double h = two_pi / omega / 120.0;

  RunResult out;
  Table table;
  table.file_name = "spectra.csv";
  table.columns = {"case [1]", "frequency [Hz]", "amplitude [m]"};

  int case_index = 0;
  for (const char* key : {"omega_drive_equal", "omega_drive_detuned"}) {
    ++case_index;
    trap::TrapFieldModel model = trap::TrapFieldModel::from_mathieu(
        mass, charge, omega, 0.0, s.param("q"));
    model.omega_drive = two_pi * s.param(key);
    model.drive_quadrupole = s.param("drive_quadrupole");
    trap::TrajectoryRecord traj = trap::integrate_motion(
        model, {0, s.param("y_offset"), 0}, {0, 0, 0}, samples * h, h);
    if (traj.escaped)
      throw NumericalError("sidebands: driven trajectory escaped");
    const auto peaks =
        trap::extract_spectrum(traj, 1, s.param("peak_threshold"));
    for (const auto& p : peaks)
      table.rows.push_back({double(case_index), p.frequency / two_pi,
                            p.amplitude});
    out.add_summary(std::string("peaks_case_") + std::to_string(case_index),
                    static_cast<double>(peaks.size()));
  }
  const double q = s.param("q");
  out.add_summary("secular_estimate", (omega / 2.0) * q / std::sqrt(2.0) /
                                          two_pi,
                  "Hz");
  out.tables.push_back(std::move(table));
  return out;
}

// ---------------------------------------------------------------- noise

noise::IntegrationOptions noise_options(const ScenarioSpec& s) {
  noise::IntegrationOptions opt;
  opt.rel_tol = s.param("rel_tol");
  opt.cutoff_factor = s.param("cutoff_factor");
  return opt;
}

RunResult run_tip_factor(const ScenarioSpec& s) {
  const double r0 = s.param("apex_distance");
  const auto opt = noise_options(s);
  const double plane = noise::dipole_field_noise(noise::Plane{r0}, {0, 0, 0},
                                                 opt);

  RunResult out;
  Table table;
  table.file_name = "tip_factors.csv";
  table.columns = {"alpha [rad]", "factor [1]", "alpha_over_10 [1]"};
  for (const char* key : {"alpha_1", "alpha_2", "alpha_3", "alpha_4"}) {
    const double alpha = s.param(key);
    const double value =
        noise::dipole_field_noise(noise::Cone{r0, alpha}, {0, 0, 0}, opt);
    table.rows.push_back({alpha, value / plane, alpha / 10.0});
    if (key == std::string("alpha_2"))
      out.add_summary("factor_alpha_2", value / plane);
  }
  out.add_summary("plane_noise", plane, "1");
  out.tables.push_back(std::move(table));
  return out;
}

RunResult run_ring_factor(const ScenarioSpec& s) {
  const double d = s.param("inner_diameter");
  const auto opt = noise_options(s);
  const double plane = noise::dipole_field_noise(noise::Plane{d / 2.0},
                                                 {0, 0, 0}, opt);

  RunResult out;
  Table table;
  table.file_name = "ring_factors.csv";
  table.columns = {"a_over_d [1]", "numeric_factor [1]", "closed_factor [1]"};
  for (const char* key : {"ratio_1", "ratio_2", "ratio_3", "ratio_4"}) {
    const double ratio = s.param(key);
    const double value = noise::dipole_field_noise(
        noise::Ring{d, ratio * d}, {0, 0, 0}, opt);
    table.rows.push_back(
        {ratio, value / plane, noise::ring_noise_factor(d, ratio * d)});
  }
  out.add_summary("plane_noise", plane, "1");
  out.tables.push_back(std::move(table));
  return out;
}

RunResult run_heating_rates(const ScenarioSpec& s) {
  const noise::NoiseReference ref = noise::calibrated_reference();
  const double f = s.param("frequency");
  const double omega = two_pi * f;
  const double mass = s.param("mass");
  const double charge = s.param("charge");

  const double s_shallow = noise::extrapolate_noise(
      ref.s_ref, ref.f_ref, f, s.param("beta_shallow"));
  const double s_steep = noise::extrapolate_noise(ref.s_ref, ref.f_ref, f,
                                                  s.param("beta_steep"));
  const auto shallow = noise::heating_rate(s_shallow, omega, mass, charge);
  const auto steep = noise::heating_rate(s_steep, omega, mass, charge);

  RunResult out;
  out.add_summary("rate_beta_shallow", shallow.quanta_per_s, "quanta/s");
  out.add_summary("rate_beta_steep", steep.quanta_per_s, "quanta/s");
  out.add_summary("f_ref", ref.f_ref, "Hz");
  out.add_summary("s_ref", ref.s_ref, "(V/m)^2/Hz");

  Table table;
  table.file_name = "heating.csv";
  table.columns = {"beta [1]", "s_e [(V/m)^2/Hz]", "rate [quanta/s]",
                   "tau1 [s]"};
  table.rows.push_back(
      {s.param("beta_shallow"), s_shallow, shallow.quanta_per_s, shallow.tau1});
  table.rows.push_back(
      {s.param("beta_steep"), s_steep, steep.quanta_per_s, steep.tau1});
  out.tables.push_back(std::move(table));
  return out;
}

// ---------------------------------------------------------------- circuit

RunResult run_reduction(const ScenarioSpec& s) {
  circuit::CouplingMatrix4 c4;
  c4.omega = two_pi * s.param("omega");
  c4.delta_bus = two_pi * s.param("delta_bus");
  c4.delta = two_pi * s.param("delta");
  c4.omega_transmon = two_pi * s.param("omega_transmon");
  c4.g_p = two_pi * s.param("g_p");
  c4.g_lc = two_pi * s.param("g_lc");
  c4.g_tc = two_pi * s.param("g_tc");

  const circuit::ReducedChain red = circuit::dress_and_reduce(c4);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> full(c4.matrix());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> reduced(red.reduced);

  // Drop the full eigenvalue closest to the dressed cavity mode.
  std::vector<double> full_vals(full.eigenvalues().data(),
                                full.eigenvalues().data() + 4);
  const auto drop = std::min_element(
      full_vals.begin(), full_vals.end(), [&](double a, double b) {
        return std::abs(a - red.dressed_cavity_omega) <
               std::abs(b - red.dressed_cavity_omega);
      });
  full_vals.erase(drop);

  double max_rel = 0;
  Table table;
  table.file_name = "eigenvalues.csv";
  table.columns = {"index [1]", "full [Hz]", "reduced [Hz]"};
  for (int i = 0; i < 3; ++i) {
    const double rel = std::abs(full_vals[i] - reduced.eigenvalues()(i)) /
                       std::abs(full_vals[i]);
    max_rel = std::max(max_rel, rel);
    table.rows.push_back({double(i), full_vals[i] / two_pi,
                          reduced.eigenvalues()(i) / two_pi});
  }

  const double ratio = c4.g_tc / (c4.omega + c4.delta - c4.omega_transmon);
  RunResult out;
  out.add_summary("g_lt", red.g_lt / two_pi, "Hz");
  out.add_summary("dressed_transmon", red.dressed_transmon_omega / two_pi,
                  "Hz");
  out.add_summary("dressed_cavity", red.dressed_cavity_omega / two_pi, "Hz");
  out.add_summary("max_eigenvalue_rel_error", max_rel);
  out.add_summary("dispersive_ratio_sq", ratio * ratio);
  out.tables.push_back(std::move(table));
  return out;
}

RunResult run_pickup(const ScenarioSpec& s) {
  const double q0 = std::sqrt(hbar / (2.0 * s.param("impedance")));
  const double transfer = s.param("transfer_factor");
  const double imbalance = s.param("imbalance");

  circuit::PickupNetwork net;
  net.c_parasitic = s.param("c_parasitic");
  net.c_fine = s.param("c_fine");
  net.resonator_c = s.param("resonator_c");
  net.drive_voltage = s.param("drive_voltage");
  net.detuning = two_pi * s.param("detuning");

  RunResult out;
  Table table;
  table.file_name = "pickup.csv";
  table.columns = {"case [1]", "net_charge [C]", "photons [1]"};

  net.c_balance = net.c_parasitic - imbalance;
  net.fine_voltage = 0;
  const auto raw = circuit::pickup_excitation(net, q0, transfer);
  table.rows.push_back({1.0, std::abs(raw.net_charge), raw.photons});
  out.add_summary("photons_imbalanced", raw.photons);

  net.c_balance = net.c_parasitic;
  const auto balanced = circuit::pickup_excitation(net, q0, transfer);
  table.rows.push_back({2.0, std::abs(balanced.net_charge), balanced.photons});
  out.add_summary("photons_balanced", balanced.photons);

  net.c_balance = net.c_parasitic - imbalance;
  net.fine_voltage =
      imbalance * net.drive_voltage / net.c_fine + s.param("fine_error");
  net.fine_phase = s.param("fine_phase_error");
  const auto tuned = circuit::pickup_excitation(net, q0, transfer);
  table.rows.push_back({3.0, std::abs(tuned.net_charge), tuned.photons});
  out.add_summary("photons_tuned", tuned.photons);

  out.tables.push_back(std::move(table));
  return out;
}

RunResult run_cpw_cavity(const ScenarioSpec& s) {
  circuit::CPWLine line;
  line.mode_index = 1;
  line.z_cpw =
      circuit::required_cpw_impedance(s.param("z_effective"), line.mode_index);
  line.wavelength = s.param("wavelength");
  line.conductor_spacing = s.param("d0");
  line.effective_length = s.param("l_eff");

  circuit::CavityMode cavity;
  cavity.omega = two_pi * s.param("omega_cavity");
  cavity.mode_volume = s.param("mode_volume");

  const double g = circuit::cpw_cavity_coupling(line, cavity,
                                                s.param("z_effective"));

  RunResult out;
  out.add_summary("g_lc", g / two_pi, "Hz");
  out.add_summary("field_fluctuation", cavity.field_fluctuation(), "V/m");
  out.add_summary("z_cpw", line.z_cpw, "ohm");

  Table table;
  table.file_name = "cpw_cavity.csv";
  table.columns = {"l_eff [m]", "g_lc [Hz]"};
  for (double frac : {0.125, 0.25, 0.5, 0.75, 1.0}) {
    circuit::CPWLine variant = line;
    variant.effective_length = frac * s.param("l_eff");
    double gv = 0;
    try {
      gv = circuit::cpw_cavity_coupling(variant, cavity,
                                        s.param("z_effective"));
    } catch (const circuit::CircuitError&) {
      // Closed form only; away from lambda/2 the sin-weighted integral
      // disagrees and the strict variant refuses.
      gv = cavity.field_fluctuation() *
           std::sqrt(hbar / (2.0 * s.param("z_effective"))) *
           line.conductor_spacing * variant.effective_length /
           (line.wavelength * hbar);
    }
    table.rows.push_back({variant.effective_length, gv / two_pi});
  }
  out.tables.push_back(std::move(table));
  return out;
}

RunResult run_impedance(const ScenarioSpec& s) {
  const double z_cpw = s.param("z_cpw");
  RunResult out;
  Table table;
  table.file_name = "impedance.csv";
  table.columns = {"mode_index [1]", "z_effective [ohm]"};
  const int max_mode = static_cast<int>(s.param("max_mode"));
  for (int n = 1; n <= max_mode; ++n)
    table.rows.push_back({double(n), circuit::effective_impedance(z_cpw, n)});
  out.add_summary("z_effective_n1", circuit::effective_impedance(z_cpw, 1),
                  "ohm");
  out.add_summary(
      "required_z_cpw",
      circuit::required_cpw_impedance(s.param("z_target"), 1), "ohm");
  out.tables.push_back(std::move(table));
  return out;
}

RunResult run_parametric_rate(const ScenarioSpec& s) {
  ElectronParams electron;
  electron.omega_y = two_pi * s.param("omega_y");
  ResonatorParams resonator = ResonatorParams::from_omega_z(
      two_pi * s.param("omega_resonator"), s.param("impedance"));
  DriveParams drive;
  drive.amplitude = s.param("amplitude");
  CouplingGeometry geometry;
  geometry.d2_y = s.param("d2_y");

  const RateCard card = parametric_rate(electron, resonator, drive, geometry,
                                        s.param("calibration"));

  RunResult out;
  out.add_summary("y0", card.y0, "m");
  out.add_summary("q0", card.q0, "C");
  out.add_summary("g", card.g / two_pi, "Hz");
  out.add_summary("g_p", card.g_p / two_pi, "Hz");

  Table table;
  table.file_name = "rates.csv";
  table.columns = {"y0 [m]", "q0 [C]", "g [Hz]", "g_p [Hz]"};
  table.rows.push_back(
      {card.y0, card.q0, card.g / two_pi, card.g_p / two_pi});
  out.tables.push_back(std::move(table));
  return out;
}

// ---------------------------------------------------------------- registry

struct Entry {
  std::function<ScenarioSpec()> defaults;
  std::function<RunResult(const ScenarioSpec&)> run;
};

const std::vector<std::pair<std::string, Entry>>& registry() {
  static const std::vector<std::pair<std::string, Entry>> entries = [] {
    std::vector<std::pair<std::string, Entry>> r;
    auto chain = [](const char* name, double n, bool transmon, double frac) {
      return Entry{[=] { return make_spec(name, chain_params(n, transmon, frac)); },
                   run_chain};
    };
    r.push_back({"fig3-swap-n0", chain("fig3-swap-n0", 0, true, 1.0)});
    r.push_back({"fig3-swap-n1", chain("fig3-swap-n1", 1, true, 1.0)});
    r.push_back({"fig3-bell", chain("fig3-bell", 1, true, 0.5)});
    r.push_back({"ee-swap-n0", chain("ee-swap-n0", 0, false, 1.0)});
    r.push_back({"ee-swap-n1", chain("ee-swap-n1", 1, false, 1.0)});
    r.push_back({"ee-bell", chain("ee-bell", 1, false, 0.5)});

    r.push_back({"cooling",
                 {[] {
                    return make_spec("cooling",
                                     {{"g_p", {1.1e6, "Hz"}},
                                      {"nbar", {41.2, "1"}},
                                      {"heating_rate", {8100.0, "quanta/s"}},
                                      {"resonator_t1", {45e-6, "s"}},
                                      {"steps", {2000, "1"}},
                                      {"record_stride", {10, "1"}}});
                  },
                  run_cooling}});

    r.push_back({"spin-motion-map",
                 {[] {
                    return make_spec("spin-motion-map",
                                     {{"rabi", {410e3, "Hz"}},
                                      {"heating_rate", {8100.0, "quanta/s"}},
                                      {"motion_dim", {2, "1"}},
                                      {"coil_radius", {50e-6, "m"}},
                                      {"current", {1.0, "A"}},
                                      {"omega_y", {500e6, "Hz"}},
                                      {"omega_spin", {28e6, "Hz"}},
                                      {"bias_field", {1e-3, "T"}},
                                      {"field_noise", {14e-12, "T/sqrtHz"}}});
                  },
                  run_spin_motion}});

    r.push_back({"rwa-validation",
                 {[] {
                    return make_spec("rwa-validation",
                                     {{"g_p", {1.1e6, "Hz"}},
                                      {"omega_resonator", {7e9, "Hz"}},
                                      {"omega_motion", {500e6, "Hz"}},
                                      {"motion_dim", {4, "1"}},
                                      {"resonator_dim", {4, "1"}},
                                      {"steps", {200000, "1"}},
                                      {"span_factor", {1.2, "1"}}});
                  },
                  run_rwa}});

    r.push_back({"trap-stability",
                 {[] {
                    return make_spec("trap-stability",
                                     {{"mass", {electron_mass, "kg"}},
                                      {"charge", {elementary_charge, "C"}},
                                      {"omega_trap", {7e9, "Hz"}},
                                      {"a_scan", {0.0, "1"}},
                                      {"q_min", {0.85, "1"}},
                                      {"q_max", {0.95, "1"}},
                                      {"q_step", {0.005, "1"}},
                                      {"periods", {200, "1"}},
                                      {"a_card", {0.0, "1"}},
                                      {"q_card", {0.202, "1"}},
                                      {"card_samples", {131072, "1"}}});
                  },
                  run_trap_stability}});

    r.push_back({"sidebands",
                 {[] {
                    return make_spec("sidebands",
                                     {{"mass", {electron_mass, "kg"}},
                                      {"charge", {elementary_charge, "C"}},
                                      {"omega_trap", {7e9, "Hz"}},
                                      {"q", {0.202, "1"}},
                                      {"omega_drive_equal", {7e9, "Hz"}},
                                      {"omega_drive_detuned", {6.5e9, "Hz"}},
                                      {"drive_quadrupole", {5e7, "V/m^2"}},
                                      {"y_offset", {1e-7, "m"}},
                                      {"samples", {131072, "1"}},
                                      {"peak_threshold", {5e-3, "1"}}});
                  },
                  run_sidebands}});

    r.push_back({"noise-tip-factor",
                 {[] {
                    return make_spec(
                        "noise-tip-factor",
                        {{"apex_distance", {100e-6, "m"}},
                         {"alpha_1", {10.0 * pi / 180.0, "rad"}},
                         {"alpha_2", {20.0 * pi / 180.0, "rad"}},
                         {"alpha_3", {30.0 * pi / 180.0, "rad"}},
                         {"alpha_4", {pi, "rad"}},
                         {"rel_tol", {0.01, "1"}},
                         {"cutoff_factor", {1e3, "1"}}});
                  },
                  run_tip_factor}});

    r.push_back({"noise-ring-factor",
                 {[] {
                    return make_spec("noise-ring-factor",
                                     {{"inner_diameter", {100e-6, "m"}},
                                      {"ratio_1", {0.0, "1"}},
                                      {"ratio_2", {0.1, "1"}},
                                      {"ratio_3", {0.2, "1"}},
                                      {"ratio_4", {0.3, "1"}},
                                      {"rel_tol", {0.01, "1"}},
                                      {"cutoff_factor", {1e3, "1"}}});
                  },
                  run_ring_factor}});

    r.push_back({"heating-rates",
                 {[] {
                    return make_spec("heating-rates",
                                     {{"frequency", {500e6, "Hz"}},
                                      {"beta_shallow", {1.0, "1"}},
                                      {"beta_steep", {1.5, "1"}},
                                      {"mass", {electron_mass, "kg"}},
                                      {"charge", {elementary_charge, "C"}}});
                  },
                  run_heating_rates}});

    r.push_back({"appendixE-reduction",
                 {[] {
                    return make_spec("appendixE-reduction",
                                     {{"omega", {500e6, "Hz"}},
                                      {"delta_bus", {1.79629e6, "Hz"}},
                                      {"delta", {272.7e6, "Hz"}},
                                      {"omega_transmon", {500e6, "Hz"}},
                                      {"g_p", {1.1e6, "Hz"}},
                                      {"g_lc", {3e6, "Hz"}},
                                      {"g_tc", {100e6, "Hz"}}});
                  },
                  run_reduction}});

    r.push_back({"appendixC-pickup",
                 {[] {
                    return make_spec(
                        "appendixC-pickup",
                        {{"c_parasitic", {0.5e-15, "F"}},
                         {"imbalance", {10e-18, "F"}},
                         {"c_fine", {10e-18, "F"}},
                         {"resonator_c", {2.2736420441699336e-14, "F"}},
                         {"impedance", {1000.0, "ohm"}},
                         {"drive_voltage", {0.2, "V"}},
                         {"detuning", {500e6, "Hz"}},
                         {"transfer_factor", {0.23195836811983378, "1"}},
                         {"fine_error", {0.4e-3, "V"}},
                         {"fine_phase_error", {0.0, "rad"}}});
                  },
                  run_pickup}});

    r.push_back({"appendixD-coupling",
                 {[] {
                    return make_spec(
                        "appendixD-coupling",
                        {{"omega_cavity", {7e9, "Hz"}},
                         {"z_effective", {1000.0, "ohm"}},
                         {"d0", {200e-6, "m"}},
                         {"wavelength", {0.02, "m"}},
                         {"l_eff", {0.01, "m"}},
                         {"mode_volume", {3.14564312729141e-6, "m^3"}}});
                  },
                  run_cpw_cavity}});

    r.push_back({"impedance",
                 {[] {
                    return make_spec("impedance", {{"z_cpw", {1000.0, "ohm"}},
                                                   {"z_target", {1000.0, "ohm"}},
                                                   {"max_mode", {4, "1"}}});
                  },
                  run_impedance}});

    r.push_back({"parametric-rate",
                 {[] {
                    return make_spec("parametric-rate",
                                     {{"omega_y", {500e6, "Hz"}},
                                      {"omega_resonator", {7e9, "Hz"}},
                                      {"impedance", {1000.0, "ohm"}},
                                      {"amplitude", {350e-9, "m"}},
                                      {"d2_y", {7.3e-6, "m"}},
                                      {"calibration", {1.0, "1"}}});
                  },
                  run_parametric_rate}});
    return r;
  }();
  return entries;
}

const Entry& find_entry(const std::string& name) {
  for (const auto& [key, entry] : registry())
    if (key == name) return entry;
  throw ScenarioError("unknown scenario '" + name + "'");
}

}  // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  for (const auto& [key, entry] : registry()) names.push_back(key);
  return names;
}

ScenarioSpec builtin_scenario(const std::string& name) {
  return find_entry(name).defaults();
}

RunResult dispatch_scenario(const ScenarioSpec& spec) {
  return find_entry(spec.name).run(spec);
}

}  // namespace paratrap::scenario
