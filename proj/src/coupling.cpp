#include "paratrap/coupling.hpp"

#include <cmath>
#include <limits>

namespace paratrap {

using namespace constants;

void ElectronParams::validate() const {
  if (mass <= 0 || charge == 0)
    throw QuantumError("ElectronParams: mass and charge must be set");
  if (omega_y <= 0) throw QuantumError("ElectronParams: omega_y must be > 0");
  if (omega_spin > 0 && bias_field > 0) {
    const double expected = electron_g_factor * bohr_magneton * bias_field / hbar;
    if (std::abs(omega_spin - expected) > 0.01 * expected)
      throw QuantumError("ElectronParams: omega_spin inconsistent with B0");
  }
}

ResonatorParams ResonatorParams::from_omega_z(double omega, double z,
                                              double tau1) {
  ResonatorParams p;
  p.omega = omega;
  p.impedance = z;
  p.capacitance = 1.0 / (z * omega);
  p.inductance = z / omega;
  p.tau1 = tau1;
  return p;
}

void ResonatorParams::validate() const {
  if (omega <= 0 || impedance <= 0 || capacitance <= 0 || inductance <= 0)
    throw QuantumError("ResonatorParams: all circuit values must be > 0");
  const double omega_lc = 1.0 / std::sqrt(inductance * capacitance);
  const double z_lc = std::sqrt(inductance / capacitance);
  if (std::abs(omega_lc - omega) > 1e-9 * omega ||
      std::abs(z_lc - impedance) > 1e-9 * impedance)
    throw QuantumError("ResonatorParams: omega/Z inconsistent with L, C");
}

void TransmonParams::validate() const {
  const double delta = std::abs(detuning());
  if (delta < 5.0 * g_tc)
    throw QuantumError("TransmonParams: not-dispersive (|Delta| < 5 G_tc)");
}

ZeroPoint zero_point_amplitudes(const ElectronParams& electron,
                                const ResonatorParams& resonator) {
  ZeroPoint zp;
  zp.y0 = std::sqrt(hbar / (2.0 * electron.mass * electron.omega_y));
  zp.q0 = std::sqrt(hbar / (2.0 * resonator.impedance));
  return zp;
}

RateCard parametric_rate(const ElectronParams& electron,
                         const ResonatorParams& resonator,
                         const DriveParams& drive,
                         const CouplingGeometry& geometry,
                         double calibration) {
  if (geometry.d2_y <= 0)
    throw QuantumError("parametric_rate: D_2,y must be > 0");
  if (drive.amplitude < 0)
    throw QuantumError("parametric_rate: A_d must be >= 0");
  const ZeroPoint zp = zero_point_amplitudes(electron, resonator);
  RateCard card;
  card.y0 = zp.y0;
  card.q0 = zp.q0;
  card.g = calibration * 2.0 * elementary_charge * zp.q0 * drive.amplitude *
           zp.y0 /
           (hbar * resonator.capacitance * geometry.d2_y * geometry.d2_y);
  card.g_p = card.g / 2.0;
  return card;
}

MagicDetuning magic_detuning(int n, double g_p) {
  if (n < 0) throw QuantumError("magic_detuning: n must be >= 0");
  if (g_p <= 0) throw QuantumError("magic_detuning: g_p must be > 0");
  MagicDetuning md;
  md.delta = std::sqrt(8.0 * n * n / (2.0 * n + 1.0)) * g_p;
  md.tau_swap = (pi / g_p) * std::sqrt((2.0 * n + 1.0) / 2.0);
  return md;
}

LindbladModel build_er_hamiltonian(const RateCard& rates,
                                   const ErFrequencies& freqs, ErMode mode,
                                   int motion_dim, int resonator_dim) {
  HilbertSpace space({motion_dim, resonator_dim}, {"motion", "resonator"});
  const auto motion = mode_operators(motion_dim);
  const auto res = mode_operators(resonator_dim);
  const OperatorMatrix ay = embed(motion.a, space, 0);
  const OperatorMatrix aphi_dag = embed(res.a_dagger, space, 1);

  const double conv = freqs.omega_resonator - freqs.omega_motion;
  const double amp = freqs.omega_resonator + freqs.omega_motion;
  if (freqs.omega_drive > 0) {
    const double tol = 1e-9 * std::max(freqs.omega_resonator, 1.0);
    if (mode == ErMode::rwa_beamsplitter &&
        std::abs(freqs.omega_drive - conv) > tol)
      throw QuantumError("build_er_hamiltonian: invalid-regime (drive not at "
                         "Omega - omega_y)");
    if (mode == ErMode::rwa_squeezer &&
        std::abs(freqs.omega_drive - amp) > tol)
      throw QuantumError("build_er_hamiltonian: invalid-regime (drive not at "
                         "Omega + omega_y)");
  }

  LindbladModel model{space, {}, {}};
  const double g = rates.g;
  const double g_p = rates.g_p;
  switch (mode) {
    case ErMode::rwa_beamsplitter: {
      OperatorMatrix bs{g_p * (aphi_dag.entries * ay.entries)};
      model.add_pair(bs, nullptr);
      break;
    }
    case ErMode::rwa_squeezer: {
      OperatorMatrix sq{
          g_p * (aphi_dag.entries * embed(motion.a_dagger, space, 0).entries)};
      model.add_pair(sq, nullptr);
      break;
    }
    case ErMode::full_time_dependent: {
      if (freqs.omega_drive <= 0)
        throw QuantumError("build_er_hamiltonian: full mode needs omega_drive");
      const double wd = freqs.omega_drive;
      model.add_pair(OperatorMatrix{aphi_dag.entries * ay.entries},
                     [g, wd, conv](double t) {
                       return g * std::cos(wd * t) *
                              std::exp(Complex(0, conv * t));
                     });
      const OperatorMatrix ay_dag =
          OperatorMatrix{aphi_dag.entries *
                         ay.entries.adjoint().eval()};
      model.add_pair(ay_dag, [g, wd, amp](double t) {
        return g * std::cos(wd * t) * std::exp(Complex(0, amp * t));
      });
      break;
    }
  }
  return model;
}

LindbladModel build_chain_hamiltonian(ChainKind kind, double g_p1, double g_p2,
                                      double delta, int end_dim, int bus_dim) {
  const bool transmon = kind == ChainKind::electron_transmon;
  const int end2_dim = transmon ? 2 : end_dim;
  HilbertSpace space({end_dim, bus_dim, end2_dim},
                     {"electron", "bus", transmon ? "transmon" : "electron2"});
  const auto e1 = mode_operators(end_dim);
  const auto bus = mode_operators(bus_dim);
  const OperatorMatrix a1 = embed(e1.a, space, 0);
  const OperatorMatrix b_dag = embed(bus.a_dagger, space, 1);
  const OperatorMatrix s2 =
      transmon ? embed(sigma_minus(), space, 2)
               : embed(mode_operators(end2_dim).a, space, 2);

  LindbladModel model{space, {}, {}};
  Envelope env;
  if (delta != 0)
    env = [delta](double t) { return std::exp(Complex(0, delta * t)); };
  model.add_pair(OperatorMatrix{g_p1 * (b_dag.entries * a1.entries)}, env);
  model.add_pair(OperatorMatrix{g_p2 * (b_dag.entries * s2.entries)}, env);
  return model;
}

SpinMotionRate spin_motion_rate(double coil_radius, double current,
                                const ElectronParams& electron) {
  if (coil_radius <= 0 || current < 0)
    throw QuantumError("spin_motion_rate: R must be > 0 and I >= 0");
  const double r = coil_radius;
  const double z = r / 2.0;  // classic anti-Helmholtz half-spacing
  // Pair of opposed coils: on-axis gradients add, fields cancel.
  const double gradient =
      3.0 * mu0 * current * r * r * z / std::pow(r * r + z * z, 2.5);
  const double y0 = std::sqrt(hbar / (2.0 * electron.mass * electron.omega_y));
  SpinMotionRate out;
  out.gradient = gradient;
  out.rabi = bohr_magneton * gradient * y0 / hbar;
  out.omega_drive = electron.omega_y - electron.omega_spin;
  return out;
}

SpinMotionMapResult spin_motion_map_sim(double rabi,
                                        double heating_quanta_per_s,
                                        int motion_dim) {
  if (rabi <= 0) throw QuantumError("spin_motion_map_sim: rabi must be > 0");
  HilbertSpace space({motion_dim, 2}, {"motion", "spin"});
  const auto motion = mode_operators(motion_dim);
  const OperatorMatrix a = embed(motion.a, space, 0);
  const OperatorMatrix a_dag = embed(motion.a_dagger, space, 0);
  const OperatorMatrix sp = embed(sigma_plus(), space, 1);

  LindbladModel model{space, {}, {}};
  model.add_pair(OperatorMatrix{rabi * (sp.entries * a.entries)}, nullptr);
  if (heating_quanta_per_s > 0) {
    for (auto& c : heating_collapse(a, a_dag, heating_quanta_per_s))
      model.collapse_ops.push_back(c);
  }

  const double t_map = pi / (2.0 * rabi);
  EvolutionConfig config;
  config.t_end = t_map;
  config.step = t_map / 5000;
  const QuantumState rho0 = QuantumState::fock(space, {1, 0});
  const QuantumState target = QuantumState::fock(space, {0, 1});
  Trajectory traj = evolve_lindblad(model, rho0, config);
  SpinMotionMapResult out;
  out.map_time = t_map;
  out.fidelity = state_fidelity(sanitize_state(space, traj.final_rho), target);
  return out;
}

double spin_coherence(double s_b) {
  if (s_b < 0) throw QuantumError("spin_coherence: S_B must be >= 0");
  if (s_b == 0) return std::numeric_limits<double>::infinity();
  const double gamma = electron_g_factor * bohr_magneton / hbar;
  // Single-sided PSD convention: Gamma_2 = gamma^2 S_B / 4.
  const double gamma2 = 0.25 * gamma * gamma * s_b;
  return 1.0 / gamma2;
}

}  // namespace paratrap
