#include "paratrap/circuit.hpp"

#include <cmath>

#include "paratrap/constants.hpp"

namespace paratrap::circuit {

using constants::hbar;
using constants::pi;
using constants::two_pi;

double effective_impedance(double z_cpw, int n) {
  if (z_cpw <= 0 || n < 1)
    throw CircuitError("effective_impedance: bad inputs");
  return 4.0 * z_cpw / (n * pi);
}

double required_cpw_impedance(double z_target, int n) {
  if (z_target <= 0 || n < 1)
    throw CircuitError("required_cpw_impedance: bad inputs");
  return z_target * n * pi / 4.0;
}

void CPWLine::validate() const {
  if (z_cpw <= 0 || mode_index < 1 || wavelength <= 0 ||
      conductor_spacing <= 0)
    throw CircuitError("CPWLine: bad parameters");
  if (effective_length <= 0 || effective_length > wavelength / 2.0 + 1e-12)
    throw CircuitError("CPWLine: effective length must lie in (0, lambda/2]");
}

double CavityMode::field_fluctuation() const {
  if (omega <= 0 || mode_volume <= 0)
    throw CircuitError("CavityMode: omega and volume must be > 0");
  return std::sqrt(hbar * omega / (2.0 * constants::eps0 * mode_volume));
}

CavityMode CavityMode::from_field(double omega, double e_c0) {
  if (omega <= 0 || e_c0 <= 0)
    throw CircuitError("CavityMode::from_field: bad inputs");
  CavityMode m;
  m.omega = omega;
  m.mode_volume = hbar * omega / (2.0 * constants::eps0 * e_c0 * e_c0);
  return m;
}

double cpw_cavity_coupling(const CPWLine& line, const CavityMode& cavity,
                           double z_effective) {
  line.validate();
  if (z_effective <= 0)
    throw CircuitError("cpw_cavity_coupling: impedance must be > 0");
  const double q0 = std::sqrt(hbar / (2.0 * z_effective));
  const double e_c0 = cavity.field_fluctuation();
  const double lam = line.wavelength;
  const double d0 = line.conductor_spacing;
  const double l = line.effective_length;

  // Dipole density along the inserted section, sin-weighted by the line's
  // charge profile and normalized to the half-wave average.
  const int n_panel = 4096;
  const double dz = l / n_panel;
  double integral = 0;
  for (int i = 0; i < n_panel; ++i) {
    const double z = (i + 0.5) * dz;
    integral += std::sin(two_pi * z / lam) * e_c0 * dz;
  }
  const double g_integral = (pi * q0 * d0 / (2.0 * lam)) * integral / hbar;
  const double g_closed = e_c0 * q0 * d0 * l / (lam * hbar);

  if (std::abs(g_integral - g_closed) > 0.05 * g_closed)
    throw CircuitError(
        "model-inconsistency: dipole integral disagrees with closed form");
  return g_closed;
}

Eigen::Matrix4d CouplingMatrix4::matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = omega;
  m(1, 1) = omega + delta_bus;
  m(2, 2) = omega + delta;
  m(3, 3) = omega_transmon;
  m(0, 1) = m(1, 0) = g_p;
  m(1, 2) = m(2, 1) = g_lc;
  m(2, 3) = m(3, 2) = g_tc;
  return m;
}

ReducedChain dress_and_reduce(const CouplingMatrix4& c4) {
  if (c4.g_tc <= 0)
    throw CircuitError("dress_and_reduce: G_tc must be > 0");
  const double cavity_omega = c4.omega + c4.delta;
  const double block_detuning = cavity_omega - c4.omega_transmon;
  if (std::abs(block_detuning) < 2.0 * c4.g_tc)
    throw CircuitError(
        "not-dispersive: cavity-transmon detuning below 2 G_tc");

  const double shift = c4.g_tc * c4.g_tc / block_detuning;
  ReducedChain out;
  out.dressed_transmon_omega = c4.omega_transmon - shift;
  out.dressed_cavity_omega = cavity_omega + shift;
  out.g_lt = c4.g_lc * c4.g_tc / block_detuning;

  out.reduced = Eigen::Matrix3d::Zero();
  out.reduced(0, 0) = c4.omega;
  out.reduced(1, 1) = c4.omega + c4.delta_bus;
  out.reduced(2, 2) = out.dressed_transmon_omega;
  out.reduced(0, 1) = out.reduced(1, 0) = c4.g_p;
  out.reduced(1, 2) = out.reduced(2, 1) = -out.g_lt;
  return out;
}

PickupResult pickup_excitation(const PickupNetwork& net, double q0,
                               double transfer_factor) {
  if (net.resonator_c <= 0)
    throw CircuitError("pickup_excitation: resonator capacitance must be > 0");
  if (net.detuning == 0)
    throw CircuitError("pickup_excitation: detuning must be nonzero");
  using namespace std::complex_literals;
  PickupResult out;
  out.net_charge = (net.c_parasitic - net.c_balance) * net.drive_voltage +
                   net.c_fine * net.fine_voltage *
                       std::exp(1i * (pi + net.fine_phase));
  out.drive_strength = std::abs(out.net_charge) / net.resonator_c * q0 /
                       hbar * transfer_factor;
  const double ratio = out.drive_strength / net.detuning;
  out.photons = ratio * ratio;
  return out;
}

}  // namespace paratrap::circuit
