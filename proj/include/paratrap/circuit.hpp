#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace paratrap::circuit {

struct CircuitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Effective impedance of an n lambda/4 CPW section: Z = 4 Z_cpw / (n pi).
double effective_impedance(double z_cpw, int n);
// Z_cpw needed to hit a target effective impedance.
double required_cpw_impedance(double z_target, int n);

struct CPWLine {
  double z_cpw = 0;            // ohm
  int mode_index = 1;
  double wavelength = 0;       // m
  double conductor_spacing = 0;  // d0, m
  double effective_length = 0;   // l_eff <= lambda/2, m

  void validate() const;
};

struct CavityMode {
  double omega = 0;        // rad/s
  double mode_volume = 0;  // m^3

  // E_C0 = sqrt(hbar w / (2 eps0 V)).
  double field_fluctuation() const;
  // Mode volume chosen so a given E_C0 results.
  static CavityMode from_field(double omega, double e_c0);
};

// CPW to cavity-mode coupling: evaluates the discretized dipole-density
// integral and the closed form E_C0 q0 d0 l_eff / lambda (both over hbar),
// returning the closed form after checking agreement.
double cpw_cavity_coupling(const CPWLine& line, const CavityMode& cavity,
                           double z_effective);

// Four coupled systems (electron, line, cavity, transmon); entries in rad/s.
struct CouplingMatrix4 {
  double omega = 0;     // electron diagonal
  double delta_bus = 0; // line detuning from the electron
  double delta = 0;     // cavity-transmon detuning Delta
  double omega_transmon = 0;  // bare transmon diagonal
  double g_p = 0;
  double g_lc = 0;
  double g_tc = 0;

  Eigen::Matrix4d matrix() const;
};

struct ReducedChain {
  double dressed_transmon_omega = 0;  // rad/s
  double dressed_cavity_omega = 0;    // rad/s
  double g_lt = 0;                    // line-transmon rate, rad/s
  Eigen::Matrix3d reduced;            // (electron, line, dressed transmon)
};

// Dresses the cavity-transmon block to first order in G_tc/Delta and
// eliminates the cavity-like mode; reduced (line, transmon) entry is
// -G_lc G_tc / Delta.
ReducedChain dress_and_reduce(const CouplingMatrix4& c4);

struct PickupNetwork {
  double c_parasitic = 0;   // C_p, F
  double c_balance = 0;     // C_b, F
  double c_fine = 0;        // C_b', F
  double resonator_c = 0;   // F
  double drive_voltage = 0; // V
  double fine_voltage = 0;  // V
  double fine_phase = 0;    // rad, relative to perfect cancellation
  double detuning = 0;      // rad/s
};

struct PickupResult {
  std::complex<double> net_charge; // C, phasor
  double drive_strength = 0;       // rad/s
  double photons = 0;              // steady-state occupation
};

// Phasor sum of the parasitic, balancing, and fine-tune paths; photons
// n = (eps/detuning)^2 with eps = (Q_net/C) q0 / hbar scaled by a geometric
// transfer factor.
PickupResult pickup_excitation(const PickupNetwork& net, double q0,
                               double transfer_factor = 1.0);

}  // namespace paratrap::circuit
