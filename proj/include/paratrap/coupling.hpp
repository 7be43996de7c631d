#pragma once

#include "paratrap/constants.hpp"
#include "paratrap/lindblad.hpp"
#include "paratrap/quantum.hpp"

namespace paratrap {

struct ElectronParams {
  double mass = constants::electron_mass;       // kg
  double charge = constants::elementary_charge; // C
  double omega_x = 0;  // rad/s
  double omega_y = 0;  // rad/s
  double omega_z = 0;  // rad/s
  double omega_spin = 0;  // spin splitting, rad/s
  double bias_field = 0;  // T

  void validate() const;
};

struct ResonatorParams {
  double omega = 0;       // rad/s
  double impedance = 0;   // ohm
  double capacitance = 0; // F
  double inductance = 0;  // H
  double tau1 = 0;        // s

  // Builds a consistent L, C pair from omega and Z.
  static ResonatorParams from_omega_z(double omega, double z, double tau1 = 0);
  void validate() const;
};

struct TransmonParams {
  double omega_bare = 0;   // rad/s
  double omega_cavity = 0; // rad/s
  double g_tc = 0;         // rad/s
  double tau1 = 0;         // s
  double tau2 = 0;         // s

  double detuning() const { return omega_cavity - omega_bare; }
  void validate() const;  // throws below 5x dispersive margin
};

struct DriveParams {
  double amplitude = 0;        // driven motion amplitude A_d, m
  double omega_drive = 0;      // rad/s
  double omega_trap = 0;       // rad/s
  double trap_voltage = 0;     // V
  double drive_voltage = 0;    // V
};

struct CouplingGeometry {
  double d1_y = 0;  // dipole coupling length, m
  double d2_y = 0;  // quadrupole coupling length, m
};

// Coupling rates of the parametric conversion scheme.
struct RateCard {
  double y0 = 0;   // zero-point motion, m
  double q0 = 0;   // zero-point charge, C
  double g = 0;    // rad/s
  double g_p = 0;  // parametric rate g/2, rad/s
};

struct ZeroPoint {
  double y0 = 0;  // m
  double q0 = 0;  // C
};

// y0 = sqrt(hbar/(2 m omega_y)), q0 = sqrt(hbar/(2 Z)).
ZeroPoint zero_point_amplitudes(const ElectronParams& electron,
                                const ResonatorParams& resonator);

// hbar g = 2 e q0 A_d y0 / (C D_2y^2), g_p = g/2. The dimensionless
// calibration constant absorbs unstated amplitude/capacitance conventions
// and defaults to 1; dynamics scenarios take g_p as an explicit input.
RateCard parametric_rate(const ElectronParams& electron,
                         const ResonatorParams& resonator,
                         const DriveParams& drive,
                         const CouplingGeometry& geometry,
                         double calibration = 1.0);

struct MagicDetuning {
  double delta = 0;     // rad/s
  double tau_swap = 0;  // s
};

// delta_n = sqrt(8 n^2/(2n+1)) g_p; tau_swap = (pi/g_p) sqrt((2n+1)/2).
MagicDetuning magic_detuning(int n, double g_p);

enum class ErMode { rwa_beamsplitter, rwa_squeezer, full_time_dependent };

struct ErFrequencies {
  double omega_resonator = 0;  // rad/s
  double omega_motion = 0;     // rad/s
  double omega_drive = 0;      // rad/s (used by the full mode)
};

// Electron-resonator coupling Hamiltonian on a (motion, resonator) space.
// rwa modes emit the time-independent beam-splitter/squeezer forms; the
// full mode keeps all four terms with the cos(omega_drive t) envelope and
// explicit interaction-picture phases.
LindbladModel build_er_hamiltonian(const RateCard& rates,
                                   const ErFrequencies& freqs, ErMode mode,
                                   int motion_dim, int resonator_dim);

enum class ChainKind { electron_transmon, electron_electron };

// Interaction-picture chain (end1, bus, end2) with the bus detuned by delta
// from both ends: H = g1 (e^{i delta t} b^dag a1 + h.c.)
//                    + g2 (e^{i delta t} b^dag s2 + h.c.).
LindbladModel build_chain_hamiltonian(ChainKind kind, double g_p1, double g_p2,
                                      double delta, int end_dim, int bus_dim);

struct SpinMotionRate {
  double gradient = 0;     // T/m
  double rabi = 0;         // rad/s
  double omega_drive = 0;  // rad/s
};

// Anti-Helmholtz coil pair of radius R at half-spacing R/2 carrying current I.
SpinMotionRate spin_motion_rate(double coil_radius, double current,
                                const ElectronParams& electron);

// Red-sideband map H = Omega_R (s+ a + a^dag s-) between motion {0,1} and
// spin, with motional heating. Returns the fidelity of the full map at
// t = pi/(2 Omega_R).
struct SpinMotionMapResult {
  double map_time = 0;  // s
  double fidelity = 0;
};
SpinMotionMapResult spin_motion_map_sim(double rabi, double heating_quanta_per_s,
                                        int motion_dim = 2);

// White-noise spin dephasing. s_b is the single-sided magnetic PSD in
// T^2/Hz (amplitude spectral density squared); T2 = 4/(gamma^2 S_B).
// Returns +inf for zero noise.
double spin_coherence(double s_b);

}  // namespace paratrap
