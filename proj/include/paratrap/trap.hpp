#pragma once

#include <Eigen/Dense>
#include <array>
#include <stdexcept>
#include <vector>

namespace paratrap::trap {

struct TrapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Analytic multipole field model for the trap region: an oscillating
// quadrupole at Omega_tr, static curvatures, and a second drive tone with
// dipole and quadrupole components along y. Potentials are
//   Phi_rf  = cos(Omega_tr t) sum_i c_i r_i^2
//   Phi_dc  = sum_i s_i r_i^2
//   Phi_d   = cos(Omega_d t) (E_d * y + k_d * y^2),
// with the Laplace constraint sum_i c_i = 0 on the oscillating quadrupole.
struct TrapFieldModel {
  double mass = 0;    // kg
  double charge = 0;  // C (signed)
  double omega_trap = 0;   // Omega_tr, rad/s
  std::array<double, 3> rf_curvature{};      // c_i, V/m^2
  std::array<double, 3> static_curvature{};  // s_i, V/m^2
  double omega_drive = 0;       // Omega_d, rad/s
  double drive_dipole = 0;      // E_d, V/m
  double drive_quadrupole = 0;  // k_d, V/m^2 (parametric term along y)

  void validate() const;

  // Electric field at position r and time t.
  Eigen::Vector3d field(const Eigen::Vector3d& r, double t) const;

  // Mathieu-parameter helper for one axis: x'' + (W^2/4)(a - 2q cos(W t)) x.
  static TrapFieldModel from_mathieu(double mass, double charge, double omega,
                                     double a, double q, int axis = 1);

  double mathieu_q(int axis) const;
  double mathieu_a(int axis) const;
};

struct TrajectoryRecord {
  std::vector<double> times;                  // s, uniform
  std::vector<Eigen::Vector3d> positions;     // m
  std::vector<Eigen::Vector3d> velocities;    // m/s
  bool escaped = false;  // |r| exceeded 10x the initial envelope
};

// RK4 integration of m r'' = q E(r, t).
TrajectoryRecord integrate_motion(const TrapFieldModel& model,
                                  const Eigen::Vector3d& r0,
                                  const Eigen::Vector3d& v0, double t_span,
                                  double step);

struct SpectrumPeak {
  double frequency = 0;  // rad/s
  double amplitude = 0;  // m
};

// Windowed DFT peak extraction; frequencies ascending, amplitudes in meters.
std::vector<SpectrumPeak> extract_spectrum(const TrajectoryRecord& traj,
                                           int axis,
                                           double relative_threshold = 1e-4);

// U_ps,d / (m w^2 A_d^2) = (1/4)(Omega_d/w)^2.
double drive_pseudopotential_ratio(double omega_drive, double omega_secular);
// Inverse: the drive frequency exhausting a given ratio budget.
double limiting_drive_frequency(double omega_secular, double ratio_budget);

struct StabilityPoint {
  double a = 0;
  double q = 0;
  bool stable = false;
};

// Bounded-trajectory stability over >= `periods` secular periods for each
// (a, q) grid point of the Mathieu-parameterized axis.
std::vector<StabilityPoint> stability_scan(
    double mass, double charge, double omega_trap,
    const std::vector<std::pair<double, double>>& aq_grid, int periods = 200);

}  // namespace paratrap::trap
