#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <variant>

namespace paratrap::noise {

struct NoiseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Electrode surfaces, placed below the observation point along -y.
struct Plane {
  double distance = 0;  // m
};

struct Cone {
  double apex_distance = 0;   // R0, m
  double opening_angle = 0;   // full apex angle, rad; pi is a flat plane
};

struct Ring {
  double inner_diameter = 0;  // D, m
  double thickness = 0;       // axial thickness a, m
};

using SurfaceGeometry = std::variant<Plane, Cone, Ring>;

// Fluctuating-dipole orientation convention. Isotropic incoherent
// orientations with the full field power reproduce the published cone and
// ring factors; the normal-orientation variant projects onto the y axis
// and is kept for comparison.
enum class DipoleOrientation { isotropic, surface_normal };

struct IntegrationOptions {
  DipoleOrientation orientation = DipoleOrientation::isotropic;
  double rel_tol = 0.01;
  double cutoff_factor = 1e3;  // surface truncated at cutoff * distance scale
  int max_refinements = 6;
};

// Incoherent surface integral of dipole field noise, in relative units of
// (dipole density x dipole strength^2)/(4 pi eps0)^2. Observation point is
// the trap center at the origin.
double dipole_field_noise(const SurfaceGeometry& surface,
                          const Eigen::Vector3d& observation = {0, 0, 0},
                          const IntegrationOptions& options = {});

// Closed-form ring factor 2(1 + 2a/D) relative to a plane at D/2.
double ring_noise_factor(double inner_diameter, double thickness);

// S_E(f) = S_ref (f_ref/f)^beta.
double extrapolate_noise(double s_ref, double f_ref, double f, double beta);

struct HeatingResult {
  double s_e = 0;      // (V/m)^2/Hz at omega
  double quanta_per_s = 0;
  double tau1 = 0;     // s
};

// Standard field-noise to heating conversion Gamma = q^2 S_E/(4 m hbar w).
HeatingResult heating_rate(double s_e_at_omega, double omega, double mass,
                           double charge);

// Reference-noise preset: a single (S_ref, f_ref) pair calibrated so that
// beta = 1 reproduces 8100 quanta/s for an electron at 2 pi x 500 MHz, which
// then also yields 690 quanta/s for beta = 3/2.
struct NoiseReference {
  double s_ref = 0;   // (V/m)^2/Hz at f_ref
  double f_ref = 0;   // Hz
};
NoiseReference calibrated_reference();

}  // namespace paratrap::noise
