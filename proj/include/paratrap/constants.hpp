#pragma once

namespace paratrap::constants {

// CODATA 2018 values, SI units.
inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double electron_mass = 9.1093837015e-31;     // kg
inline constexpr double bohr_magneton = 9.2740100783e-24;     // J/T
inline constexpr double mu0 = 1.25663706212e-6;          // N/A^2
inline constexpr double eps0 = 8.8541878128e-12;         // F/m
inline constexpr double boltzmann = 1.380649e-23;        // J/K
inline constexpr double electron_g_factor = 2.00231930436256;
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace paratrap::constants
