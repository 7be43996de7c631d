#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <paratrap/constants.hpp>
#include <paratrap/noise.hpp>

using namespace paratrap;
using constants::pi;
using constants::two_pi;

TEST_CASE("plane noise matches the analytic surface integral") {
  // Isotropic fluctuating dipoles on an infinite plane at distance d:
  // integral of 2/r^6 over the surface = pi/d^4.
  for (double d : {30e-6, 100e-6}) {
    const double numeric = noise::dipole_field_noise(noise::Plane{d});
    CHECK(numeric == doctest::Approx(pi / std::pow(d, 4)).epsilon(0.01));
  }
}

TEST_CASE("plane noise scales as distance to the minus fourth") {
  const double d = 50e-6;
  const double n1 = noise::dipole_field_noise(noise::Plane{d});
  const double n2 = noise::dipole_field_noise(noise::Plane{2.0 * d});
  const double exponent = std::log(n2 / n1) / std::log(2.0);
  CHECK(exponent == doctest::Approx(-4.0).epsilon(0.02));
}

TEST_CASE("cone factor tracks alpha over ten") {
  const double r0 = 100e-6;
  const double plane = noise::dipole_field_noise(noise::Plane{r0});
  for (double alpha_deg : {10.0, 20.0, 30.0}) {
    const double alpha = alpha_deg * pi / 180.0;
    const double factor =
        noise::dipole_field_noise(noise::Cone{r0, alpha}) / plane;
    INFO("alpha = ", alpha_deg, " deg");
    CHECK(factor == doctest::Approx(alpha / 10.0).epsilon(0.25));
  }
  // Fully opened cone degenerates to the plane.
  CHECK(noise::dipole_field_noise(noise::Cone{r0, pi}) ==
        doctest::Approx(plane).epsilon(0.01));
}

TEST_CASE("ring factor: closed form exact, numeric integral close") {
  const double d = 100e-6;
  CHECK(noise::ring_noise_factor(d, 0.0) == doctest::Approx(2.0));
  CHECK(noise::ring_noise_factor(d, 0.25 * d) == doctest::Approx(3.0));

  const double plane = noise::dipole_field_noise(noise::Plane{d / 2.0});
  for (double ratio : {0.0, 0.1, 0.2, 0.3}) {
    const double numeric =
        noise::dipole_field_noise(noise::Ring{d, ratio * d}) / plane;
    const double closed = noise::ring_noise_factor(d, ratio * d);
    INFO("a/D = ", ratio);
    CHECK(std::abs(numeric - closed) / closed < 0.30);
  }
}

TEST_CASE("power-law extrapolation") {
  const double s = noise::extrapolate_noise(1e-10, 3.6e6, 500e6, 1.5);
  CHECK(s == doctest::Approx(1e-10 * std::pow(3.6e6 / 500e6, 1.5)));
  CHECK(noise::extrapolate_noise(1e-10, 3.6e6, 3.6e6, 2.7) ==
        doctest::Approx(1e-10));
}

TEST_CASE("field noise to heating rate conversion") {
  const double omega = two_pi * 500e6;
  const double s_e = 5.25e-11;
  const auto result = noise::heating_rate(s_e, omega, constants::electron_mass,
                                          constants::elementary_charge);
  const double expected = constants::elementary_charge *
                          constants::elementary_charge * s_e /
                          (4.0 * constants::electron_mass * constants::hbar *
                           omega);
  CHECK(result.quanta_per_s == doctest::Approx(expected));
  CHECK(result.tau1 == doctest::Approx(1.0 / expected));
}

TEST_CASE("calibrated reference reproduces both published rates") {
  const auto ref = noise::calibrated_reference();
  const double omega = two_pi * 500e6;
  auto rate_at = [&](double beta) {
    const double s =
        noise::extrapolate_noise(ref.s_ref, ref.f_ref, 500e6, beta);
    return noise::heating_rate(s, omega, constants::electron_mass,
                               constants::elementary_charge)
        .quanta_per_s;
  };
  CHECK(rate_at(1.0) == doctest::Approx(8100.0).epsilon(1e-6));
  CHECK(rate_at(1.5) == doctest::Approx(690.0).epsilon(1e-6));
  CHECK(ref.f_ref == doctest::Approx(3.6e6).epsilon(0.10));
}

TEST_CASE("surface-normal orientation is a strict lower bound") {
  noise::IntegrationOptions normal;
  normal.orientation = noise::DipoleOrientation::surface_normal;
  const double d = 50e-6;
  CHECK(noise::dipole_field_noise(noise::Plane{d}, {0, 0, 0}, normal) <
        noise::dipole_field_noise(noise::Plane{d}));
}

TEST_CASE("bad geometry throws") {
  CHECK_THROWS_AS(noise::dipole_field_noise(noise::Plane{0.0}),
                  noise::NoiseError);
  CHECK_THROWS_AS(noise::dipole_field_noise(noise::Cone{1e-4, -0.1}),
                  noise::NoiseError);
  CHECK_THROWS_AS(noise::heating_rate(-1.0, 1.0, 1.0, 1.0),
                  noise::NoiseError);
}
