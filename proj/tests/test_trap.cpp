#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <paratrap/constants.hpp>
#include <paratrap/trap.hpp>

#include "support/mathieu_oracle.hpp"

using namespace paratrap;
using constants::electron_mass;
using constants::elementary_charge;
using constants::two_pi;

namespace {

const double kOmega = two_pi * 7e9;

trap::TrapFieldModel card_model(double a, double q) {
  return trap::TrapFieldModel::from_mathieu(electron_mass, elementary_charge,
                                            kOmega, a, q);
}

}  // namespace

TEST_CASE("mathieu parameters round trip through the field model") {
  trap::TrapFieldModel model = card_model(0.01, 0.202);
  CHECK(model.mathieu_q(1) == doctest::Approx(0.202));
  CHECK(model.mathieu_a(1) == doctest::Approx(0.01));

  // Laplace: the oscillating quadrupole curvatures sum to zero.
  CHECK(model.rf_curvature[0] + model.rf_curvature[1] +
            model.rf_curvature[2] ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("field is the negative potential gradient") {
  trap::TrapFieldModel model = card_model(0.005, 0.202);
  model.drive_dipole = 30.0;
  model.drive_quadrupole = 5e7;
  model.omega_drive = two_pi * 6.5e9;

  auto potential = [&](const Eigen::Vector3d& r, double t) {
    double phi = 0;
    for (int i = 0; i < 3; ++i) {
      phi += std::cos(model.omega_trap * t) * model.rf_curvature[i] * r[i] *
             r[i];
      phi += model.static_curvature[i] * r[i] * r[i];
    }
    phi += std::cos(model.omega_drive * t) *
           (model.drive_dipole * r[1] + model.drive_quadrupole * r[1] * r[1]);
    return phi;
  };

  const Eigen::Vector3d r(0.3e-6, -0.7e-6, 0.2e-6);
  const double t = 1.3e-10;
  const double h = 1e-12;
  Eigen::Vector3d e = model.field(r, t);
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d rp = r, rm = r;
    rp[i] += h;
    rm[i] -= h;
    const double grad = (potential(rp, t) - potential(rm, t)) / (2.0 * h);
    CHECK(e[i] == doctest::Approx(-grad).epsilon(1e-5));
  }
}

TEST_CASE("static harmonic well oscillates at the secular frequency") {
  // a > 0, q = 0: plain SHO at w = (W/2) sqrt(a).
  const double a = 0.02;
  trap::TrapFieldModel model = card_model(a, 0.0);
  const double w_expected = kOmega / 2.0 * std::sqrt(a);

  const double h = two_pi / kOmega / 120.0;
  const int samples = 1 << 15;
  trap::TrajectoryRecord traj = trap::integrate_motion(
      model, {0, 1e-6, 0}, {0, 0, 0}, samples * h, h);
  REQUIRE(!traj.escaped);

  // Energy conservation over the record.
  double y_max = 0;
  for (const auto& r : traj.positions) y_max = std::max(y_max, std::abs(r[1]));
  CHECK(y_max == doctest::Approx(1e-6).epsilon(1e-4));

  const auto peaks = trap::extract_spectrum(traj, 1, 1e-3);
  REQUIRE(peaks.size() == 1);
  CHECK(peaks[0].frequency == doctest::Approx(w_expected).epsilon(1e-3));
  CHECK(peaks[0].amplitude == doctest::Approx(1e-6).epsilon(0.01));
}

TEST_CASE("floquet oracle reproduces the textbook edge and frequency") {
  // Mathieu stability edge for a = 0 sits at q = 0.908.
  const double edge = oracle::stability_edge(kOmega, 0.0, 0.85, 0.95);
  CHECK(edge == doctest::Approx(0.908).epsilon(0.002));

  // Small-q limit: w -> (W/2) q/sqrt(2).
  const auto small = oracle::mathieu_floquet(kOmega, 0.0, 0.01);
  CHECK(small.secular ==
        doctest::Approx(kOmega / 2.0 * 0.01 / std::sqrt(2.0)).epsilon(1e-4));
}

TEST_CASE("bounded-trajectory scan agrees with the floquet oracle") {
  std::vector<std::pair<double, double>> grid;
  for (double q : {0.2, 0.5, 0.85, 0.93, 0.95}) grid.push_back({0.0, q});
  const auto scan = trap::stability_scan(electron_mass, elementary_charge,
                                         kOmega, grid, 200);
  REQUIRE(scan.size() == grid.size());
  for (const auto& point : scan) {
    const auto ref = oracle::mathieu_floquet(kOmega, point.a, point.q);
    INFO("q = ", point.q);
    CHECK(point.stable == ref.stable);
  }
}

TEST_CASE("measured secular frequency matches the floquet oracle") {
  const double q = 0.202;
  trap::TrapFieldModel model = card_model(0.0, q);
  const double h = two_pi / kOmega / 120.0;
  trap::TrajectoryRecord traj = trap::integrate_motion(
      model, {0, 1e-6, 0}, {0, 0, 0}, (1 << 17) * h, h);
  REQUIRE(!traj.escaped);

  const auto peaks = trap::extract_spectrum(traj, 1, 1e-3);
  REQUIRE(!peaks.empty());
  const double reference = oracle::mathieu_floquet(kOmega, 0.0, q).secular;
  CHECK(peaks.front().frequency ==
        doctest::Approx(reference).epsilon(0.05));
}

TEST_CASE("unstable drive escapes") {
  trap::TrapFieldModel model = card_model(0.0, 0.95);
  const double h = two_pi / kOmega / 120.0;
  trap::TrajectoryRecord traj = trap::integrate_motion(
      model, {0, 1e-6, 0}, {0, 0, 0}, (1 << 15) * h, h);
  CHECK(traj.escaped);
}

TEST_CASE("pseudopotential budget helpers invert each other") {
  const double w = two_pi * 500e6;
  const double ratio = trap::drive_pseudopotential_ratio(two_pi * 6.5e9, w);
  CHECK(ratio == doctest::Approx(0.25 * std::pow(6.5e9 / 500e6, 2)));
  CHECK(trap::limiting_drive_frequency(w, ratio) ==
        doctest::Approx(two_pi * 6.5e9));
}

TEST_CASE("spectrum extraction needs enough samples") {
  trap::TrajectoryRecord tiny;
  for (int i = 0; i < 100; ++i) {
    tiny.times.push_back(i * 1e-12);
    tiny.positions.push_back({0, 0, 0});
    tiny.velocities.push_back({0, 0, 0});
  }
  CHECK_THROWS_AS(trap::extract_spectrum(tiny, 1), trap::TrapError);
}

TEST_CASE("model validation rejects broken quadrupoles") {
  trap::TrapFieldModel model = card_model(0.0, 0.2);
  model.rf_curvature[0] += 1.0;  // violates the Laplace constraint
  CHECK_THROWS_AS(model.validate(), trap::TrapError);
}
