#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <paratrap/lindblad.hpp>

using namespace paratrap;

namespace {

Trajectory rabi_run(Integrator method, double omega, double t_end, int steps) {
  HilbertSpace space({2}, {"s"});
  LindbladModel model{space, {}, {}};
  model.add_static(OperatorMatrix{(omega / 2.0) * sigma_x().entries, true});

  EvolutionConfig cfg;
  cfg.t_end = t_end;
  cfg.step = t_end / steps;
  cfg.method = method;
  cfg.observables = {
      OperatorMatrix{sigma_plus().entries * sigma_minus().entries, true}};
  cfg.checkpoint_times = {t_end};
  return evolve_lindblad(model, QuantumState::fock(space, {0}), cfg);
}

}  // namespace

TEST_CASE("coherent rabi flopping matches sin^2") {
  const double omega = 2e6;
  const double t_end = 3e-6;
  Trajectory traj = rabi_run(Integrator::rk4_fixed, omega, t_end, 3000);
  for (std::size_t i = 0; i < traj.times.size(); i += 100) {
    const double expected = std::pow(std::sin(omega * traj.times[i] / 2.0), 2);
    CHECK(traj.observable_records[0][i].real() ==
          doctest::Approx(expected).epsilon(1e-7));
  }
}

TEST_CASE("adaptive integrator agrees with fixed step") {
  const double omega = 2e6;
  const double t_end = 3e-6;
  Trajectory fixed = rabi_run(Integrator::rk4_fixed, omega, t_end, 3000);
  Trajectory adaptive = rabi_run(Integrator::rk45_adaptive, omega, t_end, 3000);
  CHECK(std::abs(fixed.observable_records[0].back().real() -
                 adaptive.observable_records[0].back().real()) < 1e-6);
}

TEST_CASE("checkpoint states are valid density matrices") {
  Trajectory traj = rabi_run(Integrator::rk4_fixed, 2e6, 3e-6, 3000);
  REQUIRE(traj.checkpoint_states.size() == 1);
  CHECK(purity(traj.checkpoint_states[0].rho()) == doctest::Approx(1.0));
}

TEST_CASE("resonator decay follows exp(-t/tau1)") {
  const int dim = 6;
  const double tau1 = 10e-6;
  HilbertSpace space({dim}, {"r"});
  const auto ops = mode_operators(dim);
  LindbladModel model{space, {}, {}};
  for (auto& c : resonator_collapse(ops.a, tau1)) model.collapse_ops.push_back(c);

  EvolutionConfig cfg;
  cfg.t_end = 20e-6;
  cfg.step = cfg.t_end / 4000;
  cfg.observables = {ops.n};
  Trajectory traj =
      evolve_lindblad(model, QuantumState::fock(space, {3}), cfg);
  const double n_final = traj.observable_records[0].back().real();
  CHECK(n_final == doctest::Approx(3.0 * std::exp(-cfg.t_end / tau1))
                       .epsilon(1e-6));
}

TEST_CASE("symmetric heating pair fills a free mode linearly") {
  const int dim = 12;
  const double rate = 8100.0;
  HilbertSpace space({dim}, {"m"});
  const auto ops = mode_operators(dim);
  LindbladModel model{space, {}, {}};
  for (auto& c : heating_collapse(ops.a, ops.a_dagger, rate))
    model.collapse_ops.push_back(c);

  EvolutionConfig cfg;
  cfg.t_end = 250e-9;
  cfg.step = cfg.t_end / 500;
  cfg.observables = {ops.n};
  Trajectory traj =
      evolve_lindblad(model, QuantumState::fock(space, {0}), cfg);
  CHECK(traj.observable_records[0].back().real() ==
        doctest::Approx(rate * cfg.t_end).epsilon(1e-6));
}

TEST_CASE("pure dephasing rate and qubit collapse set") {
  const double tau1 = 70e-6, tau2 = 92e-6;
  const double expected = 1.0 / tau2 - 1.0 / (2.0 * tau1);
  CHECK(dephasing_rate(tau1, tau2) == doctest::Approx(expected));

  auto set = qubit_collapse(sigma_minus(), sigma_z(), {tau1, tau2});
  REQUIRE(set.size() == 2);
  CHECK(set[0].rate == doctest::Approx(1.0 / tau1));
}

TEST_CASE("hamiltonian pairs stay hermitian under a complex envelope") {
  HilbertSpace space({3, 3}, {"a", "b"});
  const auto m = mode_operators(3);
  OperatorMatrix hop =
      OperatorMatrix{kron(m.a_dagger, m.a).entries};
  LindbladModel model{space, {}, {}};
  model.add_pair(hop, [](double t) {
    return std::exp(Complex(0, 2.0 * M_PI * 1e6 * t));
  });
  const MatrixXcd h = model.hamiltonian(0.37e-6);
  CHECK((h - h.adjoint()).norm() == doctest::Approx(0.0));
}

TEST_CASE("gaussian beam splitter exchanges occupation") {
  const double g = 2.0 * M_PI * 1.1e6;
  GaussianModel model;
  model.coupling = Eigen::MatrixXcd::Zero(2, 2);
  model.coupling(0, 1) = model.coupling(1, 0) = g;
  model.down_rates = Eigen::Vector2d::Zero();
  model.up_rates = Eigen::Vector2d::Zero();
  model.initial_occupation = Eigen::Vector2d(3.0, 0.0);

  const double t_end = M_PI / (2.0 * g);  // full swap
  GaussianTrajectory traj = evolve_gaussian(model, t_end, t_end / 2000);
  CHECK(traj.occupations.back()(0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(traj.occupations.back()(1) == doctest::Approx(3.0).epsilon(1e-9));

  // cos^2/sin^2 profile along the way
  const std::size_t mid = traj.times.size() / 2;
  const double phase = g * traj.times[mid];
  CHECK(traj.occupations[mid](0) ==
        doctest::Approx(3.0 * std::pow(std::cos(phase), 2)).epsilon(1e-6));
}

TEST_CASE("gaussian solver matches the fock solver with losses") {
  // The second-moment equations close for any state under quadratic
  // Hamiltonians and linear baths, so a Fock-basis run with matched rates is
  // an independent cross-check of the covariance propagator.
  const double g = 2.0 * M_PI * 1.1e6;
  const double nbar = 2.0;
  const double heat = 8100.0;
  const double tau1 = 45e-6;
  const double t_end = M_PI / (2.0 * g);

  GaussianModel gm;
  gm.coupling = Eigen::MatrixXcd::Zero(2, 2);
  gm.coupling(0, 1) = gm.coupling(1, 0) = g;
  gm.down_rates = Eigen::Vector2d(heat, heat + 1.0 / tau1);
  gm.up_rates = Eigen::Vector2d(heat, heat);
  gm.initial_occupation = Eigen::Vector2d(nbar, 0.0);
  GaussianTrajectory gt = evolve_gaussian(gm, t_end, t_end / 2000);

  const int dim = 6;  // |2,0> initial: exchange stays within two excitations
  HilbertSpace space({dim, dim}, {"e", "r"});
  const auto m = mode_operators(dim);
  LindbladModel fock{space, {}, {}};
  fock.add_static(OperatorMatrix{
      g * (kron(m.a_dagger, m.a).entries + kron(m.a, m.a_dagger).entries),
      true});
  const OperatorMatrix a1 = embed(m.a, space, 0);
  const OperatorMatrix a1d = embed(m.a_dagger, space, 0);
  const OperatorMatrix a2 = embed(m.a, space, 1);
  const OperatorMatrix a2d = embed(m.a_dagger, space, 1);
  for (auto& c : heating_collapse(a1, a1d, heat)) fock.collapse_ops.push_back(c);
  for (auto& c : heating_collapse(a2, a2d, heat)) fock.collapse_ops.push_back(c);
  for (auto& c : resonator_collapse(a2, tau1)) fock.collapse_ops.push_back(c);

  EvolutionConfig cfg;
  cfg.t_end = t_end;
  cfg.step = t_end / 2000;
  cfg.observables = {embed(m.n, space, 0), embed(m.n, space, 1)};
  Trajectory ft =
      evolve_lindblad(fock, QuantumState::fock(space, {2, 0}), cfg);

  REQUIRE(ft.times.size() == gt.times.size());
  double worst = 0;
  for (std::size_t i = 0; i < ft.times.size(); ++i) {
    worst = std::max(worst, std::abs(ft.observable_records[0][i].real() -
                                     gt.occupations[i](0)));
    worst = std::max(worst, std::abs(ft.observable_records[1][i].real() -
                                     gt.occupations[i](1)));
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("gaussian model validation") {
  GaussianModel bad;
  bad.coupling = Eigen::MatrixXcd::Zero(2, 2);
  bad.coupling(0, 1) = 1.0;  // not hermitian
  bad.down_rates = Eigen::Vector2d::Zero();
  bad.up_rates = Eigen::Vector2d::Zero();
  bad.initial_occupation = Eigen::Vector2d::Zero();
  CHECK_THROWS(bad.validate());
}
