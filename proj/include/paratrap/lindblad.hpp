#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "paratrap/quantum.hpp"

namespace paratrap {

// Scalar envelope of time multiplying a static operator. H(t) is the sum of
// env_k(t) * op_k; every term must appear together with its conjugate partner
// so the total stays Hermitian.
using Envelope = std::function<Complex(double)>;

struct HamiltonianTerm {
  OperatorMatrix op;
  Envelope envelope;  // nullptr means constant 1
};

struct CollapseTerm {
  OperatorMatrix op;
  double rate = 0;  // 1/s
};

struct LindbladModel {
  HilbertSpace space;
  std::vector<HamiltonianTerm> hamiltonian_terms;
  std::vector<CollapseTerm> collapse_ops;

  // Hamiltonian at time t, in rad/s (hbar absorbed).
  MatrixXcd hamiltonian(double t) const;
  // Adds op * env + h.c. as a conjugate pair.
  void add_pair(const OperatorMatrix& op, Envelope env);
  void add_static(const OperatorMatrix& hermitian_op);
};

enum class Integrator { rk4_fixed, rk45_adaptive };

struct EvolutionConfig {
  double t_start = 0;
  double t_end = 0;
  double step = 0;  // fixed-step size; also the sampling interval
  Integrator method = Integrator::rk4_fixed;
  std::vector<double> checkpoint_times;
  std::vector<OperatorMatrix> observables;
  double rk45_rel_tol = 1e-9;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<Complex>> observable_records;  // one series per observable
  std::vector<QuantumState> checkpoint_states;
  MatrixXcd final_rho;
};

// Integrates d rho/dt = -i[H(t), rho] + sum_k rate_k D[L_k] rho.
// Throws on trace drift beyond 1e-6 or checkpoint eigenvalues below -1e-6.
Trajectory evolve_lindblad(const LindbladModel& model, const QuantumState& rho0,
                           const EvolutionConfig& config);

// Decoherence parameter card for build_collapse_set.
struct QubitDecoherence {
  double tau1 = 0;  // s
  double tau2 = 0;  // s
};

std::vector<CollapseTerm> qubit_collapse(const OperatorMatrix& sm,
                                         const OperatorMatrix& sz,
                                         const QubitDecoherence& spec);
std::vector<CollapseTerm> resonator_collapse(const OperatorMatrix& a,
                                             double tau1);
// Infinite-temperature-bath convention: symmetric (a+, a) pair, both at the
// quoted quanta/s rate.
std::vector<CollapseTerm> heating_collapse(const OperatorMatrix& a,
                                           const OperatorMatrix& a_dagger,
                                           double quanta_per_s);

double dephasing_rate(double tau1, double tau2);

// Linear (beam-splitter + loss/heating) dynamics on second moments
// N_ij = <a_i^dag a_j>. Fast path for thermal-occupation problems.
struct GaussianModel {
  Eigen::MatrixXcd coupling;          // Hermitian, rad/s
  Eigen::VectorXd down_rates;         // collapse a_i, 1/s
  Eigen::VectorXd up_rates;           // collapse a_i^dag, 1/s
  Eigen::VectorXd initial_occupation; // nbar per mode

  int mode_count() const { return static_cast<int>(initial_occupation.size()); }
  void validate() const;
};

struct GaussianTrajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> occupations;  // per-mode <n>(t)
  Eigen::MatrixXcd final_moments;
};

GaussianTrajectory evolve_gaussian(const GaussianModel& model, double t_end,
                                   double step);

}  // namespace paratrap
