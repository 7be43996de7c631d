#include "paratrap/lindblad.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace paratrap {

namespace {
constexpr Complex kI{0.0, 1.0};
}

MatrixXcd LindbladModel::hamiltonian(double t) const {
  const int d = space.total_dim();
  MatrixXcd h = MatrixXcd::Zero(d, d);
  for (const auto& term : hamiltonian_terms) {
    const Complex env = term.envelope ? term.envelope(t) : Complex(1, 0);
    h += env * term.op.entries;
  }
  return h;
}

void LindbladModel::add_pair(const OperatorMatrix& op, Envelope env) {
  hamiltonian_terms.push_back({op, env});
  Envelope conj_env;
  if (env) conj_env = [env](double t) { return std::conj(env(t)); };
  hamiltonian_terms.push_back({op.adjoint(), conj_env});
}

void LindbladModel::add_static(const OperatorMatrix& hermitian_op) {
  hamiltonian_terms.push_back({hermitian_op, nullptr});
}

double dephasing_rate(double tau1, double tau2) {
  if (tau2 > 2 * tau1 + 1e-15 * tau1)
    throw QuantumError("unphysical-dephasing: tau2 > 2*tau1");
  return 1.0 / tau2 - 1.0 / (2.0 * tau1);
}

std::vector<CollapseTerm> qubit_collapse(const OperatorMatrix& sm,
                                         const OperatorMatrix& sz,
                                         const QubitDecoherence& spec) {
  const double gamma_phi = dephasing_rate(spec.tau1, spec.tau2);
  std::vector<CollapseTerm> out;
  out.push_back({sm, 1.0 / spec.tau1});
  if (gamma_phi > 0) out.push_back({sz, gamma_phi / 2.0});
  return out;
}

std::vector<CollapseTerm> resonator_collapse(const OperatorMatrix& a,
                                             double tau1) {
  return {{a, 1.0 / tau1}};
}

std::vector<CollapseTerm> heating_collapse(const OperatorMatrix& a,
                                           const OperatorMatrix& a_dagger,
                                           double quanta_per_s) {
  if (quanta_per_s < 0) throw QuantumError("heating rate must be >= 0");
  return {{a_dagger, quanta_per_s}, {a, quanta_per_s}};
}

namespace {

struct Dissipator {
  MatrixXcd l;
  MatrixXcd l_dag;
  MatrixXcd ldl;  // L^dag L
  double rate;
};

struct Rhs {
  const LindbladModel* model;
  std::vector<Dissipator> diss;

  explicit Rhs(const LindbladModel& m) : model(&m) {
    for (const auto& c : m.collapse_ops) {
      if (c.rate < 0) throw QuantumError("collapse rate must be >= 0");
      if (c.rate == 0) continue;
      Dissipator d;
      d.l = c.op.entries;
      d.l_dag = d.l.adjoint();
      d.ldl = d.l_dag * d.l;
      d.rate = c.rate;
      diss.push_back(std::move(d));
    }
  }

  MatrixXcd operator()(double t, const MatrixXcd& rho) const {
    MatrixXcd h = model->hamiltonian(t);
    MatrixXcd out = -kI * (h * rho - rho * h);
    for (const auto& d : diss) {
      out += d.rate * (d.l * rho * d.l_dag -
                       0.5 * (d.ldl * rho + rho * d.ldl));
    }
    return out;
  }
};

MatrixXcd rk4_step(const Rhs& rhs, double t, double h, const MatrixXcd& rho) {
  MatrixXcd k1 = rhs(t, rho);
  MatrixXcd k2 = rhs(t + h / 2, rho + (h / 2) * k1);
  MatrixXcd k3 = rhs(t + h / 2, rho + (h / 2) * k2);
  MatrixXcd k4 = rhs(t + h, rho + h * k3);
  return rho + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
}

// Cash-Karp 4(5) embedded pair, advancing exactly to t1.
MatrixXcd rk45_advance(const Rhs& rhs, double t0, double t1, MatrixXcd rho,
                       double rel_tol, double& h_guess) {
  static const double a2 = 1.0 / 5, a3 = 3.0 / 10, a4 = 3.0 / 5, a5 = 1.0,
                      a6 = 7.0 / 8;
  static const double b21 = 1.0 / 5;
  static const double b31 = 3.0 / 40, b32 = 9.0 / 40;
  static const double b41 = 3.0 / 10, b42 = -9.0 / 10, b43 = 6.0 / 5;
  static const double b51 = -11.0 / 54, b52 = 5.0 / 2, b53 = -70.0 / 27,
                      b54 = 35.0 / 27;
  static const double b61 = 1631.0 / 55296, b62 = 175.0 / 512,
                      b63 = 575.0 / 13824, b64 = 44275.0 / 110592,
                      b65 = 253.0 / 4096;
  static const double c1 = 37.0 / 378, c3 = 250.0 / 621, c4 = 125.0 / 594,
                      c6 = 512.0 / 1771;
  static const double d1 = 2825.0 / 27648, d3 = 18575.0 / 48384,
                      d4 = 13525.0 / 55296, d5 = 277.0 / 14336, d6 = 1.0 / 4;

  double t = t0;
  double h = std::min(h_guess, t1 - t0);
  while (t < t1 - 1e-18 * std::abs(t1)) {
    h = std::min(h, t1 - t);
    MatrixXcd k1 = rhs(t, rho);
    MatrixXcd k2 = rhs(t + a2 * h, rho + h * (b21 * k1));
    MatrixXcd k3 = rhs(t + a3 * h, rho + h * (b31 * k1 + b32 * k2));
    MatrixXcd k4 = rhs(t + a4 * h, rho + h * (b41 * k1 + b42 * k2 + b43 * k3));
    MatrixXcd k5 = rhs(t + a5 * h,
                       rho + h * (b51 * k1 + b52 * k2 + b53 * k3 + b54 * k4));
    MatrixXcd k6 =
        rhs(t + a6 * h,
            rho + h * (b61 * k1 + b62 * k2 + b63 * k3 + b64 * k4 + b65 * k5));
    MatrixXcd next = rho + h * (c1 * k1 + c3 * k3 + c4 * k4 + c6 * k6);
    MatrixXcd err = h * ((c1 - d1) * k1 + (c3 - d3) * k3 + (c4 - d4) * k4 -
                         d5 * k5 + (c6 - d6) * k6);
    const double scale = std::max(rho.cwiseAbs().maxCoeff(), 1e-12);
    const double e = err.cwiseAbs().maxCoeff() / (rel_tol * scale);
    if (e <= 1.0) {
      t += h;
      rho = std::move(next);
      h *= std::min(5.0, 0.9 * std::pow(std::max(e, 1e-10), -0.2));
    } else {
      h *= std::max(0.1, 0.9 * std::pow(e, -0.25));
    }
  }
  h_guess = h;
  return rho;
}

}  // namespace

Trajectory evolve_lindblad(const LindbladModel& model, const QuantumState& rho0,
                           const EvolutionConfig& config) {
  if (!(rho0.space() == model.space))
    throw QuantumError("evolve_lindblad: initial state not on model space");
  if (config.step <= 0 || config.t_end <= config.t_start)
    throw QuantumError("evolve_lindblad: invalid time span or step");
  {
    // Hermiticity of H(t) at a few sampled times.
    const double span = config.t_end - config.t_start;
    for (double f : {0.0, 0.37, 0.71, 1.0}) {
      MatrixXcd h = model.hamiltonian(config.t_start + f * span);
      if ((h - h.adjoint()).cwiseAbs().maxCoeff() >
          1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff()))
        throw QuantumError("evolve_lindblad: Hamiltonian not Hermitian");
    }
  }

  const Rhs rhs(model);
  const int n_steps = static_cast<int>(
      std::ceil((config.t_end - config.t_start) / config.step - 1e-9));
  const double h = (config.t_end - config.t_start) / n_steps;

  std::vector<double> checkpoints = config.checkpoint_times;
  std::sort(checkpoints.begin(), checkpoints.end());
  std::size_t next_cp = 0;

  Trajectory traj;
  traj.observable_records.resize(config.observables.size());
  MatrixXcd rho = rho0.rho();
  double h45 = h;

  auto record = [&](double t, const MatrixXcd& r) {
    traj.times.push_back(t);
    for (std::size_t k = 0; k < config.observables.size(); ++k)
      traj.observable_records[k].push_back(
          (r * config.observables[k].entries).trace());
  };

  auto checkpoint = [&](double t, const MatrixXcd& r) {
    try {
      traj.checkpoint_states.push_back(sanitize_state(model.space, r));
    } catch (const QuantumError&) {
      throw QuantumError("positivity-violation at checkpoint t=" +
                         std::to_string(t));
    }
  };

  record(config.t_start, rho);
  double t = config.t_start;
  for (int i = 0; i < n_steps; ++i) {
    const double t_next = config.t_start + (i + 1) * h;
    if (config.method == Integrator::rk4_fixed) {
      rho = rk4_step(rhs, t, h, rho);
    } else {
      rho = rk45_advance(rhs, t, t_next, std::move(rho), config.rk45_rel_tol,
                         h45);
    }
    t = t_next;
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-6)
      throw QuantumError("integration-diverged: trace drift " +
                         std::to_string(tr - 1.0));
    record(t, rho);
    while (next_cp < checkpoints.size() && checkpoints[next_cp] <= t + h / 2) {
      checkpoint(t, rho);
      ++next_cp;
    }
  }
  traj.final_rho = rho;
  return traj;
}

void GaussianModel::validate() const {
  const int n = mode_count();
  if (coupling.rows() != n || coupling.cols() != n)
    throw QuantumError("GaussianModel: coupling matrix size mismatch");
  if ((coupling - coupling.adjoint()).cwiseAbs().maxCoeff() >
      1e-9 * std::max(1.0, coupling.cwiseAbs().maxCoeff()))
    throw QuantumError("GaussianModel: coupling matrix must be Hermitian");
  if (down_rates.size() != n || up_rates.size() != n)
    throw QuantumError("GaussianModel: rate vector size mismatch");
  if (down_rates.minCoeff() < 0 || up_rates.minCoeff() < 0)
    throw QuantumError("GaussianModel: rates must be >= 0");
  if (initial_occupation.minCoeff() < 0)
    throw QuantumError("GaussianModel: occupations must be >= 0");
}

GaussianTrajectory evolve_gaussian(const GaussianModel& model, double t_end,
                                   double step) {
  model.validate();
  if (step <= 0 || t_end < 0)
    throw QuantumError("evolve_gaussian: invalid span or step");
  const int n = model.mode_count();

  // d N/dt = i(G* N - N G*) - (Gamma N + N Gamma)/2 + diag(up),
  // with Gamma = diag(down - up); N_ij = <a_i^dag a_j>.
  const MatrixXcd g_conj = model.coupling.conjugate();
  Eigen::VectorXd gamma = model.down_rates - model.up_rates;
  MatrixXcd moments = model.initial_occupation.cast<Complex>().asDiagonal();

  auto rhs = [&](const MatrixXcd& nmat) {
    MatrixXcd out = kI * (g_conj * nmat - nmat * g_conj);
    out -= 0.5 * (gamma.cast<Complex>().asDiagonal() * nmat +
                  nmat * gamma.cast<Complex>().asDiagonal());
    out += model.up_rates.cast<Complex>().asDiagonal();
    return out;
  };

  const int n_steps =
      std::max(1, static_cast<int>(std::ceil(t_end / step - 1e-9)));
  const double h = t_end / n_steps;

  GaussianTrajectory traj;
  auto record = [&](double t) {
    traj.times.push_back(t);
    traj.occupations.push_back(moments.diagonal().real());
  };
  record(0.0);
  for (int i = 0; i < n_steps; ++i) {
    MatrixXcd k1 = rhs(moments);
    MatrixXcd k2 = rhs(moments + (h / 2) * k1);
    MatrixXcd k3 = rhs(moments + (h / 2) * k2);
    MatrixXcd k4 = rhs(moments + h * k3);
    moments += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    record((i + 1) * h);
  }
  traj.final_moments = moments;
  return traj;
}

}  // namespace paratrap
