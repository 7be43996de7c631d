#include "paratrap/quantum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>

namespace paratrap {

HilbertSpace::HilbertSpace(std::vector<int> dims, std::vector<std::string> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.empty()) throw QuantumError("HilbertSpace: no subsystems");
  if (labels_.size() != dims_.size())
    throw QuantumError("HilbertSpace: label/dimension count mismatch");
  total_ = 1;
  for (int d : dims_) {
    if (d < 2) throw QuantumError("HilbertSpace: every dimension must be >= 2");
    total_ *= d;
  }
  std::set<std::string> unique(labels_.begin(), labels_.end());
  if (unique.size() != labels_.size())
    throw QuantumError("HilbertSpace: labels must be unique");
}

OperatorMatrix::OperatorMatrix(MatrixXcd m, bool hermitian)
    : entries(std::move(m)), hermitian_hint(hermitian) {
  if (entries.rows() != entries.cols())
    throw QuantumError("OperatorMatrix: matrix must be square");
  if (hermitian_hint) {
    const double defect =
        (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (defect >= 1e-12)
      throw QuantumError("OperatorMatrix: hermitian_hint violated");
  }
}

ModeOperators mode_operators(int dim) {
  if (dim < 2) throw QuantumError("mode_operators: invalid-dimension");
  MatrixXcd a = MatrixXcd::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(double(k));
  MatrixXcd n = MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = double(k);
  return {OperatorMatrix(a), OperatorMatrix(a.adjoint().eval()),
          OperatorMatrix(n, true)};
}

OperatorMatrix identity_op(int dim) {
  return {MatrixXcd::Identity(dim, dim), true};
}

OperatorMatrix sigma_x() {
  MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return {m, true};
}

OperatorMatrix sigma_y() {
  MatrixXcd m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return {m, true};
}

OperatorMatrix sigma_z() {
  MatrixXcd m(2, 2);
  m << 1, 0, 0, -1;
  return {m, true};
}

OperatorMatrix sigma_plus() {
  MatrixXcd m = MatrixXcd::Zero(2, 2);
  m(1, 0) = 1;
  return {m};
}

OperatorMatrix sigma_minus() {
  MatrixXcd m = MatrixXcd::Zero(2, 2);
  m(0, 1) = 1;
  return {m};
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  const int ra = a.dim(), rb = b.dim();
  MatrixXcd out(ra * rb, ra * rb);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ra; ++j)
      out.block(i * rb, j * rb, rb, rb) = a.entries(i, j) * b.entries;
  return {out, a.hermitian_hint && b.hermitian_hint};
}

OperatorMatrix embed(const OperatorMatrix& op, const HilbertSpace& space,
                     int index) {
  if (index < 0 || index >= space.subsystem_count())
    throw QuantumError("embed: subsystem index out of range");
  if (op.dim() != space.dim(index))
    throw QuantumError("embed: invalid-embedding (dimension mismatch)");
  OperatorMatrix out = identity_op(1);
  for (int k = 0; k < space.subsystem_count(); ++k)
    out = kron(out, k == index ? op : identity_op(space.dim(k)));
  return out;
}

QuantumState::QuantumState(HilbertSpace space, MatrixXcd rho)
    : space_(std::move(space)), rho_(std::move(rho)) {
  if (rho_.rows() != space_.total_dim() || rho_.cols() != space_.total_dim())
    throw QuantumError("QuantumState: density matrix does not match space");
  if (std::abs(rho_.trace().real() - 1.0) > 1e-10 ||
      std::abs(rho_.trace().imag()) > 1e-10)
    throw QuantumError("QuantumState: trace must be 1");
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw QuantumError("QuantumState: density matrix must be Hermitian");
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho_,
                                              Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw QuantumError("QuantumState: negative eigenvalue beyond tolerance");
}

QuantumState QuantumState::from_ket(const HilbertSpace& space,
                                    const VectorXcd& psi) {
  if (psi.size() != space.total_dim())
    throw QuantumError("from_ket: vector does not match space");
  VectorXcd v = psi / psi.norm();
  return QuantumState(space, v * v.adjoint());
}

VectorXcd QuantumState::fock_ket(const HilbertSpace& space,
                                 const std::vector<int>& occupations) {
  if (static_cast<int>(occupations.size()) != space.subsystem_count())
    throw QuantumError("fock_ket: occupation count mismatch");
  int idx = 0;
  for (int k = 0; k < space.subsystem_count(); ++k) {
    if (occupations[k] < 0 || occupations[k] >= space.dim(k))
      throw QuantumError("fock_ket: occupation exceeds truncation");
    idx = idx * space.dim(k) + occupations[k];
  }
  VectorXcd v = VectorXcd::Zero(space.total_dim());
  v(idx) = 1.0;
  return v;
}

QuantumState QuantumState::fock(const HilbertSpace& space,
                                const std::vector<int>& occupations) {
  return from_ket(space, fock_ket(space, occupations));
}

QuantumState QuantumState::thermal(const HilbertSpace& space, int index,
                                   double nbar) {
  if (nbar < 0) throw QuantumError("thermal: nbar must be >= 0");
  MatrixXcd rho = MatrixXcd::Identity(1, 1);
  for (int k = 0; k < space.subsystem_count(); ++k) {
    const int d = space.dim(k);
    MatrixXcd block = MatrixXcd::Zero(d, d);
    if (k == index && nbar > 0) {
      const double r = nbar / (1.0 + nbar);
      double norm = 0;
      for (int m = 0; m < d; ++m) norm += std::pow(r, m);
      for (int m = 0; m < d; ++m) block(m, m) = std::pow(r, m) / norm;
    } else {
      block(0, 0) = 1.0;
    }
    rho = kron(OperatorMatrix(rho), OperatorMatrix(block)).entries;
  }
  return QuantumState(space, rho);
}

double purity(const MatrixXcd& rho) { return (rho * rho).trace().real(); }

QuantumState sanitize_state(const HilbertSpace& space, const MatrixXcd& rho) {
  MatrixXcd sym = (rho + rho.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(sym);
  if (es.eigenvalues().minCoeff() < -1e-6)
    throw QuantumError("sanitize_state: positivity-violation");
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  MatrixXcd clean =
      es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  clean /= clean.trace().real();
  return QuantumState(space, clean);
}

double state_fidelity(const QuantumState& rho, const QuantumState& target) {
  if (!(rho.space() == target.space()))
    throw QuantumError("state_fidelity: invalid-comparison (space mismatch)");
  const MatrixXcd& r = rho.rho();
  const MatrixXcd& t = target.rho();
  if (purity(t) > 1.0 - 1e-9) {
    // Pure target: F = <psi|rho|psi> = tr(rho * |psi><psi|).
    double f = (r * t).trace().real();
    return std::clamp(f, 0.0, 1.0);
  }
  // Uhlmann fidelity (tr sqrt(sqrt(r) t sqrt(r)))^2.
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(r);
  MatrixXcd sqrt_r = es.operatorSqrt();
  MatrixXcd inner = sqrt_r * t * sqrt_r;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es2((inner + inner.adjoint()) / 2.0);
  double sum = 0;
  for (int i = 0; i < es2.eigenvalues().size(); ++i)
    sum += std::sqrt(std::max(0.0, es2.eigenvalues()(i)));
  return std::clamp(sum * sum, 0.0, 1.0);
}

Complex expectation(const QuantumState& rho, const OperatorMatrix& op) {
  if (op.dim() != rho.space().total_dim())
    throw QuantumError("expectation: dimension mismatch");
  return (rho.rho() * op.entries).trace();
}

}  // namespace paratrap
