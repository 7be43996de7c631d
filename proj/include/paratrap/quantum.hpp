#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace paratrap {

using Complex = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;

struct QuantumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor-product structure of a truncated multi-mode Hilbert space.
// Bosonic modes carry their Fock truncation, qubits have dimension 2.
class HilbertSpace {
 public:
  HilbertSpace(std::vector<int> dims, std::vector<std::string> labels);

  int subsystem_count() const { return static_cast<int>(dims_.size()); }
  int dim(int index) const { return dims_.at(index); }
  int total_dim() const { return total_; }
  const std::string& label(int index) const { return labels_.at(index); }
  const std::vector<int>& dims() const { return dims_; }

  bool operator==(const HilbertSpace& other) const {
    return dims_ == other.dims_ && labels_ == other.labels_;
  }

 private:
  std::vector<int> dims_;
  std::vector<std::string> labels_;
  int total_ = 0;
};

// Dense complex operator on a truncated space. System sizes here stay small
// (total dimension of order 100), so dense storage is used throughout.
struct OperatorMatrix {
  MatrixXcd entries;
  bool hermitian_hint = false;

  OperatorMatrix() = default;
  OperatorMatrix(MatrixXcd m, bool hermitian = false);

  int dim() const { return static_cast<int>(entries.rows()); }
  OperatorMatrix adjoint() const { return {entries.adjoint(), hermitian_hint}; }
};

struct ModeOperators {
  OperatorMatrix a;
  OperatorMatrix a_dagger;
  OperatorMatrix n;
};

// Truncated annihilation/creation/number operators, a[k-1,k] = sqrt(k).
ModeOperators mode_operators(int dim);

OperatorMatrix identity_op(int dim);
OperatorMatrix sigma_x();
OperatorMatrix sigma_y();
OperatorMatrix sigma_z();
OperatorMatrix sigma_plus();   // |1><0|
OperatorMatrix sigma_minus();  // |0><1|

// Tensor product with identities on all other subsystems.
OperatorMatrix embed(const OperatorMatrix& op, const HilbertSpace& space,
                     int index);

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

// Density matrix on a space. Validity (trace one, Hermitian, positive up to
// integrator drift) is checked on construction and at solver checkpoints.
class QuantumState {
 public:
  QuantumState(HilbertSpace space, MatrixXcd rho);

  const HilbertSpace& space() const { return space_; }
  const MatrixXcd& rho() const { return rho_; }

  static QuantumState from_ket(const HilbertSpace& space, const VectorXcd& psi);
  // Product Fock state |n_0, n_1, ...>.
  static QuantumState fock(const HilbertSpace& space,
                           const std::vector<int>& occupations);
  // Single-mode thermal state with mean occupation nbar.
  static QuantumState thermal(const HilbertSpace& space, int index,
                              double nbar);

  static VectorXcd fock_ket(const HilbertSpace& space,
                            const std::vector<int>& occupations);

 private:
  HilbertSpace space_;
  MatrixXcd rho_;
};

// <psi|rho|psi> for a pure target, Uhlmann fidelity for a mixed one.
double state_fidelity(const QuantumState& rho, const QuantumState& target);

// Symmetrizes, renormalizes, and projects away integrator-drift negative
// eigenvalues above -1e-6 before constructing a valid state.
QuantumState sanitize_state(const HilbertSpace& space, const MatrixXcd& rho);

Complex expectation(const QuantumState& rho, const OperatorMatrix& op);

double purity(const MatrixXcd& rho);

}  // namespace paratrap
