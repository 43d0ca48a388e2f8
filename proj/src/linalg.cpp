#include "qsem/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qsem {

namespace {

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
  }
}

/// Rotates a vector so its first non-negligible component is real positive.
/// Keeps eigenvector output canonical across runs.
void canonicalize_phase(Eigen::VectorXcd& v, double eps) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > eps) {
      v *= std::conj(v[i]) / a;
      return;
    }
  }
}

/// Modified Gram-Schmidt with a re-orthogonalization pass. Vectors whose
/// residual norm falls below eps are dropped as dependent.
std::vector<Eigen::VectorXcd> orthonormalize(
    const std::vector<Eigen::VectorXcd>& vectors, double eps) {
  std::vector<Eigen::VectorXcd> basis;
  for (const auto& v : vectors) {
    Eigen::VectorXcd w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        w -= q * q.dot(w);
      }
    }
    const double n = w.norm();
    if (n >= eps) {
      basis.push_back(w / n);
    }
  }
  return basis;
}

/// Hermitian eigen-decomposition keeping eigenvectors whose eigenvalue is
/// above the cut, phases canonicalized. Eigen sorts eigenvalues ascending,
/// so the output order is deterministic.
std::vector<Ket> eigenvectors_above(const Eigen::MatrixXcd& m, double cut,
                                    double phase_eps) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::invalid_argument("eigen-decomposition failed to converge");
  }
  std::vector<Ket> kept;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (solver.eigenvalues()[i] > cut) {
      Eigen::VectorXcd v = solver.eigenvectors().col(i);
      canonicalize_phase(v, phase_eps);
      kept.emplace_back(std::move(v));
    }
  }
  return kept;
}

}  // namespace

CMatrix::CMatrix(Eigen::MatrixXcd m) : mat_(std::move(m)) {
  if (mat_.rows() == 0 || mat_.rows() != mat_.cols()) {
    throw std::invalid_argument("CMatrix must be square and non-empty");
  }
  if (!mat_.allFinite()) {
    throw std::invalid_argument("CMatrix entries must be finite");
  }
}

CMatrix CMatrix::zero(int dim) {
  return CMatrix(Eigen::MatrixXcd::Zero(dim, dim));
}

CMatrix CMatrix::identity(int dim) {
  return CMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

CMatrix CMatrix::operator*(const CMatrix& other) const {
  require_same_dim(dim(), other.dim(), "matrix product");
  return CMatrix(mat_ * other.mat_);
}

CMatrix CMatrix::operator+(const CMatrix& other) const {
  require_same_dim(dim(), other.dim(), "matrix sum");
  return CMatrix(mat_ + other.mat_);
}

CMatrix CMatrix::operator-(const CMatrix& other) const {
  require_same_dim(dim(), other.dim(), "matrix difference");
  return CMatrix(mat_ - other.mat_);
}

CMatrix CMatrix::adjoint() const { return CMatrix(mat_.adjoint()); }

Ket::Ket(Eigen::VectorXcd v) : vec_(std::move(v)) {
  if (vec_.size() == 0) {
    throw std::invalid_argument("Ket must be non-empty");
  }
  if (!vec_.allFinite()) {
    throw std::invalid_argument("Ket amplitudes must be finite");
  }
}

Ket Ket::basis(int dim, int index) {
  if (index < 0 || index >= dim) {
    throw std::invalid_argument("basis index out of range");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v[index] = 1.0;
  return Ket(std::move(v));
}

bool Ket::is_normalized(Tolerance tol) const {
  return std::abs(norm() - 1.0) < tol.eps;
}

Projector::Projector(CMatrix m, Tolerance tol) : matrix_(std::move(m)) {
  const Eigen::MatrixXcd& p = matrix_.mat();
  if ((p - p.adjoint()).norm() >= tol.eps) {
    throw std::invalid_argument("projector must be Hermitian");
  }
  if ((p * p - p).norm() >= tol.eps) {
    throw std::invalid_argument("projector must be idempotent");
  }
}

Projector Projector::zero(int dim) { return Projector(CMatrix::zero(dim)); }

Projector Projector::identity(int dim) {
  return Projector(CMatrix::identity(dim));
}

Subspace::Subspace(int dim, std::vector<Ket> orthonormal_basis, Tolerance tol)
    : dim_(dim), basis_(std::move(orthonormal_basis)) {
  if (dim_ <= 0) {
    throw std::invalid_argument("Subspace dimension must be positive");
  }
  if (static_cast<int>(basis_.size()) > dim_) {
    throw std::invalid_argument("Subspace rank exceeds ambient dimension");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].dim() != dim_) {
      throw std::invalid_argument("Subspace basis vector has wrong dimension");
    }
    if (!basis_[i].is_normalized(tol)) {
      throw std::invalid_argument("Subspace basis vector is not unit-norm");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(basis_[j].vec().dot(basis_[i].vec())) >= tol.eps) {
        throw std::invalid_argument("Subspace basis is not orthogonal");
      }
    }
  }
}

Subspace Subspace::zero(int dim) { return Subspace(dim, {}); }

Subspace Subspace::full(int dim) {
  std::vector<Ket> basis;
  basis.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    basis.push_back(Ket::basis(dim, i));
  }
  return Subspace(dim, std::move(basis));
}

Subspace Subspace::span_of(int dim, const std::vector<Ket>& vectors,
                           Tolerance tol) {
  std::vector<Eigen::VectorXcd> raw;
  raw.reserve(vectors.size());
  for (const auto& v : vectors) {
    require_same_dim(v.dim(), dim, "span_of");
    raw.push_back(v.vec());
  }
  std::vector<Ket> basis;
  for (auto& q : orthonormalize(raw, tol.eps)) {
    basis.emplace_back(std::move(q));
  }
  return Subspace(dim, std::move(basis), tol);
}

Projector Subspace::projector(Tolerance tol) const {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (const auto& q : basis_) {
    p += q.vec() * q.vec().adjoint();
  }
  return Projector(CMatrix(std::move(p)), tol);
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "commutator");
  return CMatrix(a.mat() * b.mat() - b.mat() * a.mat());
}

bool is_zero(const CMatrix& m, Tolerance tol) {
  return m.frobenius_norm() < tol.eps;
}

bool is_identity(const CMatrix& m, Tolerance tol) {
  return (m.mat() - Eigen::MatrixXcd::Identity(m.dim(), m.dim())).norm() <
         tol.eps;
}

Projector projector_onto(int dim, const std::vector<Ket>& vectors,
                         Tolerance tol) {
  return Subspace::span_of(dim, vectors, tol).projector(tol);
}

Subspace range_of(const Projector& p, Tolerance tol) {
  // Spectrum is {0,1} within eps, so a cut at 1/2 separates cleanly.
  return Subspace(p.dim(), eigenvectors_above(p.matrix().mat(), 0.5, tol.eps),
                  tol);
}

Subspace orthocomplement(const Subspace& s, Tolerance tol) {
  Eigen::MatrixXcd q =
      Eigen::MatrixXcd::Identity(s.dim(), s.dim()) -
      s.projector(tol).matrix().mat();
  return Subspace(s.dim(), eigenvectors_above(q, 0.5, tol.eps), tol);
}

Subspace intersect(const Subspace& a, const Subspace& b, Tolerance tol) {
  require_same_dim(a.dim(), b.dim(), "intersect");
  const Eigen::MatrixXcd sum =
      a.projector(tol).matrix().mat() + b.projector(tol).matrix().mat();
  // Eigenvalues of P_a + P_b lie in [0,2]; exactly 2 on a ^ b.
  return Subspace(a.dim(), eigenvectors_above(sum, 2.0 - tol.eps, tol.eps),
                  tol);
}

Subspace span_sum(const Subspace& a, const Subspace& b, Tolerance tol) {
  require_same_dim(a.dim(), b.dim(), "span_sum");
  std::vector<Ket> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span_of(a.dim(), all, tol);
}

bool contains(const Subspace& s, const Ket& v, Tolerance tol) {
  require_same_dim(s.dim(), v.dim(), "contains");
  Eigen::VectorXcd projected = Eigen::VectorXcd::Zero(s.dim());
  for (const auto& q : s.basis()) {
    projected += q.vec() * q.vec().dot(v.vec());
  }
  return (projected - v.vec()).norm() < tol.eps;
}

double expectation(const Projector& p, const Ket& v) {
  require_same_dim(p.dim(), v.dim(), "expectation");
  const Complex value = v.vec().dot(p.matrix().mat() * v.vec());
  return value.real();
}

}  // namespace qsem
