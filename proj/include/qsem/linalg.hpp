#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qsem {

using Complex = std::complex<double>;

/// Absolute tolerance on Frobenius/Euclidean norms. All scenarios handled
/// here have entries of magnitude <= 1, so an absolute threshold is safe.
struct Tolerance {
  double eps = 1e-9;
};

/// Square complex matrix with finite entries. Houses observables,
/// commutators, the identity and the zero operator.
class CMatrix {
 public:
  explicit CMatrix(Eigen::MatrixXcd m);

  static CMatrix zero(int dim);
  static CMatrix identity(int dim);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXcd& mat() const { return mat_; }

  CMatrix operator*(const CMatrix& other) const;
  CMatrix operator+(const CMatrix& other) const;
  CMatrix operator-(const CMatrix& other) const;
  CMatrix adjoint() const;
  double frobenius_norm() const { return mat_.norm(); }

 private:
  Eigen::MatrixXcd mat_;
};

/// State vector. Normalization is a caller-side contract: intermediate
/// vectors inside subspace computations may have any norm, including zero.
class Ket {
 public:
  explicit Ket(Eigen::VectorXcd v);

  /// j-th standard basis vector of the given dimension.
  static Ket basis(int dim, int index);

  int dim() const { return static_cast<int>(vec_.size()); }
  const Eigen::VectorXcd& vec() const { return vec_; }
  double norm() const { return vec_.norm(); }
  bool is_normalized(Tolerance tol = {}) const;

 private:
  Eigen::VectorXcd vec_;
};

/// Hermitian idempotent matrix. The constructor enforces
/// ||P - P^dagger||_F < eps and ||P^2 - P||_F < eps; together these force
/// the spectrum into {0,1}.
class Projector {
 public:
  explicit Projector(CMatrix m, Tolerance tol = {});

  static Projector zero(int dim);
  static Projector identity(int dim);

  int dim() const { return matrix_.dim(); }
  const CMatrix& matrix() const { return matrix_; }

 private:
  CMatrix matrix_;
};

/// Closed subspace of C^dim held as a list of mutually orthonormal kets.
/// An empty basis is the zero subspace {0}.
class Subspace {
 public:
  Subspace(int dim, std::vector<Ket> orthonormal_basis, Tolerance tol = {});

  static Subspace zero(int dim);
  static Subspace full(int dim);

  /// Orthonormalizes an arbitrary spanning set, dropping numerically
  /// dependent vectors.
  static Subspace span_of(int dim, const std::vector<Ket>& vectors,
                          Tolerance tol = {});

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<Ket>& basis() const { return basis_; }

  /// Sum of |q><q| over the basis.
  Projector projector(Tolerance tol = {}) const;

 private:
  int dim_;
  std::vector<Ket> basis_;
};

/// ab - ba.
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// True iff the Frobenius norm is below tol.
bool is_zero(const CMatrix& m, Tolerance tol = {});

/// True iff m is the identity within tol (Frobenius).
bool is_identity(const CMatrix& m, Tolerance tol = {});

/// Projector onto the span of the given vectors; an empty list yields the
/// zero projector of the given dimension.
Projector projector_onto(int dim, const std::vector<Ket>& vectors,
                         Tolerance tol = {});

/// Orthonormal eigenvectors of p with eigenvalue ~ 1.
Subspace range_of(const Projector& p, Tolerance tol = {});

/// Subspace whose projector is I - P_s.
Subspace orthocomplement(const Subspace& s, Tolerance tol = {});

/// Basis for a ^ b, computed by eigen-decomposing P_a + P_b and keeping the
/// eigenvalue-2 eigenvectors. Exact in finite dimension; one decomposition
/// suffices.
Subspace intersect(const Subspace& a, const Subspace& b, Tolerance tol = {});

/// Orthonormal basis for the closed span of the union of a and b.
Subspace span_sum(const Subspace& a, const Subspace& b, Tolerance tol = {});

/// Membership test: ||P_s v - v|| < eps.
bool contains(const Subspace& s, const Ket& v, Tolerance tol = {});

/// <v|P|v> as a real number; lies in [0,1] for normalized v.
double expectation(const Projector& p, const Ket& v);

}  // namespace qsem
