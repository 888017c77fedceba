#pragma once

#include <optional>

#include "decalg/scalar.hpp"

namespace decalg {

/// Dense row-major matrix over Scalar.  All entries share one scalar variant.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, bool exact = true)
      : rows_(rows), cols_(cols), e_(rows * cols, exact ? Scalar(0) : Scalar(Complex(0, 0))) {}

  static Matrix identity(std::size_t n, bool exact = true);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool exact() const;

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  void set_row(std::size_t i, const Vector& v);

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Scalar trace() const;
  /// Entrywise (Hadamard) product.
  Matrix hadamard(const Matrix& o) const;

  bool operator==(const Matrix& o) const;
  bool is_zero(double eps) const;
  bool is_identity(double eps) const;
  bool close_to(const Matrix& o, double eps) const;

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(Matrix m, double eps);

/// Basis of the right null space.  Exact-rational input only.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Tolerant variant for complex-float matrices.
std::vector<Vector> kernel_basis_tol(const Matrix& m, double eps);

/// Coefficients c with v = sum_i c_i * rows[i], if v lies in the row span.
std::optional<Vector> solve_in_row_span(const Matrix& rows, const Vector& v, double eps);

Scalar det(Matrix m, double eps);
Matrix inverse(const Matrix& m, double eps);
std::size_t rank(const Matrix& m, double eps);

/// Exact characteristic polynomial det(t*I - m), coefficients ascending
/// (c[0] + c[1] t + ... + c[n] t^n, monic).
std::vector<Rational> char_poly(const Matrix& m);

struct RationalEigenReport {
  /// (eigenvalue, algebraic multiplicity), eigenvalues in descending order.
  std::vector<std::pair<Rational, int>> eigenvalues;
  /// Degree of the factor of the characteristic polynomial with no rational root.
  int residual_degree = 0;
  bool splits() const { return residual_degree == 0; }
};

/// All rational roots of the characteristic polynomial, with multiplicity,
/// via integer scaling and bounded rational-root search.  Exact input only.
RationalEigenReport rational_eigenvalues(const Matrix& m);

/// Eigen decomposition of a Hermitian (or real symmetric) matrix by cyclic
/// Jacobi rotations.  Input may be exact (converted) or complex-float.
struct HermitianEigen {
  std::vector<double> values;                 // ascending
  std::vector<std::vector<Complex>> vectors;  // vectors[k] belongs to values[k]
};
HermitianEigen jacobi_hermitian(const Matrix& m, double eps = 1e-12);

/// Row space in reduced row echelon form; the canonical representation of a
/// subspace, so equality of subspaces is equality of bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors, double eps);
  static Subspace full(std::size_t ambient, bool exact = true);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(const Vector& v, double eps) const;
  bool contains(const Subspace& other, double eps) const;
  /// Coordinates of v in the echelon basis, if v is a member.
  std::optional<Vector> coords(const Vector& v, double eps) const;
  /// Residual of v after eliminating along the echelon basis.
  Vector reduce(Vector v, double eps) const;

  bool same(const Subspace& other, double eps) const;

  Subspace sum(const Subspace& other, double eps) const;
  /// Zassenhaus intersection of row spaces.
  Subspace intersect(const Subspace& other, double eps) const;

 private:
  std::size_t ambient_;
  Matrix basis_;  // RREF rows, no zero rows
};

}  // namespace decalg
