#pragma once

#include "decalg/scalar.hpp"

namespace decalg {

/// Dense matrix over arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntegerMatrix operator*(const IntegerMatrix& o) const;
  bool operator==(const IntegerMatrix& o) const;

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

/// S = U * m * V with U, V unimodular, S diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithResult {
  IntegerMatrix S, U, V;
  /// Nonzero diagonal entries > 1 in divisibility order, then one 0 per free rank.
  std::vector<Int> invariant_factors() const;
  /// All diagonal entries of S (including 1s), for diagnostics.
  std::vector<Int> diagonal() const;
};

SmithResult smith_normal_form(const IntegerMatrix& m);

Int det_integer(const IntegerMatrix& m);

}  // namespace decalg
