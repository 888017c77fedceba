#include "decalg/intmatrix.hpp"

#include <sstream>

#include "decalg/matrix.hpp"

namespace decalg {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("integer matrix product shape mismatch");
  IntegerMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

bool IntegerMatrix::operator==(const IntegerMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::string IntegerMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]\n";
  }
  return os.str();
}

std::vector<Int> SmithResult::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S.at(i, i));
  return d;
}

std::vector<Int> SmithResult::invariant_factors() const {
  std::vector<Int> out;
  for (const Int& d : diagonal())
    if (d != 1) out.push_back(d);
  // Zero diagonal entries are already at the end by the divisibility chain,
  // but free rank also includes columns beyond the diagonal.
  for (std::size_t j = S.rows(); j < S.cols(); ++j) out.push_back(0);
  return out;
}

namespace {

struct SnfWork {
  IntegerMatrix S, U, V;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < S.cols(); ++j) std::swap(S.at(a, j), S.at(b, j));
    for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < S.rows(); ++i) std::swap(S.at(i, a), S.at(i, b));
    for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
  }
  // row a -= q * row b
  void row_sub(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < S.cols(); ++j) S.at(a, j) -= q * S.at(b, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U.at(a, j) -= q * U.at(b, j);
  }
  // col a -= q * col b
  void col_sub(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < S.rows(); ++i) S.at(i, a) -= q * S.at(i, b);
    for (std::size_t i = 0; i < V.rows(); ++i) V.at(i, a) -= q * V.at(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < S.cols(); ++j) S.at(a, j) = -S.at(a, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U.at(a, j) = -U.at(a, j);
  }
};

Int round_div(const Int& a, const Int& b) {
  // Quotient minimizing |a - q*b|.
  Int q = a / b, r = a - q * b;
  if (r != 0) {
    Int r2 = 2 * (r < 0 ? -r : r);
    Int babs = (b < 0 ? -b : b);
    if (r2 > babs) q += ((r < 0) == (b < 0)) ? 1 : -1;
  }
  return q;
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
  SnfWork w{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      Int best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          Int a = w.S.at(i, j);
          if (a == 0) continue;
          if (a < 0) a = -a;
          if (pi == rows || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) break;  // trailing block is zero
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Int q = round_div(w.S.at(i, t), w.S.at(t, t));
        w.row_sub(i, t, q);
        if (w.S.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Int q = round_div(w.S.at(t, j), w.S.at(t, t));
        w.col_sub(j, t, q);
        if (w.S.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;  // remainders became new, smaller candidates

      // Pivot divides everything in its row/column; enforce divisibility into
      // the rest of the block by folding an offending row in and retrying.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols && divides_all; ++j)
          if (w.S.at(i, j) % w.S.at(t, t) != 0) {
            w.row_sub(t, i, Int(-1));  // row t += row i
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (w.S.at(t, t) < 0) w.negate_row(t);
    if (w.S.at(t, t) == 0) break;  // all remaining diagonal entries stay zero
  }
  return SmithResult{w.S, w.U, w.V};
}

Int det_integer(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("det of non-square matrix");
  Matrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q.at(i, j) = Scalar(m.at(i, j));
  return numerator(det(q, 0.0).rat());
}

}  // namespace decalg
