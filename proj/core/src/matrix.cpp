#include "decalg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace decalg {

Matrix Matrix::identity(std::size_t n, bool exact) {
  Matrix m(n, n, exact);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = exact ? Scalar(1) : Scalar(Complex(1, 0));
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InvalidArgument("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool Matrix::exact() const {
  for (const auto& x : e_)
    if (!x.exact()) return false;
  return true;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  if (v.size() != cols_) throw InvalidArgument("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("matrix product shape mismatch");
  bool ex = !e_.empty() ? e_[0].exact() : (o.rows_ * o.cols_ == 0 || o.e_[0].exact());
  Matrix r(rows_, o.cols_, ex);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero(0.0)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero(0.0)) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw InvalidArgument("matrix-vector shape mismatch");
  bool ex = !e_.empty() ? e_[0].exact() : (v.empty() || v[0].exact());
  Vector r = vec_zero(rows_, ex);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero(0.0) || v[k].is_zero(0.0)) continue;
      r[i] += a * v[k];
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix diff shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.e_) x = c * x;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw InvalidArgument("trace of non-square matrix");
  if (rows_ == 0) return Scalar(0);
  Scalar s = at(0, 0);
  for (std::size_t i = 1; i < rows_; ++i) s += at(i, i);
  return s;
}

Matrix Matrix::hadamard(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("hadamard shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * o.e_[i];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero(double eps) const {
  for (const auto& x : e_)
    if (!x.is_zero(eps)) return false;
  return true;
}

bool Matrix::is_identity(double eps) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one(eps) : !at(i, j).is_zero(eps)) return false;
    }
  return true;
}

bool Matrix::close_to(const Matrix& o, double eps) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if ((e_[i].exact() && o.e_[i].exact()) ? e_[i] != o.e_[i]
                                           : std::abs(e_[i].to_complex() - o.e_[i].to_complex()) >= eps)
      return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << "]\n";
  }
  return os.str();
}

RrefResult rref(Matrix m, double eps) {
  const std::size_t rows = m.rows(), cols = m.cols();
  RrefResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Exact mode takes the first nonzero pivot, float mode the largest.
    std::size_t piv = rows;
    double best = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (m.at(i, c).is_zero(eps)) continue;
      if (m.at(i, c).exact()) {
        piv = i;
        break;
      }
      double a = m.at(i, c).abs_double();
      if (a > best) {
        best = a;
        piv = i;
      }
    }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    Scalar inv = (m.at(r, c).exact() ? Scalar(1) : Scalar(Complex(1, 0))) / m.at(r, c);
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) = inv * m.at(r, j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero(eps)) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
      m.at(i, c) = m.at(i, c).exact() ? Scalar(0) : Scalar(Complex(0, 0));
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  // Flush sub-eps residue in float mode so downstream comparisons are stable.
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!m.at(i, j).exact() && m.at(i, j).is_zero(eps)) m.at(i, j) = Scalar(Complex(0, 0));
  res.m = std::move(m);
  return res;
}

static std::vector<Vector> kernel_from_rref(const RrefResult& r, std::size_t cols, bool exact) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vector v = vec_zero(cols, exact);
    v[free_c] = exact ? Scalar(1) : Scalar(Complex(1, 0));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.m.at(i, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  if (!m.exact())
    throw ScalarMismatch("kernel_basis requires exact-rational entries; use kernel_basis_tol");
  auto r = rref(m, 0.0);
  return kernel_from_rref(r, m.cols(), true);
}

std::vector<Vector> kernel_basis_tol(const Matrix& m, double eps) {
  auto r = rref(m, eps);
  return kernel_from_rref(r, m.cols(), m.exact());
}

std::optional<Vector> solve_in_row_span(const Matrix& rows, const Vector& v, double eps) {
  // Solve c * rows = v, i.e. rows^T c = v.
  const std::size_t k = rows.rows(), n = rows.cols();
  if (v.size() != n) throw InvalidArgument("solve_in_row_span length mismatch");
  bool exact = rows.exact();
  Matrix aug(n, k + 1, exact);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = rows.at(j, i);
    aug.at(i, k) = v[i];
  }
  auto r = rref(std::move(aug), eps);
  Vector c = vec_zero(k, exact);
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
    if (r.pivot_cols[i] == k) return std::nullopt;  // inconsistent
    c[r.pivot_cols[i]] = r.m.at(i, k);
  }
  return c;
}

Scalar det(Matrix m, double eps) {
  if (m.rows() != m.cols()) throw InvalidArgument("det of non-square matrix");
  const std::size_t n = m.rows();
  bool exact = m.exact();
  Scalar d = exact ? Scalar(1) : Scalar(Complex(1, 0));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    double best = 0;
    for (std::size_t i = c; i < n; ++i) {
      if (m.at(i, c).is_zero(eps)) continue;
      if (exact) {
        piv = i;
        break;
      }
      double a = m.at(i, c).abs_double();
      if (a > best) {
        best = a;
        piv = i;
      }
    }
    if (piv == n) return exact ? Scalar(0) : Scalar(Complex(0, 0));
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(c, j), m.at(piv, j));
      d = -d;
    }
    d = d * m.at(c, c);
    Scalar inv = (exact ? Scalar(1) : Scalar(Complex(1, 0))) / m.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero(eps)) continue;
      Scalar f = m.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
    }
  }
  return d;
}

Matrix inverse(const Matrix& m, double eps) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  bool exact = m.exact();
  Matrix aug(n, 2 * n, exact);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = exact ? Scalar(1) : Scalar(Complex(1, 0));
  }
  auto r = rref(std::move(aug), eps);
  if (r.rank < n) throw InvalidArgument("matrix not invertible");
  for (std::size_t i = 0; i < n; ++i)
    if (r.pivot_cols[i] != i) throw InvalidArgument("matrix not invertible");
  Matrix inv(n, n, exact);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
  return inv;
}

std::size_t rank(const Matrix& m, double eps) { return rref(m, eps).rank; }

std::vector<Rational> char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("char_poly of non-square matrix");
  if (!m.exact()) throw ScalarMismatch("char_poly requires exact-rational entries");
  const std::size_t n = m.rows();
  // Evaluate det(tI - m) at t = 0..n, then Lagrange-interpolate.
  std::vector<Rational> xs(n + 1), ys(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    xs[j] = Rational(static_cast<int>(j));
    Matrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        a.at(r, c) = (r == c ? Scalar(Rational(xs[j])) : Scalar(0)) - m.at(r, c);
    ys[j] = det(a, 0.0).rat();
  }
  // master(t) = prod_j (t - x_j), coefficients ascending.
  std::vector<Rational> master(n + 2, Rational(0));
  master[0] = Rational(1);
  std::size_t deg = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t k = deg + 1; k > 0; --k) master[k] = master[k - 1] - xs[j] * master[k];
    master[0] = -xs[j] * master[0];
    ++deg;
  }
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (std::size_t j = 0; j <= n; ++j) {
    // master / (t - x_j) by synthetic division, top down.
    std::vector<Rational> q(n + 1, Rational(0));
    Rational carry = master[n + 1];
    for (std::size_t k = n + 1; k > 0; --k) {
      q[k - 1] = carry;
      carry = master[k - 1] + xs[j] * carry;
    }
    Rational denom(1);
    for (std::size_t k = 0; k <= n; ++k)
      if (k != j) denom *= (xs[j] - xs[k]);
    Rational w = ys[j] / denom;
    for (std::size_t k = 0; k <= n; ++k) coeffs[k] += w * q[k];
  }
  return coeffs;
}

namespace {

std::vector<Int> divisors_up_to(Int n, const Int& cap) {
  if (n < 0) n = -n;
  std::vector<Int> primes;
  std::vector<int> exps;
  Int rem = n;
  for (Int p = 2; p * p <= rem && p <= 1000000; ++p) {
    if (rem % p == 0) {
      int e = 0;
      while (rem % p == 0) {
        rem /= p;
        ++e;
      }
      primes.push_back(p);
      exps.push_back(e);
    }
  }
  if (rem > 1) {
    primes.push_back(rem);
    exps.push_back(1);
  }
  std::vector<Int> divs{Int(1)};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::size_t count = divs.size();
    Int pk = 1;
    for (int e = 1; e <= exps[i]; ++e) {
      pk *= primes[i];
      for (std::size_t j = 0; j < count; ++j) {
        Int d = divs[j] * pk;
        if (d <= cap) divs.push_back(d);
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc(0);
  for (std::size_t k = coeffs.size(); k > 0; --k) acc = acc * x + coeffs[k - 1];
  return acc;
}

// Divide by (t - root); remainder must be zero.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& root) {
  std::size_t n = coeffs.size() - 1;
  std::vector<Rational> q(n, Rational(0));
  Rational carry = coeffs[n];
  for (std::size_t k = n; k > 0; --k) {
    q[k - 1] = carry;
    carry = coeffs[k - 1] + root * carry;
  }
  return q;
}

}  // namespace

RationalEigenReport rational_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("rational_eigenvalues of non-square matrix");
  if (!m.exact()) throw ScalarMismatch("rational_eigenvalues requires exact-rational entries");
  const std::size_t n = m.rows();
  RationalEigenReport rep;
  if (n == 0) return rep;
  std::vector<Rational> poly = char_poly(m);

  // Gershgorin bound on every eigenvalue.
  Rational bound(0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < n; ++j) s += abs(m.at(i, j).rat());
    bound = std::max(bound, s);
  }

  std::map<Rational, int> roots;
  // Split off t^k first.
  while (poly.size() > 1 && poly[0] == 0) {
    ++roots[Rational(0)];
    poly.erase(poly.begin());
  }
  if (poly.size() > 1) {
    Int lead_den = 1;
    for (const auto& c : poly) lead_den = lcm(lead_den, denominator(c));
    Int a0 = numerator(poly[0] * Rational(lead_den));
    Int an = numerator(poly.back() * Rational(lead_den));
    Int qcap = Int(1000000);
    // Any rational root p/q of a factor is a root of the scaled integer
    // polynomial, so p | a0 and q | an for the *original* coefficients.
    for (const Int& q : divisors_up_to(an, qcap)) {
      Rational pb = bound * Rational(q);
      Int pmax = numerator(pb) / denominator(pb) + 1;
      if (pmax > 2000000) pmax = 2000000;
      for (Int p = 1; p <= pmax; ++p) {
        if (a0 % p != 0) continue;
        if (gcd(p, q) != 1) continue;
        for (int sign = 0; sign < 2; ++sign) {
          Rational cand = Rational(sign ? -p : p) / Rational(q);
          while (poly.size() > 1 && eval_poly(poly, cand) == 0) {
            ++roots[cand];
            poly = deflate(poly, cand);
          }
        }
        if (poly.size() <= 1) break;
      }
      if (poly.size() <= 1) break;
    }
  }
  rep.residual_degree = static_cast<int>(poly.size()) - 1;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it)
    rep.eigenvalues.emplace_back(it->first, it->second);
  return rep;
}

HermitianEigen jacobi_hermitian(const Matrix& m, double eps) {
  if (m.rows() != m.cols()) throw InvalidArgument("jacobi_hermitian of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j).to_complex();
  double scale = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a[i][j]));
  if (scale == 0) scale = 1;
  // Hermitian check up front; Jacobi silently mangles anything else.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(a[i][j] - std::conj(a[j][i])) > 1e-8 * scale)
        throw InvalidArgument("jacobi_hermitian: matrix is not Hermitian");

  std::vector<std::vector<Complex>> v(n, std::vector<Complex>(n, Complex(0, 0)));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = Complex(1, 0);

  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a[p][q]);
    if (std::sqrt(off) < eps * scale) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double g = std::abs(a[p][q]);
        if (g < 1e-300) continue;
        Complex phase = a[p][q] / g;
        double alpha = a[p][p].real(), beta = a[q][q].real();
        double tau = (alpha - beta) / (2 * g);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        double c = 1 / std::sqrt(1 + t * t), s = t * c;
        Complex spe = s * phase, spc = s * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          Complex akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp + spc * akq;
          a[k][q] = -spe * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          Complex apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk + spe * aqk;
          a[q][k] = -spc * apk + c * aqk;
        }
        a[p][q] = Complex(0, 0);
        a[q][p] = Complex(0, 0);
        for (std::size_t k = 0; k < n; ++k) {
          Complex vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp + spc * vkq;
          v[k][q] = -spe * vkp + c * vkq;
        }
      }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a[x][x].real() < a[y][y].real(); });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<Complex>(n));
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a[order[k]][order[k]].real();
    for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = v[i][order[k]];
  }
  return out;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors, double eps) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  for (const auto& v : vectors)
    if (v.size() != ambient) throw InvalidArgument("subspace vector has wrong length");
  auto r = rref(Matrix::from_rows(vectors), eps);
  Matrix b(r.rank, ambient, vectors[0].empty() || vectors[0][0].exact());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < ambient; ++j) b.at(i, j) = r.m.at(i, j);
  s.basis_ = std::move(b);
  return s;
}

Subspace Subspace::full(std::size_t ambient, bool exact) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient, exact);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vector Subspace::reduce(Vector v, double eps) const {
  // One elimination pass suffices: the basis is in RREF, so each pivot column
  // is zero in every other basis row.
  std::size_t r = 0;
  for (std::size_t c = 0; c < ambient_ && r < basis_.rows(); ++c) {
    if (basis_.at(r, c).is_zero(eps) || !basis_.at(r, c).is_one(eps)) continue;
    if (!v[c].is_zero(eps)) {
      Scalar f = v[c];
      for (std::size_t j = 0; j < ambient_; ++j) v[j] = v[j] - f * basis_.at(r, j);
    }
    ++r;
  }
  return v;
}

bool Subspace::contains(const Vector& v, double eps) const {
  if (v.size() != ambient_) throw InvalidArgument("vector/ambient mismatch");
  return vec_is_zero(reduce(v, eps), eps);
}

bool Subspace::contains(const Subspace& other, double eps) const {
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i), eps)) return false;
  return true;
}

std::optional<Vector> Subspace::coords(const Vector& v, double eps) const {
  if (v.size() != ambient_) throw InvalidArgument("vector/ambient mismatch");
  Vector coeffs = vec_zero(basis_.rows(), basis_.rows() == 0 || basis_.at(0, 0).exact());
  Vector w = v;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ambient_ && r < basis_.rows(); ++c) {
    if (!basis_.at(r, c).is_one(eps)) continue;
    if (!w[c].is_zero(eps)) {
      coeffs[r] = w[c];
      Scalar f = w[c];
      for (std::size_t j = 0; j < ambient_; ++j) w[j] = w[j] - f * basis_.at(r, j);
    }
    ++r;
  }
  if (!vec_is_zero(w, eps)) return std::nullopt;
  return coeffs;
}

bool Subspace::same(const Subspace& other, double eps) const {
  if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
  return basis_.close_to(other.basis_, eps);
}

Subspace Subspace::sum(const Subspace& other, double eps) const {
  if (ambient_ != other.ambient_) throw InvalidArgument("subspace ambient mismatch");
  std::vector<Vector> rows = basis_vectors();
  for (const auto& v : other.basis_vectors()) rows.push_back(v);
  return span(ambient_, rows, eps);
}

Subspace Subspace::intersect(const Subspace& other, double eps) const {
  if (ambient_ != other.ambient_) throw InvalidArgument("subspace ambient mismatch");
  if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
  bool exact = basis_.at(0, 0).exact();
  // Zassenhaus: rows (u|u) for u in U and (w|0) for w in W; after elimination
  // the rows with zero left half carry an intersection basis on the right.
  std::vector<Vector> rows;
  for (const auto& u : basis_vectors()) {
    Vector r(2 * ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) r[j] = r[ambient_ + j] = u[j];
    rows.push_back(std::move(r));
  }
  for (const auto& w : other.basis_vectors()) {
    Vector r = vec_zero(2 * ambient_, exact);
    for (std::size_t j = 0; j < ambient_; ++j) r[j] = w[j];
    rows.push_back(std::move(r));
  }
  auto rr = rref(Matrix::from_rows(rows), eps);
  std::vector<Vector> inter;
  for (std::size_t i = 0; i < rr.rank; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < ambient_ && left_zero; ++j)
      if (!rr.m.at(i, j).is_zero(eps)) left_zero = false;
    if (!left_zero) continue;
    Vector v(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) v[j] = rr.m.at(i, ambient_ + j);
    inter.push_back(std::move(v));
  }
  return span(ambient_, inter, eps);
}

}  // namespace decalg
