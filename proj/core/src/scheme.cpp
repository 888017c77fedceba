#include "decalg/scheme.hpp"

#include "decalg/miyamoto.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace decalg {

namespace {

Scalar mode_scalar(long long v, bool exact) {
  return exact ? Scalar(v) : Scalar(Complex(static_cast<double>(v), 0));
}

Vector to_float_vec(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(v[i].to_complex());
  return out;
}

Matrix to_float_mat(const Matrix& m) {
  Matrix out(m.rows(), m.cols(), false);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = Scalar(m.at(i, j).to_complex());
  return out;
}

}  // namespace

AssociationScheme::AxiomReport AssociationScheme::verify_axioms() const {
  AxiomReport rep;
  // (I) + shape: every pair carries exactly one relation index in range
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (rel[x][y] < 0 || rel[x][y] > d) rep.partition = false;
  // (II)
  for (std::size_t x = 0; x < n; ++x)
    if (rel[x][x] != 0) rep.diagonal = false;
  for (std::size_t x = 0; x < n && rep.diagonal; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && rel[x][y] == 0) rep.diagonal = false;
  // (III)
  for (int i = 0; i <= d && rep.transpose_closed; ++i) {
    int target = -1;
    for (std::size_t x = 0; x < n && rep.transpose_closed; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (rel[x][y] != i) continue;
        if (target == -1) target = rel[y][x];
        if (rel[y][x] != target) {
          rep.transpose_closed = false;
          break;
        }
      }
  }
  // (IV) + (V) by brute force over triples
  std::vector<std::vector<std::vector<long long>>> p(
      d + 1, std::vector<std::vector<long long>>(d + 1, std::vector<long long>(d + 1, -1)));
  for (int i = 0; i <= d && rep.constant_intersection; ++i)
    for (int j = 0; j <= d && rep.constant_intersection; ++j)
      for (std::size_t x = 0; x < n && rep.constant_intersection; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          int k = rel[x][y];
          long long cnt = 0;
          for (std::size_t z = 0; z < n; ++z)
            if (rel[x][z] == i && rel[z][y] == j) ++cnt;
          if (p[i][j][k] == -1) p[i][j][k] = cnt;
          if (p[i][j][k] != cnt) {
            rep.constant_intersection = false;
            rep.failure = {{i, j, k}};
            break;
          }
        }
  if (rep.constant_intersection)
    for (int i = 0; i <= d && rep.commutes; ++i)
      for (int j = 0; j <= d && rep.commutes; ++j)
        for (int k = 0; k <= d; ++k)
          if (p[i][j][k] != p[j][i][k]) {
            rep.commutes = false;
            rep.failure = {{i, j, k}};
            break;
          }
  return rep;
}

std::vector<std::vector<std::vector<Int>>> AssociationScheme::intersection_numbers() const {
  std::vector<std::vector<std::vector<Int>>> p(
      d + 1, std::vector<std::vector<Int>>(d + 1, std::vector<Int>(d + 1, -1)));
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          int k = rel[x][y];
          Int cnt = 0;
          for (std::size_t z = 0; z < n; ++z)
            if (rel[x][z] == i && rel[z][y] == j) ++cnt;
          if (p[i][j][k] == -1)
            p[i][j][k] = cnt;
          else if (p[i][j][k] != cnt)
            throw InvalidObject("intersection number p_" + std::to_string(i) +
                                std::to_string(j) + "^" + std::to_string(k) +
                                " is not constant");
        }
  return p;
}

AssociationScheme AssociationScheme::from_relation_matrix(std::vector<std::vector<int>> rel) {
  AssociationScheme s;
  s.n = rel.size();
  int maxrel = 0;
  for (const auto& row : rel) {
    if (row.size() != s.n) throw InvalidObject("relation matrix is not square");
    for (int v : row) {
      if (v < 0) throw InvalidObject("negative relation index");
      maxrel = std::max(maxrel, v);
    }
  }
  s.rel = std::move(rel);
  s.d = maxrel;
  auto rep = s.verify_axioms();
  if (!rep.partition || !rep.diagonal || !rep.transpose_closed)
    throw InvalidObject("relation matrix violates scheme axioms (I)-(III)");
  s.transpose_of.assign(s.d + 1, -1);
  for (std::size_t x = 0; x < s.n; ++x)
    for (std::size_t y = 0; y < s.n; ++y) s.transpose_of[s.rel[x][y]] = s.rel[y][x];
  s.symmetric = true;
  for (int i = 0; i <= s.d; ++i)
    if (s.transpose_of[i] != i) s.symmetric = false;
  return s;
}

AssociationScheme scheme_from_group(const PermGroup& g, const PermAction& action) {
  Orbitals o = orbitals(g, action);
  AssociationScheme s;
  s.n = o.n;
  s.d = o.count - 1;
  s.rel = o.rel;
  s.transpose_of.assign(o.count, -1);
  for (std::size_t x = 0; x < s.n; ++x)
    for (std::size_t y = 0; y < s.n; ++y) s.transpose_of[s.rel[x][y]] = s.rel[y][x];
  s.symmetric = true;
  for (int i = 0; i <= s.d; ++i)
    if (s.transpose_of[i] != i) s.symmetric = false;
  // (I)-(IV) hold for orbital partitions; (V) must be checked
  auto p = s.intersection_numbers();
  for (int i = 0; i <= s.d; ++i)
    for (int j = 0; j <= s.d; ++j)
      for (int k = 0; k <= s.d; ++k)
        if (p[i][j][k] != p[j][i][k])
          throw InvalidObject("axiom (V) fails at triple (" + std::to_string(i) + "," +
                              std::to_string(j) + "," + std::to_string(k) +
                              "): permutation character is not multiplicity free");
  return s;
}

namespace {

// Common eigenspace refinement over the rationals; nullopt when some
// adjacency matrix has an irrational eigenvalue.
std::optional<std::vector<Subspace>> exact_eigenspaces(const std::vector<Matrix>& mats,
                                                       std::size_t n) {
  std::vector<Subspace> parts{Subspace::full(n, true)};
  for (const Matrix& m : mats) {
    std::vector<Subspace> next;
    for (const Subspace& part : parts) {
      auto basis = part.basis_vectors();
      const std::size_t k = basis.size();
      Matrix restricted(k, k, true);
      for (std::size_t c = 0; c < k; ++c) {
        auto coords = part.coords(m * basis[c], 0.0);
        if (!coords) throw InvalidObject("eigenspace refinement: part is not invariant");
        for (std::size_t r = 0; r < k; ++r) restricted.at(r, c) = (*coords)[r];
      }
      auto eig = rational_eigenvalues(restricted);
      if (!eig.splits()) return std::nullopt;
      for (const auto& [lambda, mult] : eig.eigenvalues) {
        Matrix shifted = restricted;
        for (std::size_t t = 0; t < k; ++t)
          shifted.at(t, t) = shifted.at(t, t) - Scalar(lambda);
        std::vector<Vector> sub;
        for (const Vector& w : kernel_basis(shifted)) {
          Vector amb = vec_zero(n, true);
          for (std::size_t r = 0; r < k; ++r) amb = vec_add(amb, vec_scale(w[r], basis[r]));
          sub.push_back(std::move(amb));
        }
        next.push_back(Subspace::span(n, sub, 0.0));
      }
    }
    parts = std::move(next);
  }
  return parts;
}

// Orthonormal common eigenspace refinement for a family of Hermitian float
// matrices.
std::vector<std::vector<Vector>> hermitian_eigenspaces(const std::vector<Matrix>& mats,
                                                       std::size_t n, double eps) {
  std::vector<std::vector<Vector>> parts;
  {
    std::vector<Vector> full;
    for (std::size_t i = 0; i < n; ++i) {
      Vector e = vec_zero(n, false);
      e[i] = Scalar(Complex(1, 0));
      full.push_back(std::move(e));
    }
    parts.push_back(std::move(full));
  }
  for (const Matrix& m : mats) {
    double scale = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, m.at(i, j).abs_double());
    double tol = std::max(eps, 1e-9) * std::max(1.0, scale) * 10;
    std::vector<std::vector<Vector>> next;
    for (const auto& basis : parts) {
      const std::size_t k = basis.size();
      Matrix restricted(k, k, false);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
          Complex sum = 0;
          for (std::size_t t = 0; t < n; ++t)
            sum += std::conj(basis[r][t].to_complex()) * (m * basis[c])[t].to_complex();
          restricted.at(r, c) = Scalar(sum);
        }
      auto eig = jacobi_hermitian(restricted);
      std::size_t start = 0;
      while (start < k) {
        std::size_t stop = start + 1;
        while (stop < k && std::abs(eig.values[stop] - eig.values[stop - 1]) < tol) ++stop;
        std::vector<Vector> sub;
        for (std::size_t v = start; v < stop; ++v) {
          Vector amb = vec_zero(n, false);
          for (std::size_t r = 0; r < k; ++r)
            amb = vec_add(amb, vec_scale(Scalar(eig.vectors[v][r]), basis[r]));
          sub.push_back(std::move(amb));
        }
        next.push_back(std::move(sub));
        start = stop;
      }
    }
    parts = std::move(next);
  }
  return parts;
}

}  // namespace

BoseMesner bose_mesner(const AssociationScheme& s, double eps) {
  auto ax = s.verify_axioms();
  if (!ax.all()) throw InvalidObject("bose_mesner requires a commutative scheme");
  BoseMesner bm;
  bm.scheme = s;
  const std::size_t n = s.n;
  for (int i = 0; i <= s.d; ++i) {
    Matrix a(n, n, true);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (s.rel[x][y] == i) a.at(x, y) = Scalar(1);
    bm.A.push_back(std::move(a));
  }

  auto exact_parts = exact_eigenspaces(bm.A, n);
  std::vector<Subspace> parts;
  if (exact_parts) {
    bm.exact = true;
    parts = *exact_parts;
  } else {
    bm.exact = false;
    std::vector<Matrix> herm;
    for (const Matrix& a : bm.A) {
      if (s.symmetric) {
        herm.push_back(to_float_mat(a));
      } else {
        Matrix at = a.transpose();
        herm.push_back(to_float_mat(a + at));
        Matrix skew = (a - at);
        Matrix iskew(n, n, false);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            iskew.at(r, c) = Scalar(Complex(0, 1) * skew.at(r, c).to_complex());
        herm.push_back(std::move(iskew));
      }
    }
    for (const auto& basis : hermitian_eigenspaces(herm, n, eps))
      parts.push_back(Subspace::span(n, basis, std::max(eps, 1e-9)));
    for (Matrix& a : bm.A) a = to_float_mat(a);
  }
  if (parts.size() != static_cast<std::size_t>(s.d) + 1)
    throw InvalidObject("common eigenspace count " + std::to_string(parts.size()) +
                        " does not equal d+1 = " + std::to_string(s.d + 1));

  // eigenvalue of each adjacency matrix on each part
  auto eigenvalue_on = [&](const Matrix& a, const Subspace& v) {
    auto basis = v.basis_vectors();
    Vector img = a * basis[0];
    std::size_t piv = 0;
    while (piv < img.size() && basis[0][piv].is_zero(eps)) ++piv;
    Scalar lambda = img[piv] / basis[0][piv];
    for (const auto& b : basis)
      if (!vec_is_zero(vec_sub(a * b, vec_scale(lambda, b)), std::max(eps, 1e-9) * 100))
        throw InvalidObject("adjacency matrix does not act as a scalar on an eigenspace");
    return lambda;
  };

  Vector ones = vec_zero(n, bm.exact);
  for (std::size_t t = 0; t < n; ++t) ones[t] = mode_scalar(1, bm.exact);
  int v0 = -1;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].contains(ones, std::max(eps, 1e-9))) v0 = static_cast<int>(i);
  if (v0 < 0) throw InvalidObject("all-ones vector is not a common eigenvector");

  std::vector<std::pair<std::vector<Complex>, std::size_t>> order;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (static_cast<int>(i) == v0) continue;
    std::vector<Complex> key;
    for (const Matrix& a : bm.A) key.push_back(eigenvalue_on(a, parts[i]).to_complex());
    order.emplace_back(std::move(key), i);
  }
  std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
    for (std::size_t t = 0; t < l.first.size(); ++t) {
      if (l.first[t].real() != r.first[t].real()) return l.first[t].real() > r.first[t].real();
      if (l.first[t].imag() != r.first[t].imag()) return l.first[t].imag() > r.first[t].imag();
    }
    return false;
  });
  bm.V.push_back(parts[v0]);
  for (const auto& [key, idx] : order) bm.V.push_back(parts[idx]);

  for (const Subspace& v : bm.V) {
    std::vector<Scalar> row;
    for (const Matrix& a : bm.A) row.push_back(eigenvalue_on(a, v));
    bm.eigen.push_back(std::move(row));
  }

  // idempotents: E_i = C * block_i * C^-1 over the stacked eigenbasis
  Matrix c(n, n, bm.exact);
  std::vector<std::pair<std::size_t, std::size_t>> block;  // column range per eigenspace
  {
    std::size_t col = 0;
    for (const Subspace& v : bm.V) {
      std::size_t start = col;
      for (const auto& b : v.basis_vectors()) {
        for (std::size_t r = 0; r < n; ++r) c.at(r, col) = b[r];
        ++col;
      }
      block.emplace_back(start, col);
    }
    if (col != n) throw InvalidObject("eigenspaces do not span");
  }
  Matrix cinv = inverse(c, std::max(eps, 1e-12));
  for (std::size_t i = 0; i < bm.V.size(); ++i) {
    Matrix d(n, n, bm.exact);
    for (std::size_t t = block[i].first; t < block[i].second; ++t)
      d.at(t, t) = mode_scalar(1, bm.exact);
    bm.E.push_back(c * d * cinv);
  }

  // intersection numbers, plus the exact expansion check A_i A_j = sum p A_k
  auto pint = s.intersection_numbers();
  const int dd = s.d;
  bm.p.assign(dd + 1, std::vector<std::vector<Scalar>>(dd + 1, std::vector<Scalar>(dd + 1)));
  for (int i = 0; i <= dd; ++i)
    for (int j = 0; j <= dd; ++j) {
      Matrix expansion(n, n, bm.exact);
      for (int k = 0; k <= dd; ++k) {
        bm.p[i][j][k] = mode_scalar(pint[i][j][k].convert_to<long long>(), bm.exact);
        expansion = expansion + bm.A[k].scaled(bm.p[i][j][k]);
      }
      if (!(bm.A[i] * bm.A[j]).close_to(expansion, std::max(eps, 1e-9) * n))
        throw InvalidObject("A_i A_j does not expand over the intersection numbers");
    }

  // Krein parameters from the trace pairing, then the expansion check
  Scalar nn = mode_scalar(static_cast<long long>(n), bm.exact);
  bm.q.assign(dd + 1, std::vector<std::vector<Scalar>>(dd + 1, std::vector<Scalar>(dd + 1)));
  for (int i = 0; i <= dd; ++i)
    for (int j = 0; j <= dd; ++j) {
      Matrix had = bm.E[i].hadamard(bm.E[j]);
      Matrix expansion(n, n, bm.exact);
      for (int k = 0; k <= dd; ++k) {
        Scalar tr = (had * bm.E[k]).trace();
        Scalar dimk = mode_scalar(static_cast<long long>(bm.V[k].dim()), bm.exact);
        bm.q[i][j][k] = nn * tr / dimk;
        expansion = expansion + bm.E[k].scaled(bm.q[i][j][k] / nn);
      }
      if (!had.close_to(expansion, std::max(eps, 1e-9) * 10))
        throw InvalidObject("Hadamard product does not expand over the idempotents");
    }
  return bm;
}

NortonAlgebra norton_algebra(const BoseMesner& bm, int i, double eps) {
  if (i < 0 || static_cast<std::size_t>(i) >= bm.V.size())
    throw InvalidArgument("eigenspace index out of range");
  NortonAlgebra na;
  na.eigenspace = i;
  na.trivial_flagged = i == 0;
  na.basis = bm.V[i];
  const std::size_t m = na.basis.dim(), n = bm.scheme.n;
  na.algebra = Algebra::zero(m, bm.exact);
  auto basis = na.basis.basis_vectors();
  bool all_zero = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vector had(n);
      for (std::size_t t = 0; t < n; ++t) had[t] = basis[a][t] * basis[b][t];
      Vector proj = bm.E[i] * had;
      auto coords = na.basis.coords(proj, std::max(eps, 1e-9));
      if (!coords) throw InvalidObject("Norton product escaped its eigenspace");
      if (!vec_is_zero(*coords, std::max(eps, 1e-9))) all_zero = false;
      na.algebra.sc[a][b] = *coords;
    }
  na.zero_product = all_zero;
  bool qzero = bm.q[i][i][i].is_zero(std::max(eps, 1e-9));
  if (na.zero_product != qzero)
    throw InvalidObject("sigma_ii^i = 0 does not match q_ii^i = 0");
  return na;
}

std::vector<Vector> norton_axes(const BoseMesner& bm, const NortonAlgebra& na, double eps) {
  std::vector<Vector> axes;
  const std::size_t n = bm.scheme.n;
  for (std::size_t x = 0; x < n; ++x) {
    Vector ex = vec_zero(n, bm.exact);
    ex[x] = mode_scalar(1, bm.exact);
    Vector proj = bm.E[na.eigenspace] * ex;
    auto coords = na.basis.coords(proj, std::max(eps, 1e-9));
    if (!coords) throw InvalidObject("projected point escaped its eigenspace");
    axes.push_back(*coords);
  }
  return axes;
}

namespace {

// Roots of a monic complex polynomial (ascending coefficients, leading 1)
// by Durand-Kerner iteration.
std::vector<Complex> poly_roots(std::vector<Complex> coeffs) {
  const std::size_t deg = coeffs.size() - 1;
  if (deg == 0) return {};
  std::vector<Complex> z(deg);
  for (std::size_t i = 0; i < deg; ++i)
    z[i] = std::pow(Complex(0.4, 0.9), static_cast<double>(i + 1));
  auto eval = [&](Complex x) {
    Complex acc = 1;  // monic
    for (std::size_t k = deg; k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      Complex denom = 1;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      Complex step = eval(z[i]) / denom;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-13) break;
  }
  return z;
}

std::vector<Complex> complex_char_poly(const Matrix& m, double eps) {
  // det(tI - m) at t = 0..n, Lagrange interpolation, all complex floats.
  const std::size_t n = m.rows();
  std::vector<Complex> xs(n + 1), ys(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    xs[j] = Complex(static_cast<double>(j), 0);
    Matrix a(n, n, false);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        a.at(r, c) = Scalar((r == c ? xs[j] : Complex(0, 0)) - m.at(r, c).to_complex());
    ys[j] = det(a, eps).to_complex();
  }
  std::vector<Complex> master(n + 2, Complex(0, 0));
  master[0] = 1;
  std::size_t deg = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t k = deg + 1; k > 0; --k) master[k] = master[k - 1] - xs[j] * master[k];
    master[0] = -xs[j] * master[0];
    ++deg;
  }
  std::vector<Complex> coeffs(n + 1, Complex(0, 0));
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<Complex> q(n + 1, Complex(0, 0));
    Complex carry = master[n + 1];
    for (std::size_t k = n + 1; k > 0; --k) {
      q[k - 1] = carry;
      carry = master[k - 1] + xs[j] * carry;
    }
    Complex denom = 1;
    for (std::size_t k = 0; k <= n; ++k)
      if (k != j) denom *= (xs[j] - xs[k]);
    Complex w = ys[j] / denom;
    for (std::size_t k = 0; k <= n; ++k) coeffs[k] += w * q[k];
  }
  // normalize to monic (leading coefficient is 1 up to rounding)
  for (std::size_t k = 0; k <= n; ++k) coeffs[k] /= coeffs[n];
  return coeffs;
}

struct EigenPart {
  Scalar value;
  std::vector<Vector> basis;  // coordinates in the Norton basis
};

// Eigen (or generalized eigen) decomposition of one ad operator.
std::vector<EigenPart> ad_eigen_parts(const Matrix& ad, bool exact, bool hermitian_ok,
                                      double eps, bool* complete) {
  const std::size_t m = ad.rows();
  std::vector<EigenPart> parts;
  *complete = true;
  if (exact) {
    auto eig = rational_eigenvalues(ad);
    if (eig.splits()) {
      for (const auto& [lambda, mult] : eig.eigenvalues) {
        Matrix shifted = ad;
        for (std::size_t t = 0; t < m; ++t) shifted.at(t, t) = shifted.at(t, t) - Scalar(lambda);
        EigenPart part{Scalar(lambda), kernel_basis(shifted)};
        if (part.basis.size() != static_cast<std::size_t>(mult)) *complete = false;
        parts.push_back(std::move(part));
      }
      return parts;
    }
  }
  // float route: cluster complex eigenvalues, use plain or generalized kernels
  Matrix fad = ad.exact() ? to_float_mat(ad) : ad;
  std::vector<Complex> roots = poly_roots(complex_char_poly(fad, std::max(eps, 1e-12)));
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  double scale = 1;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) scale = std::max(scale, fad.at(r, c).abs_double());
  double tol = std::max(eps, 1e-9) * scale * 100;
  std::vector<std::pair<Complex, std::size_t>> clusters;
  for (Complex z : roots) {
    if (!clusters.empty() && std::abs(z - clusters.back().first) < tol)
      clusters.back().second++;
    else
      clusters.emplace_back(z, 1);
  }
  for (auto& [value, mult] : clusters) {
    Matrix shifted(m, m, false);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        shifted.at(r, c) = Scalar(fad.at(r, c).to_complex() - (r == c ? value : Complex(0, 0)));
    std::vector<Vector> basis = kernel_basis_tol(shifted, tol);
    if (basis.size() < mult && !hermitian_ok) {
      // generalized eigenspace: kernel of the m-th power
      Matrix power = Matrix::identity(m, false);
      for (std::size_t t = 0; t < mult; ++t) power = power * shifted;
      basis = kernel_basis_tol(power, tol);
    }
    if (basis.size() != mult) *complete = false;
    parts.push_back(EigenPart{Scalar(value), std::move(basis)});
  }
  return parts;
}

}  // namespace

NortonCertificate norton_axial_certificate(const BoseMesner& bm, int i, double eps) {
  NortonCertificate cert;
  cert.norton = norton_algebra(bm, i, eps);
  const std::size_t m = cert.norton.basis.dim(), n = bm.scheme.n;
  std::vector<Vector> axes = norton_axes(bm, cert.norton, eps);
  for (std::size_t x = 0; x < n; ++x)
    if (vec_is_zero(axes[x], std::max(eps, 1e-9)))
      throw InvalidArgument("pi_i(e_x) vanishes at point " + std::to_string(x));

  // eigen decompositions per point
  std::vector<std::vector<EigenPart>> eparts(n);
  bool exact_mode = bm.exact;
  for (std::size_t x = 0; x < n; ++x) {
    bool complete = true;
    eparts[x] = ad_eigen_parts(cert.norton.algebra.ad(axes[x]), exact_mode,
                               bm.scheme.symmetric, eps, &complete);
    if (!complete) cert.complete_eigenbasis = false;
    std::size_t total = 0;
    for (const auto& p : eparts[x]) total += p.basis.size();
    if (total != m) cert.complete_eigenbasis = false;
    // if any point needed floats, the whole certificate works in floats
    if (!eparts[x].empty() && !eparts[x][0].value.exact()) exact_mode = false;
  }
  if (!exact_mode && bm.exact) {
    // rerun everything in float mode so all labels live in one scalar world
    for (std::size_t x = 0; x < n; ++x) {
      bool complete = true;
      eparts[x] = ad_eigen_parts(to_float_mat(cert.norton.algebra.ad(axes[x])), false,
                                 bm.scheme.symmetric, eps, &complete);
      if (!complete) cert.complete_eigenbasis = false;
    }
  }

  // shared eigenvalue label set, descending
  std::vector<Scalar> labels_values;
  auto label_of = [&](const Scalar& v) -> int {
    for (std::size_t k = 0; k < labels_values.size(); ++k) {
      if (v.exact() && labels_values[k].exact() && v == labels_values[k])
        return static_cast<int>(k);
      if (!v.exact() &&
          std::abs(v.to_complex() - labels_values[k].to_complex()) < std::max(eps, 1e-9) * 100)
        return static_cast<int>(k);
    }
    return -1;
  };
  for (const auto& ep : eparts)
    for (const auto& part : ep)
      if (label_of(part.value) < 0) labels_values.push_back(part.value);
  std::sort(labels_values.begin(), labels_values.end(), [](const Scalar& a, const Scalar& b) {
    Complex za = a.to_complex(), zb = b.to_complex();
    if (za.real() != zb.real()) return za.real() > zb.real();
    return za.imag() > zb.imag();
  });
  const std::size_t nlab = labels_values.size();
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < nlab; ++k) labels.push_back("lam" + std::to_string(k));

  // observed fusion law: union over points of the structure-constant support
  std::vector<std::vector<std::set<int>>> cells(nlab, std::vector<std::set<int>>(nlab));
  std::vector<Decomposition> omega(n);
  bool mode_exact = exact_mode;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Subspace> dec(nlab, Subspace(m));
    for (const auto& part : eparts[x]) {
      int lab = label_of(part.value);
      dec[lab] = Subspace::span(m, part.basis, std::max(eps, 1e-9));
    }
    // decompose products over this decomposition
    std::vector<Vector> rows;
    std::vector<int> block_of;
    for (std::size_t lb = 0; lb < nlab; ++lb)
      for (const auto& b : dec[lb].basis_vectors()) {
        rows.push_back(b);
        block_of.push_back(static_cast<int>(lb));
      }
    Matrix stacked = Matrix::from_rows(rows);
    for (std::size_t lx = 0; lx < nlab; ++lx)
      for (std::size_t ly = 0; ly < nlab; ++ly) {
        for (const auto& u : dec[lx].basis_vectors())
          for (const auto& v : dec[ly].basis_vectors()) {
            Vector w = cert.norton.algebra.multiply(
                mode_exact ? u : to_float_vec(u), mode_exact ? v : to_float_vec(v));
            auto coeffs = solve_in_row_span(stacked, w, std::max(eps, 1e-9));
            if (!coeffs) throw InvalidObject("product escaped the eigenspace decomposition");
            for (std::size_t r = 0; r < coeffs->size(); ++r)
              if (!(*coeffs)[r].is_zero(std::max(eps, 1e-9) * 10))
                cells[lx][ly].insert(block_of[r]);
          }
      }
    omega[x] = std::move(dec);
  }
  std::vector<std::vector<std::vector<int>>> table(nlab, std::vector<std::vector<int>>(nlab));
  for (std::size_t lx = 0; lx < nlab; ++lx)
    for (std::size_t ly = 0; ly < nlab; ++ly)
      table[lx][ly].assign(cells[lx][ly].begin(), cells[lx][ly].end());

  cert.dec.algebra = mode_exact ? cert.norton.algebra : [&] {
    Algebra a = Algebra::zero(m, false);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) a.sc[r][c] = to_float_vec(cert.norton.algebra.sc[r][c]);
    return a;
  }();
  cert.dec.law = FusionLaw(labels, std::move(table));
  for (std::size_t x = 0; x < n; ++x)
    cert.dec.index_names.push_back("x" + std::to_string(x));
  cert.dec.omega = std::move(omega);

  // the axis is an eigenvector of its own ad; its eigenvalue is q_ii^i / n
  Scalar own = bm.q[i][i][i] /
               mode_scalar(static_cast<long long>(n), bm.q[i][i][i].exact());
  int unit_label = label_of(mode_exact == own.exact() ? own : Scalar(own.to_complex()));
  if (unit_label < 0) throw InvalidObject("axis eigenvalue q_ii^i/n is not an observed label");
  cert.dec.unit = unit_label;
  std::vector<Scalar> lam;
  for (const auto& v : labels_values) lam.push_back(v);
  cert.dec.lambda = std::move(lam);
  std::vector<Vector> ax;
  for (auto& a : axes) ax.push_back(mode_exact ? a : to_float_vec(a));
  cert.dec.axes = std::move(ax);

  cert.unit_label_is_unit = cert.dec.law.classify(unit_label).unit;
  cert.certified = bm.scheme.symmetric && cert.complete_eigenbasis;
  if (!bm.scheme.symmetric)
    cert.note = "non-symmetric scheme: generalized eigenspaces, not certified";
  return cert;
}

double krein_sigma_residual(const BoseMesner& bm) {
  const std::size_t n = bm.scheme.n;
  const std::size_t r = bm.eigenspace_count();
  Scalar nn = mode_scalar(static_cast<long long>(n), bm.exact);
  double worst = 0;
  for (std::size_t x = 0; x < n; ++x) {
    Vector ex = vec_zero(n, bm.exact);
    ex[x] = mode_scalar(1, bm.exact);
    std::vector<Vector> proj;
    for (std::size_t i = 0; i < r; ++i) proj.push_back(bm.E[i] * ex);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Vector had(n);
        for (std::size_t t = 0; t < n; ++t) had[t] = proj[i][t] * proj[j][t];
        for (std::size_t k = 0; k < r; ++k) {
          Vector lhs = bm.E[k] * had;
          Vector rhs = vec_scale(bm.q[i][j][k] / nn, proj[k]);
          for (std::size_t t = 0; t < n; ++t)
            worst = std::max(worst, (lhs[t] - rhs[t]).abs_double());
        }
      }
  }
  return worst;
}

std::pair<double, double> krein_bounds(const BoseMesner& bm) {
  double min_real = 0, max_imag = 0;
  for (const auto& qi : bm.q)
    for (const auto& qj : qi)
      for (const auto& qk : qj) {
        Complex z = qk.to_complex();
        min_real = std::min(min_real, z.real());
        max_imag = std::max(max_imag, std::abs(z.imag()));
      }
  return {min_real, max_imag};
}

CentralizerRefinement refine_with_centralizer(const BoseMesner& bm, int i, const PermGroup& g,
                                              const Perm& x, const CharacterTable& h_table,
                                              double eps) {
  // the scheme must be the orbital scheme of conjugation on the class of x
  PermAction action = conjugation_action(g, x);
  if (action.size() != bm.scheme.n)
    throw InvalidArgument("scheme size does not match the conjugacy class");
  {
    Orbitals o = orbitals(g, action);
    if (o.rel != bm.scheme.rel)
      throw InvalidArgument("scheme relations do not come from this conjugation action");
  }
  auto xi = g.index_of(x);
  if (!xi) throw InvalidArgument("x is not an element of the group");
  const auto& cls = g.conjugacy_classes()[g.class_of(*xi)];
  std::size_t x_point =
      std::find(cls.begin(), cls.end(), *xi) - cls.begin();

  // H = the table's group; must centralize x inside g
  const PermGroup& h = h_table.group;
  PermGroup centralizer = g.centralizer(x);
  if (h.order() != centralizer.order())
    throw InvalidArgument("character table group is not the centralizer of x");
  for (const Perm& gen : h.generators()) {
    if (!g.contains(gen)) throw InvalidArgument("centralizer generator is not in the group");
    if (!(gen * x == x * gen)) throw InvalidArgument("table group does not centralize x");
  }

  NortonAlgebra na = norton_algebra(bm, i, eps);
  const std::size_t m = na.basis.dim(), n = bm.scheme.n;
  std::vector<Vector> axes = norton_axes(bm, na, eps);

  // permutation automorphisms of the Norton algebra, restricted to V_i
  auto restrict_perm = [&](const Perm& domain_perm) {
    Matrix big(n, n, bm.exact);
    for (std::size_t t = 0; t < n; ++t)
      big.at(domain_perm(static_cast<int>(t)), t) = mode_scalar(1, bm.exact);
    Matrix out(m, m, bm.exact);
    auto basis = na.basis.basis_vectors();
    for (std::size_t c = 0; c < m; ++c) {
      auto coords = na.basis.coords(big * basis[c], std::max(eps, 1e-9));
      if (!coords) throw InvalidObject("permutation does not preserve the eigenspace");
      for (std::size_t r = 0; r < m; ++r) out.at(r, c) = (*coords)[r];
    }
    return out;
  };
  auto domain_perm_of = [&](const Perm& group_elem) {
    std::vector<int> img(cls.size());
    for (std::size_t t = 0; t < cls.size(); ++t) {
      Perm c = g.elements()[cls[t]].conj_by(group_elem);
      img[t] = static_cast<int>(std::find(cls.begin(), cls.end(), *g.index_of(c)) - cls.begin());
    }
    return Perm(img);
  };

  MatrixRep hrep;
  hrep.group = h;
  hrep.dim = m;
  for (const Perm& gen : h.generators()) hrep.gen_images.push_back(restrict_perm(domain_perm_of(gen)));

  CentralizerRefinement out;
  out.rho_x = restrict_perm(domain_perm_of(x));
  out.rep_law = representation_fusion_law(h_table, eps);

  // eigenspace decomposition of ad at the point x
  bool complete = true;
  auto eparts = ad_eigen_parts(na.algebra.ad(axes[x_point]), bm.exact, bm.scheme.symmetric,
                               eps, &complete);
  if (!complete) throw InvalidObject("ad at x has no complete eigenbasis");
  std::vector<Subspace> eigen_parts;
  std::vector<std::string> eigen_labels;
  for (std::size_t k = 0; k < eparts.size(); ++k) {
    eigen_parts.push_back(Subspace::span(m, eparts[k].basis, std::max(eps, 1e-9)));
    eigen_labels.push_back("lam" + std::to_string(k));
  }
  out.eigen_law = refine_fusion_law(na.algebra, eigen_parts, eigen_labels, hrep, h_table, eps);

  // isotypic refinement of each eigenspace
  IsotypicDecomposition iso = isotypic_decomposition(hrep, h_table, eps);
  FusionLaw product = product_law(out.eigen_law, out.rep_law);
  DecompositionAlgebra refined;
  refined.algebra = na.algebra;
  refined.law = product;
  refined.index_names = {"x" + std::to_string(x_point)};
  Decomposition dec;
  for (std::size_t lk = 0; lk < eigen_parts.size(); ++lk)
    for (std::size_t ck = 0; ck < iso.components.size(); ++ck)
      dec.push_back(eigen_parts[lk].intersect(iso.components[ck].space, std::max(eps, 1e-9)));
  refined.omega.push_back(std::move(dec));
  out.refined = std::move(refined);

  // Z/n grading by the central value chi(x)/chi(1)
  const long long ord = x.order();
  CayleyTable zn;
  for (long long k = 0; k < ord; ++k) zn.labels.push_back(std::to_string(k));
  zn.identity = 0;
  zn.mult.assign(ord, std::vector<int>(ord));
  for (long long a = 0; a < ord; ++a)
    for (long long b = 0; b < ord; ++b) zn.mult[a][b] = static_cast<int>((a + b) % ord);
  out.grading_group_law = group_fusion_law(zn);
  out.grading_map.clear();
  for (std::size_t lk = 0; lk < eigen_parts.size(); ++lk)
    for (std::size_t ck = 0; ck < iso.components.size(); ++ck) {
      Scalar val = h_table.value(ck, *h.index_of(x));
      Scalar deg = h_table.values[ck][h.class_of(0)];
      Complex z = val.to_complex() / deg.to_complex();
      int best = -1;
      for (long long k = 0; k < ord; ++k) {
        Complex root(std::cos(2 * 3.14159265358979323846 * k / ord),
                     std::sin(2 * 3.14159265358979323846 * k / ord));
        if (std::abs(z - root) < 1e-6) best = static_cast<int>(k);
      }
      if (best < 0) throw InvalidObject("central character value is not a root of unity");
      out.grading_map.push_back(best);
    }
  out.grading_is_morphism =
      !FusionMorphism::violation(product, out.grading_group_law, out.grading_map).has_value();

  // the Miyamoto map of the canonical character equals rho(x)
  {
    FusionMorphism grading(product, out.grading_group_law, out.grading_map);
    DecompositionAlgebra graded = pushforward(out.refined, grading);
    std::vector<RCharacter> chars;
    bool ex = bm.exact && ord <= 2;
    for (long long c = 0; c < ord; ++c) {
      RCharacter ch;
      for (long long k = 0; k < ord; ++k) {
        if (ex)
          ch.values.push_back(Scalar((c * k) % 2 == 0 ? 1 : -1));
        else {
          double ang = 2 * 3.14159265358979323846 * c * k / ord;
          ch.values.push_back(Scalar(Complex(std::cos(ang), std::sin(ang))));
        }
      }
      chars.push_back(std::move(ch));
    }
    MiyamotoContext ctx = MiyamotoContext::make(out.refined, grading, chars, eps);
    Matrix tau = miyamoto_map(ctx, 0, 1);
    Matrix rho = (bm.exact && !ex) ? to_float_mat(out.rho_x)
                                   : (ex ? out.rho_x : to_float_mat(out.rho_x));
    Matrix taum = tau.exact() == rho.exact() ? tau : to_float_mat(tau);
    out.miyamoto_matches_rho = taum.close_to(rho.exact() == taum.exact() ? rho : to_float_mat(rho),
                                             std::max(eps, 1e-9) * 100);
  }

  // the automorphism group generated by the whole class
  std::vector<Matrix> rhos;
  for (std::size_t t = 0; t < cls.size(); ++t)
    rhos.push_back(restrict_perm(domain_perm_of(g.elements()[cls[t]])));
  MatrixGroupClosure closure = matrix_group_closure(rhos, 100000);
  out.rho_group_order = closure.order();
  return out;
}

}  // namespace decalg
