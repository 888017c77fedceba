#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "decalg/constructions.hpp"
#include "decalg/intmatrix.hpp"
#include "decalg/matrix.hpp"

using namespace decalg;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

void check_snf(const IntegerMatrix& m) {
  SmithResult s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.S);
  Int du = det_integer(s.U), dv = det_integer(s.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i + 1 < diag.size() && diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    if (i + 1 < diag.size() && diag[i] == 0) CHECK(diag[i + 1] == 0);
  }
  // off-diagonal must vanish
  for (std::size_t i = 0; i < s.S.rows(); ++i)
    for (std::size_t j = 0; j < s.S.cols(); ++j)
      if (i != j) CHECK(s.S.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form: pinned examples") {
  // 1x1 zero: one infinite cyclic factor
  IntegerMatrix z(1, 1);
  auto s = smith_normal_form(z);
  CHECK(s.diagonal() == std::vector<Int>{0});

  // diag(2,3) reduces to diag(1,6): the hand row/column oracle
  // [2 0;0 3] -> add row2 to row1 -> [2 3;0 3] -> col2 -= col1 -> [2 1;0 3]
  // -> swap to pivot 1 -> clears to diag(1, 6).
  auto s2 = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  CHECK(s2.diagonal() == std::vector<Int>{1, 6});
  check_snf(from_rows({{2, 0}, {0, 3}}));

  auto s3 = smith_normal_form(IntegerMatrix::identity(3));
  CHECK(s3.diagonal() == std::vector<Int>{1, 1, 1});
}

TEST_CASE("smith normal form: random property suite") {
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> dim(1, 8), entry(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    check_snf(m);
  }
}

TEST_CASE("kernel basis: identity and rank-1") {
  CHECK(kernel_basis(Matrix::identity(2)).empty());

  Matrix ones(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) ones.at(i, j) = Scalar(1);
  auto k = kernel_basis(ones);
  REQUIRE(k.size() == 1);
  // proportional to (1, -1)
  CHECK(k[0][0] + k[0][1] == Scalar(0));
  CHECK(k[0][0] != Scalar(0));
}

TEST_CASE("kernel basis: middle Peirce eigenspace of J_3 has dimension 2(n-1)") {
  Algebra j3 = jordan_matrix_algebra(3);
  Matrix ad = j3.ad(jordan_unit(3, 0, 0));
  Matrix shifted = ad;
  for (std::size_t t = 0; t < 9; ++t)
    shifted.at(t, t) = shifted.at(t, t) - Scalar::ratio(1, 2);
  auto k = kernel_basis(shifted);
  CHECK(k.size() == 4);
  // membership and independence
  for (const auto& v : k) CHECK(vec_is_zero(shifted * v, 0.0));
  CHECK(rank(Matrix::from_rows(k), 0.0) == k.size());
}

TEST_CASE("kernel basis rejects float input; tolerant variant accepts") {
  Matrix f(2, 2, false);
  f.at(0, 0) = Scalar(1.0);
  CHECK_THROWS_AS(kernel_basis(f), ScalarMismatch);
  CHECK(kernel_basis_tol(f, 1e-9).size() == 1);
}

TEST_CASE("rational eigenvalues: diagonal, rotation, residual degrees") {
  Matrix d(3, 3);
  d.at(0, 0) = Scalar(1);
  d.at(1, 1) = Scalar(0);
  d.at(2, 2) = Scalar::ratio(1, 2);
  auto r = rational_eigenvalues(d);
  REQUIRE(r.eigenvalues.size() == 3);
  CHECK(r.eigenvalues[0].first == Rational(1));
  CHECK(r.eigenvalues[1].first == Rational(1) / 2);
  CHECK(r.eigenvalues[2].first == Rational(0));
  CHECK(r.splits());

  Matrix rot(2, 2);
  rot.at(0, 1) = Scalar(-1);
  rot.at(1, 0) = Scalar(1);
  auto rr = rational_eigenvalues(rot);
  CHECK(rr.eigenvalues.empty());
  CHECK(rr.residual_degree == 2);
}

TEST_CASE("rational eigenvalues: Petersen graph via the float oracle") {
  // Petersen: vertices are the 2-subsets of {0..4}, adjacent iff disjoint.
  std::vector<std::pair<int, int>> verts;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) verts.emplace_back(i, j);
  Matrix adj(10, 10);
  for (std::size_t a = 0; a < 10; ++a)
    for (std::size_t b = 0; b < 10; ++b) {
      auto [i, j] = verts[a];
      auto [k, l] = verts[b];
      bool disjoint = i != k && i != l && j != k && j != l;
      if (disjoint) adj.at(a, b) = Scalar(1);
    }
  // float oracle first: Jacobi eigenvalues, rounded to candidates
  Matrix fadj(10, 10, false);
  for (std::size_t a = 0; a < 10; ++a)
    for (std::size_t b = 0; b < 10; ++b) fadj.at(a, b) = Scalar(adj.at(a, b).to_complex());
  auto je = jacobi_hermitian(fadj);
  std::map<long long, int> rounded;
  for (double v : je.values) ++rounded[std::llround(v)];
  // exact verification of every candidate: det(adj - c I) = 0
  for (const auto& [cand, mult] : rounded) {
    Matrix shifted = adj;
    for (std::size_t t = 0; t < 10; ++t)
      shifted.at(t, t) = shifted.at(t, t) - Scalar(static_cast<long long>(cand));
    CHECK(det(shifted, 0.0) == Scalar(0));
  }
  auto r = rational_eigenvalues(adj);
  CHECK(r.splits());
  int total = 0;
  for (const auto& [lambda, mult] : r.eigenvalues) {
    total += mult;
    // each reported eigenvalue matches the oracle's multiplicity
    long long key = std::llround(static_cast<double>(lambda));
    CHECK(Rational(key) == lambda);
    CHECK(rounded.at(key) == mult);
    Matrix shifted = adj;
    for (std::size_t t = 0; t < 10; ++t)
      shifted.at(t, t) = shifted.at(t, t) - Scalar(lambda);
    CHECK(det(shifted, 0.0) == Scalar(0));
  }
  CHECK(total == 10);
  CHECK(r.eigenvalues.front().first == Rational(3));
}

TEST_CASE("scalar variant discipline") {
  Scalar a = Scalar::ratio(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK_THROWS_AS(Scalar(1) + Scalar(1.0), ScalarMismatch);
  CHECK((Scalar(Complex(1, 2)).conj() == Scalar(Complex(1, -2))));
  CHECK(Scalar::parse("7/3") == Scalar::ratio(7, 3));
  CHECK(Scalar::parse("-5") == Scalar(-5));
}

TEST_CASE("subspace: canonical bases, membership, Zassenhaus intersection") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vector> rows;
    for (int r = 0; r < 3; ++r) {
      Vector v(6);
      for (auto& x : v) x = Scalar(entry(rng));
      rows.push_back(v);
    }
    Subspace u = Subspace::span(6, rows, 0.0);
    // replacing the basis by an invertible recombination keeps the subspace
    std::vector<Vector> mixed;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Vector v = rows[r];
      v = vec_add(v, vec_scale(Scalar(entry(rng)), rows[(r + 1) % rows.size()]));
      mixed.push_back(v);
    }
    Subspace w = Subspace::span(6, mixed, 0.0);
    CHECK(u.contains(w, 0.0));
    for (const auto& v : rows) CHECK(u.contains(v, 0.0));
    Subspace inter = u.intersect(w, 0.0);
    CHECK(inter.same(w, 0.0));
    CHECK(u.sum(w, 0.0).same(u, 0.0));
  }
}

TEST_CASE("jacobi: Hermitian input with complex off-diagonal") {
  Matrix h(2, 2, false);
  h.at(0, 0) = Scalar(Complex(2, 0));
  h.at(1, 1) = Scalar(Complex(3, 0));
  h.at(0, 1) = Scalar(Complex(0, 1));
  h.at(1, 0) = Scalar(Complex(0, -1));
  auto e = jacobi_hermitian(h);
  // char poly x^2 - 5x + 5: roots (5 +- sqrt 5)/2
  double s5 = std::sqrt(5.0);
  CHECK(e.values[0] == doctest::Approx((5 - s5) / 2));
  CHECK(e.values[1] == doctest::Approx((5 + s5) / 2));
  for (std::size_t k = 0; k < 2; ++k) {
    // H v = lambda v
    for (std::size_t r = 0; r < 2; ++r) {
      Complex hv = h.at(r, 0).to_complex() * e.vectors[k][0] +
                   h.at(r, 1).to_complex() * e.vectors[k][1];
      CHECK(std::abs(hv - e.values[k] * e.vectors[k][r]) < 1e-9);
    }
  }
}
