#include "decalg/constructions.hpp"

#include <algorithm>

namespace decalg {

std::size_t jordan_basis_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n + j;
}

Vector jordan_unit(std::size_t n, std::size_t i, std::size_t j) {
  Vector v = vec_zero(n * n, true);
  v[jordan_basis_index(n, i, j)] = Scalar(1);
  return v;
}

Algebra jordan_matrix_algebra(std::size_t n) {
  Algebra a = Algebra::zero(n * n, true);
  Scalar half = Scalar::ratio(1, 2);
  // E_ij . E_kl = (delta_jk E_il + delta_li E_kj) / 2
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Vector& out = a.sc[jordan_basis_index(n, i, j)][jordan_basis_index(n, k, l)];
          if (j == k) out[jordan_basis_index(n, i, l)] += half;
          if (l == i) out[jordan_basis_index(n, k, j)] += half;
        }
  return a;
}

FusionLaw z2_group_law() {
  CayleyTable t;
  t.labels = {"0", "1"};
  t.identity = 0;
  t.mult = {{0, 1}, {1, 0}};
  return group_fusion_law(t);
}

FusionMorphism jordan_z2_grading() {
  return FusionMorphism(jordan_law(), z2_group_law(), {0, 0, 1});
}

Decomposition peirce_decomposition(const Algebra& jordan, const Vector& idempotent) {
  if (!vec_is_zero(vec_sub(jordan.multiply(idempotent, idempotent), idempotent), 0.0))
    throw InvalidArgument("peirce_decomposition: element is not an idempotent");
  Matrix ad = jordan.ad(idempotent);
  const std::size_t dim = jordan.dim;
  auto eigenspace = [&](const Scalar& lambda) {
    Matrix shifted = ad;
    for (std::size_t t = 0; t < dim; ++t) shifted.at(t, t) = shifted.at(t, t) - lambda;
    return Subspace::span(dim, kernel_basis(shifted), 0.0);
  };
  Decomposition dec;
  dec.push_back(eigenspace(Scalar(1)));            // e
  dec.push_back(eigenspace(Scalar(0)));            // z
  dec.push_back(eigenspace(Scalar::ratio(1, 2)));  // h
  std::size_t total = 0;
  for (const auto& part : dec) total += part.dim();
  if (total != dim)
    throw InvalidObject("Peirce eigenspaces do not exhaust the algebra");
  return dec;
}

DecompositionAlgebra peirce_context(std::size_t n) {
  DecompositionAlgebra d;
  d.algebra = jordan_matrix_algebra(n);
  d.law = jordan_law();
  for (std::size_t k = 0; k < n; ++k) {
    d.index_names.push_back("E" + std::to_string(k + 1) + std::to_string(k + 1));
    d.omega.push_back(peirce_decomposition(d.algebra, jordan_unit(n, k, k)));
  }
  d.unit = 0;
  std::vector<Vector> axes;
  for (std::size_t k = 0; k < n; ++k) axes.push_back(jordan_unit(n, k, k));
  d.axes = std::move(axes);
  d.lambda = std::vector<Scalar>{Scalar(1), Scalar(0), Scalar::ratio(1, 2)};
  return d;
}

DecMorphism jordan_corner_embedding(std::size_t n, std::size_t m, double eps) {
  if (m < n) throw InvalidArgument("corner embedding needs m >= n");
  DecompositionAlgebra src = peirce_context(n);
  DecompositionAlgebra dst = peirce_context(m);
  Matrix phi(m * m, n * n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      phi.at(jordan_basis_index(m, i, j), jordan_basis_index(n, i, j)) = Scalar(1);
  std::vector<int> psi(n);
  for (std::size_t k = 0; k < n; ++k) psi[k] = static_cast<int>(k);
  return make_morphism(src, dst, phi, psi, eps, true);
}

DecompositionAlgebra null_plane_extension(const DecompositionAlgebra& graded) {
  if (graded.law.size() != 2)
    throw InvalidArgument("null plane extension expects a Z/2 group fusion law");
  CayleyTable gamma = cayley_from_group_law(graded.law);
  const int one = gamma.identity, sigma = 1 - gamma.identity;
  const std::size_t n = graded.algebra.dim, nb = n + 2;

  DecompositionAlgebra b;
  b.law = graded.law;
  b.algebra = Algebra::zero(nb, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = vec_zero(nb, true);
      for (std::size_t k = 0; k < n; ++k) v[k] = graded.algebra.sc[i][j][k];
      b.algebra.sc[i][j] = std::move(v);
    }
  auto embed = [&](const Vector& v) {
    Vector out = vec_zero(nb, true);
    for (std::size_t k = 0; k < n; ++k) out[k] = v[k];
    return out;
  };
  Vector e = vec_zero(nb, true), f = vec_zero(nb, true);
  e[n] = Scalar(1);
  f[n + 1] = Scalar(1);

  for (std::size_t i = 0; i < graded.index_count(); ++i) {
    for (int variant = 0; variant < 2; ++variant) {
      std::vector<Vector> part_one, part_sigma;
      for (const auto& v : graded.omega[i][one].basis_vectors()) part_one.push_back(embed(v));
      for (const auto& v : graded.omega[i][sigma].basis_vectors()) part_sigma.push_back(embed(v));
      part_one.push_back(variant == 0 ? e : f);
      part_sigma.push_back(variant == 0 ? f : e);
      Decomposition dec(2, Subspace(nb));
      dec[one] = Subspace::span(nb, part_one, 1e-9);
      dec[sigma] = Subspace::span(nb, part_sigma, 1e-9);
      b.omega.push_back(std::move(dec));
      b.index_names.push_back("(" + graded.index_names[i] + "," + std::to_string(variant + 1) +
                              ")");
    }
  }
  return b;
}

DecMorphism null_plane_inclusion(const DecompositionAlgebra& graded,
                                 const DecompositionAlgebra& extended,
                                 const std::vector<int>& choices, double eps) {
  if (choices.size() != graded.index_count())
    throw InvalidArgument("one choice per decomposition required");
  const std::size_t n = graded.algebra.dim;
  Matrix phi(n + 2, n, true);
  for (std::size_t k = 0; k < n; ++k) phi.at(k, k) = Scalar(1);
  std::vector<int> psi(graded.index_count());
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (choices[i] != 0 && choices[i] != 1) throw InvalidArgument("choices must be 0 or 1");
    psi[i] = static_cast<int>(2 * i) + choices[i];
  }
  return make_morphism(graded, extended, phi, psi, eps);
}

namespace {

// 9x9 matrix of A -> gAg^-1 on the E_ij basis of M_3, for monomial g given
// by a coordinate permutation and signs (g = P * diag(signs)).
Matrix monomial_conjugation(const Perm& p, const std::array<int, 3>& signs) {
  Matrix out(9, 9, true);
  // g E_ij g^-1 = s_i s_j E_{p(i) p(j)} for g e_k = s_k e_{p(k)}
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      int s = signs[i] * signs[j];
      out.at(jordan_basis_index(3, p(static_cast<int>(i)), p(static_cast<int>(j))),
             jordan_basis_index(3, i, j)) = Scalar(s);
    }
  return out;
}

}  // namespace

std::pair<PermGroup, MatrixRep> matrix_group_as_permgroup(const std::vector<Matrix>& gens,
                                                          std::size_t cap) {
  MatrixGroupClosure closure = matrix_group_closure(gens, cap);
  if (closure.exhausted) throw CapExceeded("matrix group closure overflow");
  const std::size_t order = closure.order();
  // Identity generators would be dropped by the permutation model and
  // misalign the representation; drop them here instead.
  std::vector<Matrix> live;
  for (const Matrix& gen : gens)
    if (!gen.is_identity(0.0)) live.push_back(gen);
  // regular permutation model: generator g sends element t to g * t
  std::vector<Perm> pgens;
  for (const Matrix& gen : live) {
    std::vector<int> img(order);
    for (std::size_t t = 0; t < order; ++t) {
      auto idx = closure.index_of(gen * closure.elements[t]);
      if (!idx) throw InvalidObject("closure is not closed");
      img[t] = *idx;
    }
    pgens.push_back(Perm(img));
  }
  PermGroup group(static_cast<int>(order), pgens, std::max<std::size_t>(order, 2));
  if (group.order() != order) throw InvalidObject("regular model has wrong order");
  MatrixRep rep;
  rep.group = group;
  rep.dim = gens.empty() ? 0 : gens[0].rows();
  rep.gen_images = live;
  return {group, rep};
}

SignedPermExample signed_perm_centralizer_example() {
  SignedPermExample ex;
  ex.jordan = jordan_matrix_algebra(3);
  Perm id3 = Perm::identity(3);
  Perm swap23({0, 2, 1});
  Matrix a = monomial_conjugation(id3, {-1, 1, 1});
  Matrix b = monomial_conjugation(id3, {1, -1, 1});
  Matrix c = monomial_conjugation(swap23, {1, 1, 1});
  ex.involution = a;

  auto [group, rep] = matrix_group_as_permgroup({a, b, c}, 64);
  ex.group = group;
  ex.rep = rep;
  ex.table = small_character_table(ex.group);
  return ex;
}

}  // namespace decalg
