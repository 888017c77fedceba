#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "decalg/constructions.hpp"
#include "decalg/decomp.hpp"

using namespace decalg;

namespace {
const double kEps = 1e-9;

DecompositionAlgebra one_dim_idempotent() {
  DecompositionAlgebra d;
  d.algebra = Algebra::zero(1, true);
  d.algebra.sc[0][0] = Vector{Scalar(1)};
  d.law = jordan_law();
  d.index_names = {"i0"};
  Decomposition dec(3, Subspace(1));
  dec[0] = Subspace::full(1);
  d.omega = {dec};
  d.unit = 0;
  d.axes = std::vector<Vector>{Vector{Scalar(1)}};
  d.lambda = std::vector<Scalar>{Scalar(1), Scalar(0), Scalar::ratio(1, 2)};
  return d;
}

}  // namespace

TEST_CASE("verify: Peirce decomposition of J_3 at E_11") {
  DecompositionAlgebra d = peirce_context(3);
  VerifyReport rep = verify(d, kEps);
  CHECK(rep.valid());
  CHECK(rep.axial());
  CHECK(rep.primitive);
  CHECK(rep.unit_label_is_unit);
  for (const auto& dims : rep.part_dims)
    CHECK(dims == std::vector<std::size_t>{1, 4, 4});
  CHECK(rep.violations.empty());
}

TEST_CASE("verify: shrinking h*h to {e} is caught at (i, h, h)") {
  DecompositionAlgebra d = peirce_context(3);
  d.law.set_entry(2, 2, {0});  // h*h := {e}: the z-component product escapes
  VerifyReport rep = verify(d, kEps);
  CHECK_FALSE(rep.fusion);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.kind == "fusion" && v.x == 2 && v.y == 2) found = true;
  CHECK(found);
}

TEST_CASE("verify: the initial object (0, {}, {}) is valid") {
  DecompositionAlgebra d;
  d.algebra = Algebra::zero(0, true);
  d.law = jordan_law();
  VerifyReport rep = verify(d, kEps);
  CHECK(rep.valid());
  // terminal object (0, {*}, (0)) too
  DecompositionAlgebra t = d;
  t.index_names = {"*"};
  t.omega = {Decomposition(3, Subspace(0))};
  CHECK(verify(t, kEps).valid());
}

TEST_CASE("verify is stable under base change of the part bases") {
  DecompositionAlgebra d = peirce_context(3);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (std::size_t i = 0; i < d.index_count(); ++i)
    for (std::size_t x = 0; x < d.law.size(); ++x) {
      auto basis = d.omega[i][x].basis_vectors();
      if (basis.size() < 2) continue;
      // invertible recombination: add multiples of the first vector to the rest
      for (std::size_t k = 1; k < basis.size(); ++k)
        basis[k] = vec_add(basis[k], vec_scale(Scalar(coeff(rng)), basis[0]));
      d.omega[i][x] = Subspace::span(9, basis, kEps);
    }
  VerifyReport rep = verify(d, kEps);
  CHECK(rep.valid());
  CHECK(rep.axial());
}

TEST_CASE("nilpotent axis: lambda_e = 0 is allowed") {
  DecompositionAlgebra d;
  d.algebra = Algebra::zero(1, true);  // a^2 = 0
  d.law = jordan_law();
  d.index_names = {"i0"};
  Decomposition dec(3, Subspace(1));
  dec[0] = Subspace::full(1);
  d.omega = {dec};
  d.unit = 0;
  d.axes = std::vector<Vector>{Vector{Scalar(1)}};
  d.lambda = std::vector<Scalar>{Scalar(0), Scalar(0), Scalar(0)};
  VerifyReport rep = verify(d, kEps);
  CHECK(rep.valid());
  CHECK(rep.axial());
}

TEST_CASE("pushforward: Peirce to Z/2 gives part dimensions (5, 4)") {
  DecompositionAlgebra d = peirce_context(3);
  DecompositionAlgebra pushed = pushforward(d, jordan_z2_grading());
  VerifyReport rep = verify(pushed, kEps);
  CHECK(rep.valid());
  for (const auto& dims : rep.part_dims) CHECK(dims == std::vector<std::size_t>{5, 4});

  DecompositionAlgebra same = pushforward(d, FusionMorphism::identity(d.law));
  for (std::size_t i = 0; i < d.index_count(); ++i)
    for (std::size_t x = 0; x < d.law.size(); ++x)
      CHECK(same.omega[i][x].same(d.omega[i][x], kEps));
}

TEST_CASE("pushforward: Ising instance along its grading") {
  // a 2-dimensional algebra with an Ising-law decomposition: span{a} = e-part,
  // span{b} = t-part, a acting as identity on itself and 0 on b
  DecompositionAlgebra d;
  d.algebra = Algebra::zero(2, true);
  d.algebra.sc[0][0] = Vector{Scalar(1), Scalar(0)};
  d.law = ising_law();
  d.index_names = {"i0"};
  Decomposition dec(4, Subspace(2));
  dec[0] = Subspace::span(2, {Vector{Scalar(1), Scalar(0)}}, kEps);
  dec[3] = Subspace::span(2, {Vector{Scalar(0), Scalar(1)}}, kEps);
  d.omega = {dec};
  REQUIRE(verify(d, kEps).valid());
  FusionMorphism grade(ising_law(), z2_group_law(), {0, 0, 0, 1});
  DecompositionAlgebra pushed = pushforward(d, grade);
  CHECK(verify(pushed, kEps).valid());
  CHECK(pushed.omega[0][0].dim() == 1);
  CHECK(pushed.omega[0][1].dim() == 1);
}

TEST_CASE("pushforward preserves verification across the corpus") {
  std::vector<std::pair<DecompositionAlgebra, FusionMorphism>> corpus;
  corpus.emplace_back(peirce_context(2), jordan_z2_grading());
  corpus.emplace_back(peirce_context(3), jordan_z2_grading());
  FusionLaw j = jordan_law();
  // collapse everything to the trivial grading as well
  FusionLaw one = FusionLaw::empty_law({"0"});
  one.set_entry(0, 0, {0});
  corpus.emplace_back(peirce_context(3), FusionMorphism(j, one, {0, 0, 0}));
  for (auto& [d, xi] : corpus) {
    REQUIRE(verify(d, kEps).valid());
    CHECK(verify(pushforward(d, xi), kEps).valid());
  }
}

TEST_CASE("morphisms: corner embedding is axial; broken maps are rejected") {
  DecMorphism f = jordan_corner_embedding(3, 5);
  CHECK(f.axial_compat);
  // a map that is not an algebra homomorphism
  DecompositionAlgebra d = peirce_context(2);
  Matrix bad(4, 4, true);
  bad.at(0, 0) = Scalar(2);
  std::vector<int> psi{0, 1};
  CHECK_THROWS_AS(make_morphism(d, d, bad, psi, kEps), InvalidObject);
}

TEST_CASE("product: with the terminal object, and Peirce x Peirce") {
  DecompositionAlgebra d = peirce_context(3);
  DecompositionAlgebra terminal;
  terminal.algebra = Algebra::zero(0, true);
  terminal.law = d.law;
  terminal.index_names = {"*"};
  terminal.omega = {Decomposition(3, Subspace(0))};
  ProductResult pr = dec_product(d, terminal, kEps);
  CHECK(pr.object.algebra.dim == 9);
  CHECK(pr.object.index_count() == 3);
  VerifyReport rep = verify(pr.object, kEps);
  CHECK(rep.valid());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < 3; ++x)
      CHECK(pr.object.omega[i][x].dim() == d.omega[i][x].dim());

  ProductResult p2 = dec_product(d, d, kEps);
  CHECK(p2.object.algebra.dim == 18);
  CHECK(p2.object.index_count() == 9);
  VerifyReport rep2 = verify(p2.object, kEps);
  CHECK(rep2.valid());
  CHECK(rep2.axial());  // both factors share unit and evaluation map
  for (const auto& dims : rep2.part_dims)
    CHECK(dims == std::vector<std::size_t>{2, 8, 8});

  // two one-dimensional algebras
  DecompositionAlgebra a = one_dim_idempotent();
  ProductResult p3 = dec_product(a, a, kEps);
  CHECK(p3.object.algebra.dim == 2);
  CHECK(verify(p3.object, kEps).valid());
}

TEST_CASE("product universal property on generated cones") {
  DecompositionAlgebra d = peirce_context(2);
  ProductResult pr = dec_product(d, d, kEps);
  // cone from the product itself
  DecMorphism fact = product_factor(pr, pr.proj1, pr.proj2, kEps);
  CHECK(fact.phi.is_identity(kEps));
  for (std::size_t k = 0; k < fact.psi.size(); ++k)
    CHECK(fact.psi[k] == static_cast<int>(k));
  // cone of zero morphisms with arbitrary index maps
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 1);
  DecompositionAlgebra z;
  z.algebra = Algebra::zero(1, true);
  z.law = d.law;
  z.index_names = {"k"};
  Decomposition dec(3, Subspace(1));
  dec[0] = Subspace::full(1);
  z.omega = {dec};
  for (int trial = 0; trial < 20; ++trial) {
    Matrix zero(4, 1, true);
    std::vector<int> psi1{pick(rng)}, psi2{pick(rng)};
    DecMorphism f1 = make_morphism(z, d, zero, psi1, kEps);
    DecMorphism f2 = make_morphism(z, d, zero, psi2, kEps);
    DecMorphism fact2 = product_factor(pr, f1, f2, kEps);
    // projections recover the legs
    CHECK((pr.proj1.phi * fact2.phi).close_to(f1.phi, kEps));
    CHECK((pr.proj2.phi * fact2.phi).close_to(f2.phi, kEps));
    for (std::size_t k = 0; k < fact2.psi.size(); ++k) {
      CHECK(pr.proj1.psi[fact2.psi[k]] == f1.psi[k]);
      CHECK(pr.proj2.psi[fact2.psi[k]] == f2.psi[k]);
    }
  }
}

TEST_CASE("equalizer: equal morphisms give back the source") {
  DecompositionAlgebra d = peirce_context(2);
  DecMorphism id = identity_morphism(d, kEps);
  EqualizerResult eq = dec_equalizer(id, id, kEps);
  CHECK(eq.object.algebra.dim == d.algebra.dim);
  CHECK(eq.object.index_count() == d.index_count());
  CHECK(verify(eq.object, kEps).valid());
}

TEST_CASE("equalizer: swap automorphism of J_2 against the identity") {
  DecompositionAlgebra d = peirce_context(2);
  // conjugation by the transposition matrix permutes the two Peirce members
  Matrix phi(4, 4, true);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      phi.at(jordan_basis_index(2, 1 - i, 1 - j), jordan_basis_index(2, i, j)) = Scalar(1);
  DecMorphism swap = make_morphism(d, d, phi, {1, 0}, kEps);
  DecMorphism id = identity_morphism(d, kEps);
  // drop the axial tag so the comparison is in the plain category
  swap.axial_compat = false;
  EqualizerResult eq = dec_equalizer(swap, id, kEps);
  // fixed algebra of the swap: span{E11+E22, E12+E21}, but no index survives
  CHECK(eq.object.algebra.dim == 2);
  CHECK(eq.object.index_count() == 0);
  CHECK(verify(eq.object, kEps).valid());

  // a cone through the equalizer factors uniquely
  DecompositionAlgebra z;
  z.algebra = Algebra::zero(1, true);
  z.law = d.law;
  DecMorphism h = make_morphism(z, d, Matrix(4, 1, true), {}, kEps);
  DecMorphism fact = equalizer_factor(eq, swap, id, h, kEps);
  CHECK((eq.inclusion.phi * fact.phi).close_to(h.phi, kEps));
}

TEST_CASE("decomposition ideals: zero, everything, and the null plane kernel") {
  DecompositionAlgebra d = peirce_context(3);
  CHECK(decomposition_ideal_check(d, Subspace(9), kEps).ok());
  CHECK(decomposition_ideal_check(d, Subspace::full(9), kEps).ok());
  // a random line is generally not an ideal
  Subspace line = Subspace::span(9, {jordan_unit(3, 0, 1)}, kEps);
  CHECK_FALSE(decomposition_ideal_check(d, line, kEps).ok());

  // kernel of the quotient projection in the null-plane extension
  DecompositionAlgebra graded = pushforward(peirce_context(3), jordan_z2_grading());
  DecompositionAlgebra b = null_plane_extension(graded);
  REQUIRE(verify(b, kEps).valid());
  std::vector<Vector> mbasis;
  {
    Vector e = vec_zero(11, true), f = vec_zero(11, true);
    e[9] = Scalar(1);
    f[10] = Scalar(1);
    mbasis = {e, f};
  }
  Subspace m = Subspace::span(11, mbasis, kEps);
  CHECK(decomposition_ideal_check(b, m, kEps).ok());

  // quotient by M recovers the original object (with doubled indices)
  QuotientResult q = dec_quotient(b, m, kEps);
  CHECK(q.object.algebra.dim == 9);
  CHECK(verify(q.object, kEps).valid());
  for (std::size_t i = 0; i < graded.index_count(); ++i)
    for (std::size_t x = 0; x < 2; ++x) {
      CHECK(q.object.omega[2 * i][x].dim() == graded.omega[i][x].dim());
      CHECK(q.object.omega[2 * i + 1][x].dim() == graded.omega[i][x].dim());
    }
  // kernel of the projection passes the ideal check (Prop-style invariant)
  Subspace k = morphism_kernel(q.projection, kEps);
  CHECK(k.same(m, kEps));
  CHECK(decomposition_ideal_check(b, k, kEps).ok());
}

TEST_CASE("quotient by zero and by everything") {
  DecompositionAlgebra d = peirce_context(2);
  QuotientResult q0 = dec_quotient(d, Subspace(4), kEps);
  CHECK(q0.object.algebra.dim == 4);
  CHECK(verify(q0.object, kEps).valid());
  CHECK(q0.object.axes.has_value());

  QuotientResult qa = dec_quotient(d, Subspace::full(4), kEps);
  CHECK(qa.object.algebra.dim == 0);
  CHECK(verify(qa.object, kEps).valid());
  CHECK(qa.object.index_count() == d.index_count());
}

TEST_CASE("kernels of corpus morphisms are decomposition ideals") {
  std::vector<DecMorphism> corpus;
  corpus.push_back(jordan_corner_embedding(2, 3));
  {
    DecompositionAlgebra graded = pushforward(peirce_context(2), jordan_z2_grading());
    DecompositionAlgebra b = null_plane_extension(graded);
    Subspace m = Subspace::span(6, {[] {
                                      Vector e = vec_zero(6, true);
                                      e[4] = Scalar(1);
                                      return e;
                                    }(),
                                    [] {
                                      Vector f = vec_zero(6, true);
                                      f[5] = Scalar(1);
                                      return f;
                                    }()},
                                kEps);
    corpus.push_back(dec_quotient(b, m, kEps).projection);
    corpus.push_back(null_plane_inclusion(graded, b, {0, 1}, kEps));
  }
  for (const auto& f : corpus) {
    Subspace k = morphism_kernel(f, kEps);
    IdealCheck chk = decomposition_ideal_check(f.source, k, kEps);
    CHECK(chk.ok());
    if (k.dim() < f.source.algebra.dim && k.dim() > 0) {
      QuotientResult q = dec_quotient(f.source, k, kEps);
      CHECK(verify(q.object, kEps).valid());
    }
  }
}
