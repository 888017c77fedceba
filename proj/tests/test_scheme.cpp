#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "decalg/catalog.hpp"
#include "decalg/constructions.hpp"
#include "decalg/scheme.hpp"

using namespace decalg;

namespace {
const std::string kData = DECALG_TEST_DATA_DIR;
const double kEps = 1e-9;

AssociationScheme johnson52() {
  PermGroup s5 = catalog_group("s5", kData);
  return scheme_from_group(s5, pairs_action(s5));
}

PermGroup regular_model(const PermGroup& g) {
  // left-multiplication action of g on itself
  const std::size_t n = g.order();
  std::vector<Perm> gens;
  for (const Perm& gen : g.generators()) {
    int gi = *g.index_of(gen);
    std::vector<int> img(n);
    for (std::size_t t = 0; t < n; ++t) img[t] = g.mult(gi, static_cast<int>(t));
    gens.push_back(Perm(img));
  }
  return PermGroup(static_cast<int>(n), gens, std::max<std::size_t>(n, 2));
}

}  // namespace

TEST_CASE("scheme_from_group: Johnson J(5,2), natural 2-transitive, Z/3 regular") {
  AssociationScheme j = johnson52();
  CHECK(j.n == 10);
  CHECK(j.d == 2);
  CHECK(j.symmetric);
  CHECK(j.verify_axioms().all());

  PermGroup s4 = catalog_group("s4", kData);
  AssociationScheme nat = scheme_from_group(s4, natural_action(s4));
  CHECK(nat.d == 1);
  CHECK(nat.symmetric);

  PermGroup c3 = catalog_group("c3", kData);
  AssociationScheme reg = scheme_from_group(c3, natural_action(c3));
  CHECK(reg.d == 2);
  CHECK_FALSE(reg.symmetric);
  CHECK(reg.transpose_of[1] == 2);
  CHECK(reg.verify_axioms().all());
}

TEST_CASE("axiom (V) fails for the regular action of a non-abelian group") {
  PermGroup s3 = catalog_group("s3", kData);
  PermGroup reg = regular_model(s3);
  CHECK_THROWS_WITH_AS(scheme_from_group(reg, natural_action(reg)),
                       doctest::Contains("axiom (V)"), InvalidObject);
}

TEST_CASE("from_relation_matrix validates and round-trips") {
  AssociationScheme j = johnson52();
  AssociationScheme copy = AssociationScheme::from_relation_matrix(j.rel);
  CHECK(copy.d == j.d);
  CHECK(copy.symmetric == j.symmetric);
  // breaking the diagonal is caught
  auto broken = j.rel;
  broken[0][0] = 1;
  CHECK_THROWS_AS(AssociationScheme::from_relation_matrix(broken), InvalidObject);
}

TEST_CASE("intersection numbers: degree identities") {
  AssociationScheme j = johnson52();
  auto p = j.intersection_numbers();
  // degree of relation i = p_{i i'}^0 with i' the transpose
  std::vector<Int> degree(j.d + 1);
  for (int i = 0; i <= j.d; ++i) degree[i] = p[i][j.transpose_of[i]][0];
  CHECK(degree[0] == 1);
  CHECK(degree[1] + degree[2] == Int(j.n - 1));
  // row identity: sum over j of p_ij^k equals the degree of relation i
  for (int i = 0; i <= j.d; ++i)
    for (int k = 0; k <= j.d; ++k) {
      Int sum = 0;
      for (int jj = 0; jj <= j.d; ++jj) sum += p[i][jj][k];
      CHECK(sum == degree[i]);
    }
  // Johnson J(5,2) is srg(10, 6, 3, 4): spot-check the classical values
  CHECK(degree[1] == 6);
  CHECK(p[1][1][1] == 3);
  CHECK(p[1][1][2] == 4);
}

TEST_CASE("bose_mesner: Johnson eigenspaces, idempotents, Krein parameters") {
  BoseMesner bm = bose_mesner(johnson52(), kEps);
  CHECK(bm.exact);
  REQUIRE(bm.eigenspace_count() == 3);
  CHECK(bm.V[0].dim() == 1);
  CHECK(bm.V[1].dim() == 4);
  CHECK(bm.V[2].dim() == 5);
  // eigenvalues of the triangular graph T(5): 6, 1, -2
  CHECK(bm.eigen[0][1] == Scalar(6));
  CHECK(bm.eigen[1][1] == Scalar(1));
  CHECK(bm.eigen[2][1] == Scalar(-2));
  // E_0 = all-ones / n
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t c = 0; c < 10; ++c)
      CHECK(bm.E[0].at(r, c) == Scalar(Rational(1) / 10));
  // idempotent suite
  Matrix sum(10, 10, true);
  for (std::size_t i = 0; i < 3; ++i) {
    sum = sum + bm.E[i];
    CHECK((bm.E[i] * bm.E[i]) == bm.E[i]);
    for (std::size_t j2 = i + 1; j2 < 3; ++j2) CHECK((bm.E[i] * bm.E[j2]).is_zero(0.0));
  }
  CHECK(sum.is_identity(0.0));
  // Krein condition and the sigma identity
  auto [qmin, qimag] = krein_bounds(bm);
  CHECK(qmin >= -kEps);
  CHECK(qimag <= kEps);
  CHECK(krein_sigma_residual(bm) <= kEps);
}

TEST_CASE("bose_mesner: trivial 2-class scheme has dims {1, n-1}") {
  PermGroup s4 = catalog_group("s4", kData);
  BoseMesner bm = bose_mesner(scheme_from_group(s4, natural_action(s4)), kEps);
  REQUIRE(bm.eigenspace_count() == 2);
  CHECK(bm.V[0].dim() == 1);
  CHECK(bm.V[1].dim() == 3);
  CHECK(krein_sigma_residual(bm) <= kEps);
}

TEST_CASE("bose_mesner: non-symmetric scheme falls back to complex floats") {
  PermGroup c3 = catalog_group("c3", kData);
  BoseMesner bm = bose_mesner(scheme_from_group(c3, natural_action(c3)), kEps);
  CHECK_FALSE(bm.exact);
  REQUIRE(bm.eigenspace_count() == 3);
  for (const auto& v : bm.V) CHECK(v.dim() == 1);
  CHECK(krein_sigma_residual(bm) <= 1e-7);
}

TEST_CASE("norton algebra: V_0 is trivial-flagged, product proportional to axis") {
  PermGroup s4 = catalog_group("s4", kData);
  BoseMesner bm = bose_mesner(scheme_from_group(s4, natural_action(s4)), kEps);
  NortonAlgebra na0 = norton_algebra(bm, 0, kEps);
  CHECK(na0.trivial_flagged);
  CHECK_FALSE(na0.zero_product);
  // a * a is proportional to a in the one-dimensional case
  Vector a{Scalar(1)};
  Vector prod = na0.algebra.multiply(a, a);
  CHECK_FALSE(vec_is_zero(prod, kEps));
  CHECK_THROWS_AS(norton_algebra(bm, 5, kEps), InvalidArgument);
}

TEST_CASE("norton algebra: commutative, nonzero iff q_iii nonzero") {
  BoseMesner bm = bose_mesner(johnson52(), kEps);
  NortonAlgebra na = norton_algebra(bm, 1, kEps);
  CHECK(na.algebra.is_commutative(0.0));
  Scalar q111 = bm.q[1][1][1];
  CHECK(na.zero_product == q111.is_zero(kEps));
}

TEST_CASE("norton certificate: Johnson scheme, eigenspace 1") {
  BoseMesner bm = bose_mesner(johnson52(), kEps);
  NortonCertificate cert = norton_axial_certificate(bm, 1, kEps);
  CHECK(cert.dec.index_count() == 10);
  CHECK(cert.complete_eigenbasis);
  CHECK(cert.certified);
  VerifyReport rep = verify(cert.dec, kEps);
  CHECK(rep.valid());
  CHECK(rep.axial());
  // each axis is an eigenvector of its own ad with eigenvalue q_ii^i / n
  Scalar own = bm.q[1][1][1] / Scalar(10);
  CHECK((*cert.dec.lambda)[*cert.dec.unit] == own);
}

TEST_CASE("norton certificate: trivial 2-class scheme") {
  PermGroup s4 = catalog_group("s4", kData);
  BoseMesner bm = bose_mesner(scheme_from_group(s4, natural_action(s4)), kEps);
  NortonCertificate cert = norton_axial_certificate(bm, 1, kEps);
  CHECK(cert.complete_eigenbasis);
  VerifyReport rep = verify(cert.dec, kEps);
  CHECK(rep.valid());
  CHECK(rep.axial());
}

TEST_CASE("norton certificate: non-symmetric scheme is flagged, 1-dim spaces work") {
  PermGroup c3 = catalog_group("c3", kData);
  BoseMesner bm = bose_mesner(scheme_from_group(c3, natural_action(c3)), kEps);
  NortonCertificate cert = norton_axial_certificate(bm, 1, kEps);
  CHECK_FALSE(cert.certified);
  CHECK(cert.note.find("non-symmetric") != std::string::npos);
  CHECK(verify(cert.dec, 1e-7).valid());
}

TEST_CASE("refine_with_centralizer: transpositions of S3") {
  PermGroup s3 = catalog_group("s3", kData);
  Perm x({1, 0, 2});
  PermAction action = conjugation_action(s3, x);
  REQUIRE(is_generously_transitive(s3, action));
  AssociationScheme s = scheme_from_group(s3, action);
  BoseMesner bm = bose_mesner(s, kEps);
  CharacterTable h_table = abelian_character_table(s3.centralizer(x));
  CentralizerRefinement ref = refine_with_centralizer(bm, 1, s3, x, h_table, kEps);
  CHECK(verify(ref.refined, kEps).valid());
  CHECK(ref.grading_is_morphism);
  CHECK(ref.miyamoto_matches_rho);
  CHECK(ref.rho_group_order == 6);
  // trivial refinement: H = 1 leaves the eigenspace decomposition unchanged
  CharacterTable trivial_table = abelian_character_table(PermGroup(3, {}));
  CHECK_THROWS_AS(refine_with_centralizer(bm, 1, s3, x, trivial_table, kEps),
                  InvalidArgument);  // the trivial group is not the centralizer
}

TEST_CASE("refine_with_centralizer: rho(x) is an algebra automorphism of V_1") {
  PermGroup s3 = catalog_group("s3", kData);
  Perm x({1, 0, 2});
  AssociationScheme s = scheme_from_group(s3, conjugation_action(s3, x));
  BoseMesner bm = bose_mesner(s, kEps);
  CharacterTable h_table = abelian_character_table(s3.centralizer(x));
  CentralizerRefinement ref = refine_with_centralizer(bm, 1, s3, x, h_table, kEps);
  NortonAlgebra na = norton_algebra(bm, 1, kEps);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Vector ea = vec_zero(2, true), eb = vec_zero(2, true);
      ea[a] = Scalar(1);
      eb[b] = Scalar(1);
      Vector lhs = ref.rho_x * na.algebra.multiply(ea, eb);
      Vector rhs = na.algebra.multiply(ref.rho_x * ea, ref.rho_x * eb);
      CHECK(vec_is_zero(vec_sub(lhs, rhs), kEps));
    }
}

TEST_CASE("axiom brute force suite on every built scheme") {
  std::vector<AssociationScheme> schemes;
  schemes.push_back(johnson52());
  PermGroup s4 = catalog_group("s4", kData);
  schemes.push_back(scheme_from_group(s4, natural_action(s4)));
  PermGroup c5 = catalog_group("c5", kData);
  schemes.push_back(scheme_from_group(c5, natural_action(c5)));
  PermGroup d4 = catalog_group("d4", kData);
  schemes.push_back(scheme_from_group(d4, natural_action(d4)));
  for (const auto& s : schemes) {
    auto rep = s.verify_axioms();
    CHECK(rep.all());
  }
}
