#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "decalg/constructions.hpp"
#include "decalg/fusion.hpp"
#include "decalg/permgroup.hpp"

using namespace decalg;

TEST_CASE("classify: Jordan and Ising distinguished elements") {
  FusionLaw j = jordan_law();
  auto fe = j.classify(j.require("e"));
  CHECK(fe.unit);
  CHECK_FALSE(fe.annihilating);
  CHECK_FALSE(fe.absorbing);
  auto fh = j.classify(j.require("h"));
  CHECK_FALSE(fh.unit);
  CHECK_FALSE(fh.annihilating);
  CHECK_FALSE(fh.absorbing);
  CHECK(j.units() == std::vector<int>{0, 1});

  FusionLaw i = ising_law();
  CHECK(i.classify(i.require("e")).unit);
  CHECK(i.classify(i.require("z")).unit);
  CHECK_FALSE(i.classify(i.require("q")).unit);

  CHECK_THROWS_AS(j.classify(17), InvalidArgument);
}

TEST_CASE("classify: one-element empty law is unit, annihilating, absorbing") {
  FusionLaw law = FusionLaw::empty_law({"x"});
  auto f = law.classify(0);
  CHECK(f.unit);
  CHECK(f.annihilating);
  CHECK(f.absorbing);
}

TEST_CASE("distinct units never fuse") {
  CHECK(jordan_law().distinct_unit_violations().empty());
  CHECK(ising_law().distinct_unit_violations().empty());
  CHECK(z2_group_law().distinct_unit_violations().empty());
  // the lemma is a theorem: making e*f nonempty destroys unit-hood of one
  // side, so the violation list stays empty for every well-formed table
  FusionLaw probe = FusionLaw::empty_law({"e", "f"});
  probe.set_entry(0, 0, {0});
  probe.set_entry(1, 1, {1});
  probe.set_entry(0, 1, {0});
  CHECK(probe.units() == std::vector<int>{1});
  CHECK(probe.distinct_unit_violations().empty());
}

TEST_CASE("product law: unit law is neutral, empty law absorbs") {
  FusionLaw one = FusionLaw::empty_law({"x"});
  one.set_entry(0, 0, {0});
  FusionLaw j = jordan_law();
  FusionLaw p = product_law(j, one);
  REQUIRE(p.size() == j.size());
  for (std::size_t x = 0; x < j.size(); ++x)
    for (std::size_t y = 0; y < j.size(); ++y) {
      const auto& cell = p.entry(static_cast<int>(x), static_cast<int>(y));
      CHECK(cell == j.entry(static_cast<int>(x), static_cast<int>(y)));
    }

  FusionLaw empty2 = FusionLaw::empty_law({"a", "b"});
  FusionLaw pe = product_law(empty2, j);
  for (std::size_t x = 0; x < pe.size(); ++x)
    for (std::size_t y = 0; y < pe.size(); ++y)
      CHECK(pe.entry(static_cast<int>(x), static_cast<int>(y)).empty());
}

TEST_CASE("product law: Z/2 x Z/2 is the group law of the Klein four group") {
  FusionLaw z2 = z2_group_law();
  FusionLaw p = product_law(z2, z2);
  // direct table enumeration oracle: (a1,b1)*(a2,b2) = (a1+a2, b1+b2)
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          const auto& cell = p.entry(a1 * 2 + b1, a2 * 2 + b2);
          REQUIRE(cell.size() == 1);
          CHECK(cell[0] == ((a1 + a2) % 2) * 2 + (b1 + b2) % 2);
        }
  CayleyTable t = cayley_from_group_law(p);
  CHECK(t.order() == 4);
}

TEST_CASE("product projections and union inclusions are morphisms") {
  std::vector<FusionLaw> laws{jordan_law(), ising_law(), z2_group_law(),
                              FusionLaw::empty_law({"a", "b"})};
  for (const auto& a : laws)
    for (const auto& b : laws) {
      CHECK_NOTHROW(product_projection(a, b, 0));
      CHECK_NOTHROW(product_projection(a, b, 1));
      CHECK_NOTHROW(union_inclusion(a, b, 0));
      CHECK_NOTHROW(union_inclusion(a, b, 1));
    }
}

TEST_CASE("union law: Jordan with Ising, cross entries empty, labels renamed") {
  FusionLaw u = union_law(jordan_law(), ising_law());
  CHECK(u.size() == 7);
  // colliding labels e, z got renamed on the Ising side
  CHECK(u.index_of("e'"));
  CHECK(u.index_of("z'"));
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 3; y < 7; ++y) {
      CHECK(u.entry(static_cast<int>(x), static_cast<int>(y)).empty());
      CHECK(u.entry(static_cast<int>(y), static_cast<int>(x)).empty());
    }

  FusionLaw a = jordan_law();
  FusionLaw ue = union_law(a, FusionLaw::empty_law({}));
  CHECK(ue == a);
}

TEST_CASE("group fusion law: singleton cells, unique unit") {
  PermGroup s3(3, {Perm({1, 0, 2}), Perm({1, 2, 0})});
  FusionLaw law = group_fusion_law(s3);
  CHECK(law.size() == 6);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y)
      CHECK(law.entry(static_cast<int>(x), static_cast<int>(y)).size() == 1);
  CHECK(law.units().size() == 1);

  // S3 Cayley oracle: the table of the law equals the group's own table
  CayleyTable t = s3.cayley_table();
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y)
      CHECK(law.entry(static_cast<int>(x), static_cast<int>(y))[0] == t.mult[x][y]);

  PermGroup trivial(1, {});
  FusionLaw tl = group_fusion_law(trivial);
  CHECK(tl.size() == 1);
  CHECK(tl.entry(0, 0) == std::vector<int>{0});

  // non-group input is rejected
  CayleyTable bad;
  bad.labels = {"a", "b"};
  bad.identity = 0;
  bad.mult = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(group_fusion_law(bad), InvalidObject);
}

TEST_CASE("morphism: identity always valid, composition matches") {
  FusionLaw j = jordan_law();
  FusionMorphism id = FusionMorphism::identity(j);
  FusionMorphism grade = jordan_z2_grading();
  FusionMorphism idz = FusionMorphism::identity(z2_group_law());
  CHECK(compose(idz, grade).map() == grade.map());
  CHECK(compose(grade, id).map() == grade.map());

  // swapping the grading values is not a morphism (e*e = {e} needs xi(e)=0)
  CHECK_THROWS_AS(FusionMorphism(j, z2_group_law(), std::vector<int>{1, 0, 1}),
                  InvalidObject);
}

TEST_CASE("Sym(3) action on omega(x,y,z): Jordan and Ising are invariant") {
  FusionLaw j = jordan_law();
  FusionLaw i = ising_law();
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                        {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& p : perms) {
    CHECK(apply_role_permutation(j, p) == j);
    CHECK(apply_role_permutation(i, p) == i);
  }
  // a non-symmetric law is moved by the swap of the two argument roles
  FusionLaw ns = FusionLaw::empty_law({"a", "b"});
  ns.set_entry(0, 1, {0});
  CHECK_FALSE(apply_role_permutation(ns, {1, 0, 2}) == ns);
  CHECK_FALSE(ns.is_symmetric());
  CHECK(jordan_law().is_symmetric());
}
