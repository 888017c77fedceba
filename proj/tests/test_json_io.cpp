#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "decalg/catalog.hpp"
#include "decalg/constructions.hpp"
#include "decalg/json_io.hpp"

using namespace decalg;

namespace {
const std::string kData = DECALG_TEST_DATA_DIR;
const double kEps = 1e-9;
}

TEST_CASE("scalar literals: rational strings, integers, complex objects") {
  CHECK(scalar_from_json(json::parse("\"3/4\"")) == Scalar::ratio(3, 4));
  CHECK(scalar_from_json(json::parse("-7")) == Scalar(-7));
  Scalar z = scalar_from_json(json::parse("{\"re\": 1.5, \"im\": -2.0}"));
  CHECK(z.to_complex() == Complex(1.5, -2.0));
  CHECK(scalar_to_json(Scalar::ratio(1, 2)) == json("1/2"));
  // round trip is the identity on exact values
  for (const Scalar& s : {Scalar(0), Scalar(-3), Scalar::ratio(22, 7)})
    CHECK(scalar_from_json(scalar_to_json(s)) == s);
}

TEST_CASE("law round trip, omitted entries default to empty") {
  for (const FusionLaw& law : {jordan_law(), ising_law(), z2_group_law()}) {
    FusionLaw back = law_from_json(law_to_json(law));
    CHECK(back == law);
  }
  json sparse = json::parse(R"({"elements": ["a", "b"], "table": []})");
  FusionLaw empty = law_from_json(sparse);
  CHECK(empty.entry(0, 0).empty());
  CHECK(empty.entry(1, 0).empty());
}

TEST_CASE("shipped law files parse to the canonical laws") {
  CHECK(law_from_json(load_json_file(kData + "/laws/jordan.json")) == jordan_law());
  CHECK(law_from_json(load_json_file(kData + "/laws/ising.json")) == ising_law());
  CHECK(law_from_json(load_json_file(kData + "/laws/z2.json")) == z2_group_law());
}

TEST_CASE("presentation round trip with inverse markers") {
  Presentation p = finest_grading_presentation(jordan_law());
  Presentation back = presentation_from_json(presentation_to_json(p));
  CHECK(back.generators == p.generators);
  CHECK(back.relators == p.relators);
}

TEST_CASE("group round trip and declared order validation") {
  PermGroup s3 = catalog_group("s3", kData);
  PermGroup back = group_from_json(group_to_json(s3));
  CHECK(back.order() == 6);
  json bad = group_to_json(s3);
  bad["order"] = 7;
  CHECK_THROWS_AS(group_from_json(bad), InvalidObject);
}

TEST_CASE("character table round trip preserves values") {
  CharacterTable t = catalog_table("s3", kData);
  CharacterTable back = character_table_from_json(character_table_to_json(t));
  back.validate(kEps);
  REQUIRE(back.num_chars() == t.num_chars());
  for (std::size_t i = 0; i < t.num_chars(); ++i)
    CHECK(back.values[i] == t.values[i]);
}

TEST_CASE("decomposition algebra round trip: the Peirce bundle") {
  DecompositionAlgebra d = peirce_context(3);
  json doc = decalg_to_json(d);
  DecompositionAlgebra back = decalg_from_json(doc, kEps);
  VerifyReport rep = verify(back, kEps);
  CHECK(rep.valid());
  CHECK(rep.axial());
  CHECK(back.index_names == d.index_names);
  CHECK(*back.unit == *d.unit);
  // serialization is deterministic
  CHECK(decalg_to_json(back).dump() == doc.dump());
}

TEST_CASE("shipped example bundle verifies") {
  DecompositionAlgebra d =
      decalg_from_json(load_json_file(kData + "/examples/peirce_j3.json"), kEps);
  VerifyReport rep = verify(d, kEps);
  CHECK(rep.valid());
  CHECK(rep.axial());
  CHECK(rep.primitive);
}

TEST_CASE("scheme round trip") {
  PermGroup s5 = catalog_group("s5", kData);
  AssociationScheme s = scheme_from_group(s5, pairs_action(s5));
  AssociationScheme back = scheme_from_json(scheme_to_json(s));
  CHECK(back.rel == s.rel);
  CHECK(back.d == s.d);
}

TEST_CASE("law morphism file: jordan to z2") {
  FusionMorphism xi = law_morphism_from_json(
      load_json_file(kData + "/examples/jordan_to_z2.json"), jordan_law());
  CHECK(xi.map() == std::vector<int>{0, 0, 1});
  // mismatched source is rejected
  CHECK_THROWS_AS(law_morphism_from_json(load_json_file(kData + "/examples/jordan_to_z2.json"),
                                         ising_law()),
                  InvalidArgument);
}

TEST_CASE("matrix rep round trip") {
  SignedPermExample ex = signed_perm_centralizer_example();
  json doc = matrix_rep_to_json(ex.rep);
  MatrixRep back = matrix_rep_from_json(doc);
  CHECK(back.dim == 9);
  CHECK(back.gen_images.size() == ex.rep.gen_images.size());
  for (std::size_t i = 0; i < back.gen_images.size(); ++i)
    CHECK(back.gen_images[i] == ex.rep.gen_images[i]);
}
