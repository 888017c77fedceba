#pragma once

#include <json.hpp>

#include "decalg/chartheory.hpp"
#include "decalg/decomp.hpp"
#include "decalg/fpgroup.hpp"
#include "decalg/fusion.hpp"
#include "decalg/miyamoto.hpp"
#include "decalg/permgroup.hpp"
#include "decalg/scheme.hpp"

namespace decalg {

/// Insertion-ordered JSON so identical inputs serialize byte-identically.
using json = nlohmann::ordered_json;

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json law_to_json(const FusionLaw& law);
FusionLaw law_from_json(const json& j);

/// {"target": <law>, "map": {src-label: tgt-label}, "source"?: <law>}
FusionMorphism law_morphism_from_json(const json& j, const FusionLaw& source);

json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json grading_to_json(const AbelianGrading& g);

json group_to_json(const PermGroup& g);
PermGroup group_from_json(const json& j, std::size_t cap = 10000);

json character_table_to_json(const CharacterTable& t);
CharacterTable character_table_from_json(const json& j, std::size_t cap = 10000);

json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

json subspace_to_json(const Subspace& s);

json decalg_to_json(const DecompositionAlgebra& d);
DecompositionAlgebra decalg_from_json(const json& j, double eps);

json scheme_to_json(const AssociationScheme& s);
AssociationScheme scheme_from_json(const json& j);

json matrix_rep_to_json(const MatrixRep& r);
MatrixRep matrix_rep_from_json(const json& j, std::size_t cap = 10000);

/// Characters for a Miyamoto context: "pm1" handled by the caller; this
/// parses {"characters": [{"values": {gamma-label: scalar}}]}.
std::vector<RCharacter> characters_from_json(const json& j, const CayleyTable& gamma);

json verify_report_to_json(const VerifyReport& rep, const DecompositionAlgebra& d);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace decalg
